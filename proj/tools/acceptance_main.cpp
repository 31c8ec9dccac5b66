// Prints one PASS/FAIL line per acceptance criterion. Optional arguments
// restrict the run to the listed criterion numbers.
#include <cstdio>
#include <string>

#include "acceptance.hpp"
#include "itconn/errors.hpp"

int main(int argc, char** argv) {
    using namespace itconn::acceptance;
    try {
        std::vector<int> ids;
        for (int i = 1; i < argc; ++i) ids.push_back(std::stoi(argv[i]));
        const uint64_t seed = default_seed();
        std::printf("seed %llu\n", static_cast<unsigned long long>(seed));
        bool all = true;
        for (const auto& r : run_suite(seed, ids)) {
            std::printf("%s C%d %s [%s] %.2fs\n", r.pass ? "PASS" : "FAIL", r.id, r.title.c_str(),
                        r.detail.c_str(), r.seconds);
            all = all && r.pass;
        }
        return all ? 0 : 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
