#include "itconn/hdiff.hpp"

namespace itconn::hdiff {

cga::DescPtr dif_descriptor(std::vector<std::string> base_vars, unsigned N) {
    auto d = std::make_shared<cga::Descriptor>();
    d->kind = cga::Kind::Dif;
    d->N = N;
    for (const auto& v : base_vars)
        for (unsigned i = 1; i <= N; ++i) d->symbols.push_back({"d" + std::to_string(i) + "_" + v, i});
    d->base_vars = std::move(base_vars);
    return d;
}

}  // namespace itconn::hdiff
