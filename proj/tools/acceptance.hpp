#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace itconn::acceptance {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    uint64_t checks = 0;  // individual identities verified
    std::string detail;   // first failure, or a short summary
    double seconds = 0;
};

constexpr int kCriteria = 11;

uint64_t default_seed();  // ITCONN_SEED, else a fixed value

CriterionResult run_criterion(int id, uint64_t seed);
// Runs the given criteria (all when empty) concurrently; results come back
// ordered by id.
std::vector<CriterionResult> run_suite(uint64_t seed, std::vector<int> ids = {});

}  // namespace itconn::acceptance
