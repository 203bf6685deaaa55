#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace kappa {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

struct AcceptanceOptions {
    std::uint64_t seed = 42;
};

inline constexpr int kCriterionCount = 10;

CriterionResult run_criterion(int id, const AcceptanceOptions& options = {});

/// One line: "PASS [id] title: detail (seconds)".
std::string format_result(const CriterionResult& result);

}  // namespace kappa
