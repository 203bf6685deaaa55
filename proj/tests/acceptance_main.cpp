#include <cstdlib>
#include <iostream>

#include "kappa/acceptance.hpp"

int main(int argc, char** argv) {
    kappa::AcceptanceOptions options;
    if (argc > 1) options.seed = std::strtoull(argv[1], nullptr, 10);
    int failed = 0;
    for (int id = 1; id <= kappa::kCriterionCount; ++id) {
        const auto result = kappa::run_criterion(id, options);
        std::cout << kappa::format_result(result) << std::endl;
        failed += result.pass ? 0 : 1;
    }
    std::cout << (kappa::kCriterionCount - failed) << "/" << kappa::kCriterionCount << " criteria passed" << std::endl;
    return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
