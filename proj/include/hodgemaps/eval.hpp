#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hodgemaps::eval {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

// Suites: "invariants" (spectral/structural checks), "convergence" (circle
// estimator), "paper" (reference-experiment reproduction), "all".
std::vector<CriterionResult> run_suite(const std::string& suite, int threads, unsigned seed);

bool all_passed(const std::vector<CriterionResult>& results);

void print_results(const std::vector<CriterionResult>& results, std::ostream& out);

}  // namespace hodgemaps::eval
