#pragma once

#include <functional>
#include <string>
#include <vector>

namespace eigenstrata {

struct CriterionResult {
    int id = 0;
    std::string name;
    double value = 0.0;  // worst observed quantity (see detail for the metric)
    double bound = 0.0;
    bool pass = false;
    std::string detail;
};

// fast: analytic checks only; full adds the Monte Carlo criteria.
// report is called after each criterion finishes.
std::vector<CriterionResult> run_acceptance(bool full,
                                            const std::function<void(const CriterionResult&)>& report = {});

std::string to_json(const std::vector<CriterionResult>& results);

}  // namespace eigenstrata
