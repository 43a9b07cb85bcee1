#pragma once

#include <string>
#include <vector>

namespace flataffine {

/// One acceptance criterion of the reproduction suite.
struct CriterionResult {
    int index = 0;
    std::string name;
    bool pass = false;
    double seconds = 0;
    std::vector<std::string> notes; // errata and failure diagnostics
};

/// Runs acceptance criterion 1..11; throws std::out_of_range otherwise.
CriterionResult run_criterion(int index);

std::vector<CriterionResult> run_all_criteria();

} // namespace flataffine
