#pragma once

#include <string>
#include <vector>

namespace dimer {

struct VerifyResult {
    std::string invariant;
    bool passed = false;
    std::string detail;  // mismatch description when failed
};

// Runs the oracle-equivalence and property suite over all grids with at most
// max_cells cells. Every invariant is reported; none aborts the run.
std::vector<VerifyResult> run_verification(int max_cells = 36, int threads = 0);

}  // namespace dimer
