#ifndef ANGELESCO_VERIFY_HPP
#define ANGELESCO_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

namespace angelesco {

struct VerificationCase {
    std::string inputs;
    bool pass;
    double margin;
    std::string detail;
};

struct VerificationReport {
    std::string suite;
    std::string grid;
    std::vector<VerificationCase> cases;
    bool pass;  // true iff every case passes
    double elapsed_seconds;
};

/// Optional parameter overrides for a suite's default grid.  A suite whose
/// hypotheses the override violates (e.g. monotone-beta-symmetric with
/// a != -1) throws std::invalid_argument.
struct SuiteOverrides {
    std::optional<double> a;
    std::optional<double> alpha;
    std::optional<double> beta;
    std::optional<double> gamma;
};

const std::vector<std::string>& suite_names();

/// Runs one of: interlacing, monotone-alpha, monotone-gamma,
/// monotone-beta-symmetric, monotone-beta-exploratory, symmetry,
/// oracle-equivalence, limits, corollaries, expansion-diagnostic.
/// Unknown names throw std::invalid_argument.
VerificationReport run_suite(const std::string& name, int n_max,
                             const SuiteOverrides& ov = {});

}  // namespace angelesco

#endif
