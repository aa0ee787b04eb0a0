#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "uniprod/polyexpr.hpp"
#include "uniprod/rational.hpp"
#include "uniprod/symbols.hpp"
#include "uniprod/wick.hpp"

namespace uniprod {

// A product of powers of independent ensemble matrices.  Algebra ids map to
// display names A, B, C, ...
struct MatrixWord {
    std::vector<std::pair<int, int>> powers;  // (algebra id, exponent >= 1)

    TraceWord letters() const;
    std::string render() const;
};

struct EnsembleSpec {
    int dim = 200;
};

struct MomentEstimate {
    double value = 0.0;
    double standard_error = 0.0;
    int samples = 0;
    std::uint64_t seed = 0;
};

// Deterministic GUE draw: Hermitian, entry variance 1/dim, addressed purely
// by (seed, algebra, draw).
Eigen::MatrixXcd sample_matrix(const EnsembleSpec& spec, std::uint64_t seed,
                               int algebra, int draw);

// Mean of the normalized trace over draws.
MomentEstimate estimate_phi1(const MatrixWord& word, const EnsembleSpec& spec,
                             int samples, std::uint64_t seed);

// Sample covariance of the two unnormalized traces over shared draws.
MomentEstimate estimate_phi2(const MatrixWord& lhs, const MatrixWord& rhs,
                             const EnsembleSpec& spec, int samples,
                             std::uint64_t seed);

// Exact substitution of moment values into a rule right-hand side; keys are
// rendered moment symbols.  Missing symbols raise IncompleteLimitsError.
Rational evaluate_rule(const PolyExpr& rule,
                       const std::map<std::string, Rational>& limits);

// Large-dimension limits, via the exact pairing oracle, of every moment
// symbol appearing in a rule under a letter -> matrix word assignment.
std::map<std::string, Rational> wick_limits(
    const PolyExpr& rule, const std::map<std::string, MatrixWord>& images);

struct LabRow {
    std::string instance;
    int dim = 0;
    int samples = 0;
    std::uint64_t seed = 0;
    double estimate = 0.0;
    double standard_error = 0.0;
    double prediction_1 = 0.0;
    double prediction_2 = 0.0;
    std::string verdict;
    bool pass = false;
};

// Listed in the order the registry defines them.
std::vector<std::string> lab_instances();

// Predictions must differ by more than six times this design target before a
// discrimination run is considered meaningful.
inline constexpr double kAprioriStderrTarget = 0.25;

// Measures the instantiated pattern and compares against the two candidate
// right-hand sides evaluated at exact pairing limits.  Throws
// InconclusiveInstanceError when the predictions are too close.
LabRow discriminate(const std::string& name, const MomentSymbol& pattern,
                    const std::map<std::string, MatrixWord>& images,
                    const PolyExpr& rhs_1, const PolyExpr& rhs_2,
                    const EnsembleSpec& spec, int samples, std::uint64_t seed);

// Measures a single moment against an exact reference value; both prediction
// columns carry the reference.
LabRow baseline_row(const std::string& name, int order, const MatrixWord& lhs,
                    const MatrixWord& rhs, const Rational& reference,
                    const EnsembleSpec& spec, int samples, std::uint64_t seed);

// Dispatches a named instance, deriving the candidate rules internally when
// the instance discriminates between them.
LabRow run_instance(const std::string& name, const EnsembleSpec& spec,
                    int samples, std::uint64_t seed);

std::string lab_rows_csv(const std::vector<LabRow>& rows);

}  // namespace uniprod
