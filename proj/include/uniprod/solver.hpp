#pragma once

#include <map>
#include <string>
#include <vector>

#include "uniprod/ansatz.hpp"
#include "uniprod/constraints.hpp"
#include "uniprod/rules.hpp"

namespace uniprod {

// One consistent case of the constraint system. Assignments are triangular:
// each value mentions only variables listed in free_params. Residual holds
// constraints the elimination could not resolve, normalized and sorted.
struct SolutionBranch {
    std::map<std::string, CoeffPoly, VarNaturalLess> assignments;
    std::vector<std::string> free_params;
    std::vector<CoeffPoly> residual;
    std::vector<std::string> path;  // branching decisions, in order
};

inline constexpr std::size_t kDefaultBranchCap = 64;
inline constexpr std::size_t kMaxConstraints = 200;
inline constexpr std::size_t kMaxUnknowns = 64;

// Exact elimination: repeated substitution and row reduction over the
// rationals, peeling off linear rows; products and split univariates open
// new branches (FIFO, capped). Results are deduplicated, in discovery
// order.
std::vector<SolutionBranch> solve(const ConstraintSet& cs,
                                  const std::vector<std::string>& unknowns,
                                  std::size_t branch_cap = kDefaultBranchCap);

// Every original constraint must substitute to zero or fall in the linear
// span of the branch residual.
bool verify_branch(const ConstraintSet& cs, const SolutionBranch& b);

// Whether a full point (a value for every unknown, free parameters
// included) satisfies the branch: assignments hold and residual vanishes.
bool branch_contains(const SolutionBranch& b,
                     const std::map<std::string, Rational, VarNaturalLess>& point);

// The branch's reporting point: free parameters pinned to one. Requires an
// empty residual.
std::map<std::string, Rational, VarNaturalLess> branch_point(
    const SolutionBranch& b, const std::vector<std::string>& unknowns);

// Rule obtained by pinning the branch's free parameters to one. Throws
// NotFullySolvedError when the residual is nonempty.
Rule normalize_branch_rule(const Ansatz& a, const SolutionBranch& b,
                           const std::string& provenance = "normalized branch");

}  // namespace uniprod
