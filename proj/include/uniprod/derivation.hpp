#pragma once

#include <map>
#include <string>
#include <vector>

#include "uniprod/ansatz.hpp"
#include "uniprod/constraints.hpp"
#include "uniprod/pattern.hpp"
#include "uniprod/rules.hpp"
#include "uniprod/solver.hpp"

namespace uniprod {

// Where a symbolic context parameter came from: the class whose staged rule
// kept a free coefficient, that coefficient's name inside the stage's own
// derivation, and the ansatz monomial it multiplies.
struct ParamOrigin {
    MomentSymbol rep;
    std::string unknown;
    Monomial monomial;

    std::string class_key() const { return render_symbol(rep); }
};

using ParamRegistry = std::map<std::string, ParamOrigin>;

// One staged pipeline state: rules resolved so far, the branch choices that
// led here, and the parameters still alive inside those rules.
struct StageContext {
    RuleSet rules;
    std::vector<std::string> path;
    ParamRegistry params;
};

// A pinned observation: one bracketing of one instance contributes exactly
// this coefficient polynomial on this monomial. Recorded whenever some
// feasible route carries a one-term coefficient of degree >= 2, the
// signature of a genuinely nonlinear interaction between stages.
struct SpotCheck {
    std::string instance;
    std::string route;
    Monomial monomial;
    CoeffPoly coefficient;
};

struct BranchReport {
    SolutionBranch branch;
    bool verified = false;
    bool normalizable = false;
    Rule normalized;  // meaningful only when normalizable
};

// Everything one (pattern, context) derivation produced.
struct DerivationReport {
    Pattern pattern;
    Ansatz ansatz;
    Factorizer first_order = Factorizer::free_product;
    bool first_order_via_rules = false;
    std::vector<std::string> context_path;
    ParamRegistry params;

    std::vector<UnitCheck> units;
    ExchangeResult exchange;
    bool phi2_symmetry_applicable = false;
    ConstraintSet phi2_symmetry;
    bool traciality_applicable = false;
    ConstraintSet traciality;
    std::vector<AssociativityCheck> associativity;
    std::vector<SpotCheck> spot_checks;

    ConstraintSet combined;
    std::vector<std::string> unknowns;  // ansatz unknowns, then live parameters
    std::vector<BranchReport> branches;
    std::vector<std::string> notices;
    std::size_t branch_cap = kDefaultBranchCap;
};

// Full constraint pipeline for one pattern under one staged context:
// ansatz, unit checks, exchange, the symmetry bookkeeping that the
// canonical forms absorb, associativity instances, combined solve, branch
// verification, and normalization of every fully resolved branch.
DerivationReport derive_rule(const Pattern& p, const StageContext& ctx,
                             bool first_order_via_rules = false,
                             std::size_t branch_cap = kDefaultBranchCap);

// Every shape class of the given order with exactly `letters` letters drawn
// from at least two algebras, class keys ascending.
std::vector<MomentSymbol> shape_classes(int order, int letters, const SymmetryFlags& flags);

// Derives `p` after resolving every smaller class of the same order, in
// increasing letter count, forking the context wherever a stage has several
// consistent branches. One report per surviving context.
std::vector<DerivationReport> derive_pattern(const Pattern& p,
                                             Factorizer first_order = Factorizer::free_product,
                                             std::size_t branch_cap = kDefaultBranchCap);

enum class BranchChoice { candidate_1, candidate_2, all };

// Like derive_pattern, but the four-letter balanced class is staged even
// when the target has no more letters than it, restricted to the chosen
// candidate rule(s). This is the probe for life beyond the fork.
std::vector<DerivationReport> explore_pattern(const Pattern& p, BranchChoice choice,
                                              Factorizer first_order = Factorizer::free_product,
                                              std::size_t branch_cap = kDefaultBranchCap);

// The reference chain: the cross-covariance pattern, the one-sided insertion
// pattern, and the balanced four-letter pattern, in that order, under
// default flags with free first-order factorization. Every intermediate is
// checked against its expected form; the first mismatch raises
// AssertionDiff naming the offending constraint or branch.
struct PaperReproduction {
    std::vector<DerivationReport> reports;
};
PaperReproduction reproduce_paper();

// First-order classification: every mixed first-order class is derived in
// increasing word length, with mixed moments inside the checks resolved
// through the staged rules themselves rather than any fixed model. Families
// that survive keep their free coefficients as symbolic parameters.
struct ClassificationResult {
    int max_letters = 4;
    std::vector<DerivationReport> reports;
    std::vector<StageContext> final_contexts;
};
ClassificationResult classify_first_order(int max_letters = 4);

// Coefficient point a concrete model induces on a first-order ansatz: each
// unknown takes the model's coefficient on its monomial.
std::map<std::string, Rational, VarNaturalLess> model_point(const Ansatz& a, Factorizer model);

// Same, extended to the report's live context parameters via their origins.
std::map<std::string, Rational, VarNaturalLess> model_point(const DerivationReport& r,
                                                            Factorizer model);

}  // namespace uniprod
