#pragma once

#include <string>
#include <vector>

#include "uniprod/ansatz.hpp"
#include "uniprod/rules.hpp"

namespace uniprod {

// Polynomial constraints on the ansatz unknowns, each stored normalized
// (integer content removed, leading coefficient positive), sorted, deduped.
class ConstraintSet {
  public:
    void add(const CoeffPoly& p);
    void merge(const ConstraintSet& o);

    const std::vector<CoeffPoly>& items() const { return items_; }
    bool contains(const CoeffPoly& p) const;  // up to normalization and sign
    bool empty() const { return items_.empty(); }
    std::size_t size() const { return items_.size(); }

  private:
    std::vector<CoeffPoly> items_;
};

// One constraint per monomial present on either side: coeff(lhs) - coeff(rhs).
ConstraintSet match_coefficients(const PolyExpr& lhs, const PolyExpr& rhs);

// Setting one pattern letter to the unit of its algebra: the reduced moment
// must equal the ansatz with that letter dropped.
struct UnitCheck {
    Letter letter;
    ConstraintSet constraints;
};
std::vector<UnitCheck> unit_constraints_by_letter(const Ansatz& a, const RuleSet& ctx,
                                                  bool first_order_via_rules = false);
ConstraintSet unit_constraints(const Ansatz& a, const RuleSet& ctx,
                               bool first_order_via_rules = false);

// Swapping the two algebra labels. Constraints are generated only when the
// swapped pattern lands back on itself; otherwise `notice` explains why.
struct ExchangeResult {
    bool applicable = false;
    ConstraintSet constraints;
    std::string notice;
};
ExchangeResult exchange_symmetry_constraints(const Ansatz& a);

// Coefficient identifications forced by the symmetry of the second-order
// functional in its two slots. Empty when the canonical forms already
// absorb the swap.
ConstraintSet phi2_symmetry_constraints(const Ansatz& a);

// Coefficient identifications forced by traciality: cyclic rotation of
// phi1 words and of each phi2 argument word.
ConstraintSet traciality_constraints(const Ansatz& a);

// Instances probing associativity: each letter of one algebra is replaced
// by a product of two fresh letters, in every relative orientation, and the
// results are deduplicated by shape class.
std::vector<MomentSymbol> associativity_instances(const Pattern& p);

// One way of bracketing an instance: the algebras in `group` are treated
// as a single combined algebra, the current rule is applied at the outer
// level, and every inner mixed moment is expanded recursively.
struct RouteExpansion {
    std::vector<std::string> group;
    std::string label;  // e.g. "a|bc"
    bool feasible = false;
    std::string missing_shape;  // set when not feasible
    PolyExpr expansion;
};
std::vector<RouteExpansion> expand_routes(const MomentSymbol& instance, const ExpansionCtx& ec);

struct AssociativityCheck {
    MomentSymbol instance;
    std::vector<RouteExpansion> routes;
    ConstraintSet constraints;
    std::vector<std::string> notices;
};

// Matches the first feasible route's expansion against every other feasible
// route. Throws StagingError when no route is feasible at all.
AssociativityCheck associativity_constraints(const MomentSymbol& instance, const Ansatz& a,
                                             const RuleSet& ctx,
                                             bool first_order_via_rules = false);

}  // namespace uniprod
