#pragma once

#include <map>
#include <string>
#include <vector>

#include "uniprod/freecalc.hpp"
#include "uniprod/pattern.hpp"
#include "uniprod/polyexpr.hpp"

namespace uniprod {

// A factorization rule for one shape class. The right-hand side is written
// in the letters of `rep`; its coefficients are rationals, possibly with
// residual parameters for families that survived the constraints.
struct Rule {
    MomentSymbol rep;
    PolyExpr rhs;
    std::string provenance;

    std::string key() const { return render_symbol(rep); }
};

// Rules staged so far, keyed by class representative.
class RuleSet {
  public:
    Factorizer first_order = Factorizer::free_product;

    void add(Rule r);
    const Rule* find(const std::string& key) const;
    std::vector<std::string> keys() const;

  private:
    std::map<std::string, Rule> rules_;
};

// Everything symbol expansion needs: the staged rules, the rule currently
// being derived (its ansatz, consulted before the staged set so
// self-referential shapes resolve), the symmetry flags, and whether mixed
// first-order moments resolve through staged rules rather than a fixed
// factorizer.
struct ExpansionCtx {
    const RuleSet& rules;
    const Rule* current = nullptr;
    SymmetryFlags flags;
    bool first_order_via_rules = false;
};

const Rule* find_rule(const std::string& key, const ExpansionCtx& ec);

// Rewrites a class rule in the letters of a concrete instance of the class.
PolyExpr instantiate_class_rule(const ShapeClass& cls, const Rule& rule,
                                const SymmetryFlags& flags);

// Fully expands one symbol into atomic (single-algebra) monomials. Throws
// StagingError when a needed class rule has not been staged.
PolyExpr expand_symbol(const MomentSymbol& s, const ExpansionCtx& ec);

// Monomial-wise expansion of a whole expression.
PolyExpr expand_expr(const PolyExpr& e, const ExpansionCtx& ec);

}  // namespace uniprod
