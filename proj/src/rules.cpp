#include "uniprod/rules.hpp"

#include "uniprod/errors.hpp"

namespace uniprod {

void RuleSet::add(Rule r) {
    std::string key = r.key();
    rules_[key] = std::move(r);
}

const Rule* RuleSet::find(const std::string& key) const {
    auto it = rules_.find(key);
    return it == rules_.end() ? nullptr : &it->second;
}

std::vector<std::string> RuleSet::keys() const {
    std::vector<std::string> out;
    out.reserve(rules_.size());
    for (const auto& [k, r] : rules_) out.push_back(k);
    return out;
}

const Rule* find_rule(const std::string& key, const ExpansionCtx& ec) {
    if (ec.current && ec.current->key() == key) return ec.current;
    return ec.rules.find(key);
}

PolyExpr instantiate_class_rule(const ShapeClass& cls, const Rule& rule,
                                const SymmetryFlags& flags) {
    LetterImages images;
    for (const auto& [rep, input] : cls.rep_to_input) images[rep] = Word{input};
    return rule.rhs.instantiated(images, flags);
}

namespace {

PolyExpr expand_symbol_rec(const MomentSymbol& s, const ExpansionCtx& ec, int depth);

PolyExpr expand_expr_rec(const PolyExpr& e, const ExpansionCtx& ec, int depth) {
    PolyExpr out;
    for (const auto& [mono, coeff] : e.terms()) {
        PolyExpr prod{coeff};
        for (const auto& f : mono.factors) prod = prod * expand_symbol_rec(f, ec, depth);
        out = out + prod;
    }
    return out;
}

PolyExpr expand_symbol_rec(const MomentSymbol& s, const ExpansionCtx& ec, int depth) {
    if (depth > 32) throw InternalError("symbol expansion recursed too deep");
    CanonSymbol c = canonicalize_symbol(s, ec.flags);
    if (c.kind == CanonSymbol::Kind::zero) return PolyExpr{};
    if (c.kind == CanonSymbol::Kind::one) return PolyExpr{Rational(1)};
    if (symbol_single_algebra(c.sym))
        return PolyExpr::symbol_term(CoeffPoly(Rational(1)), c.sym, ec.flags);

    if (c.sym.order == 1 && !ec.first_order_via_rules)
        return factorize(c.sym.args[0], ec.rules.first_order, ec.flags);

    ShapeClass cls = compute_class(c.sym, ec.flags);
    const Rule* rule = find_rule(cls.key(), ec);
    if (!rule)
        throw StagingError("no staged rule for shape " + cls.key(), cls.key());
    return expand_expr_rec(instantiate_class_rule(cls, *rule, ec.flags), ec, depth + 1);
}

}  // namespace

PolyExpr expand_symbol(const MomentSymbol& s, const ExpansionCtx& ec) {
    return expand_symbol_rec(s, ec, 0);
}

PolyExpr expand_expr(const PolyExpr& e, const ExpansionCtx& ec) {
    return expand_expr_rec(e, ec, 0);
}

}  // namespace uniprod
