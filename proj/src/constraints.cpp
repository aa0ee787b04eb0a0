#include "uniprod/constraints.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "uniprod/errors.hpp"

namespace uniprod {

void ConstraintSet::add(const CoeffPoly& p) {
    CoeffPoly n = p.normalized();
    if (n.is_zero()) return;
    auto it = std::lower_bound(items_.begin(), items_.end(), n, PolyLess{});
    if (it != items_.end() && *it == n) return;
    items_.insert(it, n);
}

void ConstraintSet::merge(const ConstraintSet& o) {
    for (const auto& p : o.items_) add(p);
}

bool ConstraintSet::contains(const CoeffPoly& p) const {
    CoeffPoly n = p.normalized();
    return std::binary_search(items_.begin(), items_.end(), n, PolyLess{});
}

ConstraintSet match_coefficients(const PolyExpr& lhs, const PolyExpr& rhs) {
    ConstraintSet cs;
    std::set<Monomial, MonomialLess> monos;
    for (const auto& m : lhs.monomials()) monos.insert(m);
    for (const auto& m : rhs.monomials()) monos.insert(m);
    for (const auto& m : monos) cs.add(lhs.coefficient_of(m) - rhs.coefficient_of(m));
    return cs;
}

std::vector<UnitCheck> unit_constraints_by_letter(const Ansatz& a, const RuleSet& ctx,
                                                  bool first_order_via_rules) {
    ExpansionCtx ec{ctx, nullptr, a.pattern.flags, first_order_via_rules};
    std::vector<UnitCheck> out;
    for (const auto& l : pattern_letters(a.pattern)) {
        PolyExpr lhs = expand_symbol(delete_letter(a.pattern.symbol, l), ec);
        PolyExpr rhs = a.expr.substituted_unit(l, a.pattern.flags);
        out.push_back({l, match_coefficients(lhs, rhs)});
    }
    return out;
}

ConstraintSet unit_constraints(const Ansatz& a, const RuleSet& ctx, bool first_order_via_rules) {
    ConstraintSet cs;
    for (const auto& uc : unit_constraints_by_letter(a, ctx, first_order_via_rules))
        cs.merge(uc.constraints);
    return cs;
}

namespace {

MomentSymbol relabel_algebras(const MomentSymbol& s,
                              const std::map<std::string, std::string>& images) {
    MomentSymbol out = s;
    for (auto& arg : out.args)
        for (auto& l : arg) {
            auto it = images.find(l.algebra);
            if (it != images.end()) l.algebra = it->second;
        }
    return out;
}

// Replaces factor `slot` of `m` by `t`, re-canonicalizes, and re-sorts.
Monomial with_factor(const Monomial& m, std::size_t slot, const MomentSymbol& t,
                     const SymmetryFlags& flags) {
    std::vector<MomentSymbol> factors = m.factors;
    CanonSymbol c = canonicalize_symbol(t, flags);
    if (c.kind != CanonSymbol::Kind::symbol)
        throw InternalError("factor transform collapsed a symbol to a scalar");
    factors[slot] = c.sym;
    return make_monomial(std::move(factors));
}

// Identification between a monomial's unknown and its image's unknown.
void add_identification(ConstraintSet& cs, const Ansatz& a,
                        const std::map<std::string, std::size_t>& index, std::size_t i,
                        const Monomial& image) {
    auto it = index.find(render_monomial(image));
    if (it == index.end()) throw InternalError("transformed monomial left the ansatz");
    if (it->second == i) return;
    cs.add(CoeffPoly::variable(a.unknowns[i]) - CoeffPoly::variable(a.unknowns[it->second]));
}

std::map<std::string, std::size_t> monomial_index(const Ansatz& a) {
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < a.monomials.size(); ++i)
        index[render_monomial(a.monomials[i])] = i;
    return index;
}

std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (const auto& p : parts) out += p;
    return out;
}

// Maximal same-group runs of a word, read cyclically when rotation is
// allowed: the word is first rotated so that position 0 starts a run.
std::vector<std::pair<bool, Word>> group_runs(const Word& w,
                                              const std::function<bool(const Letter&)>& in_s,
                                              bool rotate_ok) {
    std::size_t n = w.size();
    bool uniform = true;
    for (const auto& l : w)
        if (in_s(l) != in_s(w[0])) {
            uniform = false;
            break;
        }
    Word v = w;
    if (!uniform && rotate_ok) {
        bool g0 = in_s(w[0]);
        std::size_t start = 0;
        while (in_s(w[(start + n - 1) % n]) == g0) start = (start + n - 1) % n;
        v = rotate_word(w, start);
    }
    std::vector<std::pair<bool, Word>> runs;
    for (const auto& l : v) {
        bool g = in_s(l);
        if (runs.empty() || runs.back().first != g) runs.push_back({g, {}});
        runs.back().second.push_back(l);
    }
    return runs;
}

}  // namespace

ExchangeResult exchange_symmetry_constraints(const Ansatz& a) {
    ExchangeResult out;
    auto algebras = symbol_algebras(a.pattern.symbol);
    if (algebras.size() != 2) {
        out.notice = "exchange symmetry needs exactly two algebras";
        return out;
    }
    auto it = algebras.begin();
    std::string first = *it++;
    std::string second = *it;
    std::map<std::string, std::string> swap_map{{first, second}, {second, first}};

    CanonSymbol image =
        canonicalize_symbol(relabel_algebras(a.pattern.symbol, swap_map), a.pattern.flags);
    if (image.kind != CanonSymbol::Kind::symbol || !(image.sym == a.pattern.symbol)) {
        out.notice = "pattern is not invariant under algebra exchange";
        return out;
    }
    out.applicable = true;
    PolyExpr mapped = a.expr.mapped_symbols(
        [&](const MomentSymbol& s) { return relabel_algebras(s, swap_map); }, a.pattern.flags);
    out.constraints = match_coefficients(mapped, a.expr);
    return out;
}

ConstraintSet phi2_symmetry_constraints(const Ansatz& a) {
    ConstraintSet cs;
    auto index = monomial_index(a);
    for (std::size_t i = 0; i < a.monomials.size(); ++i) {
        const Monomial& m = a.monomials[i];
        for (std::size_t f = 0; f < m.factors.size(); ++f) {
            if (m.factors[f].order != 2) continue;
            MomentSymbol t = m.factors[f];
            std::swap(t.args[0], t.args[1]);
            add_identification(cs, a, index, i, with_factor(m, f, t, a.pattern.flags));
        }
    }
    return cs;
}

ConstraintSet traciality_constraints(const Ansatz& a) {
    ConstraintSet cs;
    auto index = monomial_index(a);
    for (std::size_t i = 0; i < a.monomials.size(); ++i) {
        const Monomial& m = a.monomials[i];
        for (std::size_t f = 0; f < m.factors.size(); ++f) {
            for (int arg = 0; arg < 2; ++arg) {
                if (m.factors[f].args[arg].size() < 2) continue;
                MomentSymbol t = m.factors[f];
                t.args[arg] = rotate_word(t.args[arg], 1);
                add_identification(cs, a, index, i, with_factor(m, f, t, a.pattern.flags));
            }
        }
    }
    return cs;
}

std::vector<MomentSymbol> associativity_instances(const Pattern& p) {
    auto algebras = symbol_algebras(p.symbol);
    std::vector<std::string> fresh;
    for (char c = 'z'; c >= 'a' && fresh.size() < 2; --c) {
        std::string name(1, c);
        if (!algebras.count(name)) fresh.push_back(name);
    }
    if (fresh.size() < 2) throw SizeLimitError("no fresh algebra names left for instances");

    std::vector<MomentSymbol> out;
    std::set<std::string> seen;
    for (const auto& g : algebras) {
        std::size_t count = 0;
        for (const auto& l : pattern_letters(p))
            if (l.algebra == g) ++count;
        for (std::size_t mask = 0; mask < (std::size_t{1} << (count - 1)); ++mask) {
            MomentSymbol inst;
            inst.order = p.symbol.order;
            std::size_t occurrence = 0;
            for (int arg = 0; arg < 2; ++arg) {
                for (const auto& l : p.symbol.args[arg]) {
                    if (l.algebra != g) {
                        inst.args[arg].push_back(l);
                        continue;
                    }
                    int idx = static_cast<int>(++occurrence);
                    Letter x{fresh[0], idx};
                    Letter y{fresh[1], idx};
                    bool flipped = occurrence > 1 && (mask >> (occurrence - 2)) & 1;
                    inst.args[arg].push_back(flipped ? y : x);
                    inst.args[arg].push_back(flipped ? x : y);
                }
            }
            ShapeClass cls = compute_class(inst, p.flags);
            if (seen.insert(cls.key()).second) out.push_back(cls.rep);
        }
    }
    return out;
}

std::vector<RouteExpansion> expand_routes(const MomentSymbol& instance, const ExpansionCtx& ec) {
    auto algebra_set = symbol_algebras(instance);
    std::vector<std::string> algebras(algebra_set.begin(), algebra_set.end());
    std::size_t n = algebras.size();
    if (n < 2) throw DegeneratePatternError("instance must mix at least two algebras");
    if (n > 16) throw SizeLimitError("too many algebras to enumerate bracketings");

    std::vector<std::vector<std::string>> groups;
    for (std::size_t bits = 0; bits + 1 < (std::size_t{1} << (n - 1)); ++bits) {
        std::vector<std::string> s{algebras[0]};
        for (std::size_t j = 1; j < n; ++j)
            if ((bits >> (j - 1)) & 1) s.push_back(algebras[j]);
        groups.push_back(std::move(s));
    }
    std::sort(groups.begin(), groups.end(), [](const auto& x, const auto& y) {
        if (x.size() != y.size()) return x.size() < y.size();
        return join(x) < join(y);
    });

    std::vector<RouteExpansion> out;
    for (const auto& group : groups) {
        std::set<std::string> members(group.begin(), group.end());
        std::vector<std::string> rest;
        for (const auto& g : algebras)
            if (!members.count(g)) rest.push_back(g);
        std::string in_label = join(group);
        std::string out_label = join(rest);

        RouteExpansion route;
        route.group = group;
        route.label = in_label + "|" + out_label;

        auto in_s = [&](const Letter& l) { return members.count(l.algebra) > 0; };
        bool rotate_ok =
            instance.order == 1 ? ec.flags.phi1_tracial : ec.flags.phi2_tracial_each_arg;

        MomentSymbol outer;
        outer.order = instance.order;
        LetterImages run_words;
        std::map<std::string, int> ordinal;
        for (int arg = 0; arg < 2; ++arg) {
            if (instance.args[arg].empty()) continue;
            for (auto& [inside, subword] : group_runs(instance.args[arg], in_s, rotate_ok)) {
                std::string label = inside ? in_label : out_label;
                Letter ol{label, ++ordinal[label]};
                outer.args[arg].push_back(ol);
                run_words[ol] = subword;
            }
        }

        ShapeClass cls = compute_class(outer, ec.flags);
        const Rule* rule = find_rule(cls.key(), ec);
        if (!rule) {
            route.missing_shape = cls.key();
            out.push_back(std::move(route));
            continue;
        }
        LetterImages images;
        for (const auto& [rep, input] : cls.rep_to_input) images[rep] = run_words.at(input);
        try {
            route.expansion = expand_expr(rule->rhs.instantiated(images, ec.flags), ec);
            route.feasible = true;
        } catch (const StagingError& e) {
            route.missing_shape = e.shape;
        }
        out.push_back(std::move(route));
    }
    return out;
}

AssociativityCheck associativity_constraints(const MomentSymbol& instance, const Ansatz& a,
                                             const RuleSet& ctx, bool first_order_via_rules) {
    Rule current{a.pattern.symbol, a.expr, "ansatz"};
    ExpansionCtx ec{ctx, &current, a.pattern.flags, first_order_via_rules};

    AssociativityCheck out;
    out.instance = instance;
    out.routes = expand_routes(instance, ec);

    const RouteExpansion* base = nullptr;
    for (const auto& r : out.routes) {
        if (!r.feasible) {
            out.notices.push_back("route " + r.label + " needs unstaged shape " +
                                  r.missing_shape);
            continue;
        }
        if (!base) {
            base = &r;
            continue;
        }
        out.constraints.merge(match_coefficients(base->expansion, r.expansion));
    }
    if (!base) {
        std::string shape = out.routes.empty() ? "" : out.routes.front().missing_shape;
        throw StagingError("no feasible bracketing for " + render_symbol(instance), shape);
    }
    return out;
}

}  // namespace uniprod
