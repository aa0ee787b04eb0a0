#include "uniprod/derivation.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "uniprod/errors.hpp"
#include "uniprod/freecalc.hpp"
#include "uniprod/partitions.hpp"

namespace uniprod {

namespace {

bool is_ansatz_unknown(const std::string& v) { return v.rfind("alpha", 0) == 0; }

Letter mk(const std::string& alg, int idx) { return Letter{alg, idx}; }

MomentSymbol aligned_pair_symbol() {
    return make_phi2(Word{mk("a", 1), mk("b", 1)}, Word{mk("a", 2), mk("b", 2)});
}

// Per-instance assembly that tolerates a fully infeasible instance: the
// routes are still listed, the constraint set just stays empty.
AssociativityCheck checked_instance(const MomentSymbol& instance, const Ansatz& a,
                                    const RuleSet& ctx, bool first_order_via_rules) {
    try {
        return associativity_constraints(instance, a, ctx, first_order_via_rules);
    } catch (const StagingError&) {
        Rule current{a.pattern.symbol, a.expr, "ansatz"};
        ExpansionCtx ec{ctx, &current, a.pattern.flags, first_order_via_rules};
        AssociativityCheck out;
        out.instance = instance;
        out.routes = expand_routes(instance, ec);
        for (const auto& r : out.routes)
            if (!r.feasible)
                out.notices.push_back("route " + r.label + " needs unstaged shape " +
                                      r.missing_shape);
        out.notices.push_back("no feasible bracketing; instance contributes no constraints");
        return out;
    }
}

// A route coefficient that is a single term of degree >= 2 marks a spot
// where two stages interact multiplicatively; record the full column of
// coefficients over that monomial for every feasible route.
void collect_spot_checks(const AssociativityCheck& c, std::vector<SpotCheck>& out) {
    std::set<Monomial, MonomialLess> monos;
    for (const auto& r : c.routes) {
        if (!r.feasible) continue;
        for (const auto& [m, coeff] : r.expansion.terms()) monos.insert(m);
    }
    for (const auto& m : monos) {
        bool interesting = false;
        for (const auto& r : c.routes) {
            if (!r.feasible) continue;
            CoeffPoly coeff = r.expansion.coefficient_of(m);
            if (!coeff.is_zero() && coeff.terms().size() == 1 && coeff.total_degree() >= 2)
                interesting = true;
        }
        if (!interesting) continue;
        for (const auto& r : c.routes) {
            if (!r.feasible) continue;
            out.push_back(SpotCheck{render_symbol(c.instance), r.label, m,
                                    r.expansion.coefficient_of(m)});
        }
    }
}

std::size_t unknown_slot(const Ansatz& a, const std::string& name) {
    for (std::size_t i = 0; i < a.unknowns.size(); ++i)
        if (a.unknowns[i] == name) return i;
    throw InternalError("unknown " + name + " is not an ansatz coefficient");
}

struct StageOptions {
    SymmetryFlags flags;
    Factorizer first_order = Factorizer::free_product;
    bool first_order_via_rules = false;
    bool symbolic_params = false;
    std::size_t branch_cap = kDefaultBranchCap;
    std::size_t context_cap = 16;
};

bool branch_matches_candidate(const DerivationReport& r, const BranchReport& br,
                              BranchChoice want) {
    auto pt = branch_point(br.branch, r.unknowns);
    auto a1 = pt.find("alpha1");
    auto a6 = pt.find("alpha6");
    if (a1 == pt.end() || a6 == pt.end()) return false;
    if (want == BranchChoice::candidate_1) return a1->second == 0;
    return a1->second != 0 && a6->second == 0;
}

// Stage one class across every live context, forking on branch multiplicity.
void stage_one(std::vector<StageContext>& ctxs, const MomentSymbol& rep,
               const StageOptions& opt, int& param_counter, const BranchChoice* choice,
               std::vector<DerivationReport>* reports) {
    std::vector<StageContext> next;
    Pattern p = make_pattern(rep, opt.flags);
    const std::string key = render_symbol(p.symbol);
    for (const auto& ctx : ctxs) {
        DerivationReport r = derive_rule(p, ctx, opt.first_order_via_rules, opt.branch_cap);
        for (std::size_t i = 0; i < r.branches.size(); ++i) {
            const BranchReport& br = r.branches[i];
            if (!br.branch.residual.empty() || !br.verified) continue;
            if (choice && *choice != BranchChoice::all &&
                !branch_matches_candidate(r, br, *choice))
                continue;

            StageContext nc = ctx;
            const std::string label = key + ":branch-" + std::to_string(i + 1);
            if (opt.symbolic_params) {
                // Free coefficients survive into the context under fresh
                // global parameter names; later stages may pin them.
                std::map<std::string, CoeffPoly, VarNaturalLess> free_images;
                for (const auto& f : br.branch.free_params) {
                    if (is_ansatz_unknown(f)) {
                        std::string fresh = "p" + std::to_string(++param_counter);
                        free_images.emplace(f, CoeffPoly::variable(fresh));
                        nc.params.emplace(fresh,
                                          ParamOrigin{p.symbol, f,
                                                      r.ansatz.monomials[unknown_slot(r.ansatz, f)]});
                    } else {
                        free_images.emplace(f, CoeffPoly::variable(f));
                    }
                }
                std::map<std::string, CoeffPoly, VarNaturalLess> images = free_images;
                std::map<std::string, CoeffPoly, VarNaturalLess> pins;
                for (const auto& [v, val] : br.branch.assignments) {
                    CoeffPoly image = val.substituted(free_images);
                    if (is_ansatz_unknown(v))
                        images.emplace(v, std::move(image));
                    else
                        pins.emplace(v, std::move(image));
                }
                if (!pins.empty()) {
                    // This branch also pinned parameters of earlier stages;
                    // fold those pins back into every staged rule.
                    RuleSet refined;
                    refined.first_order = nc.rules.first_order;
                    for (const auto& k : nc.rules.keys()) {
                        const Rule* old = nc.rules.find(k);
                        refined.add(Rule{old->rep, old->rhs.coeffs_substituted(pins),
                                         old->provenance});
                    }
                    nc.rules = refined;
                }
                nc.rules.add(Rule{p.symbol, r.ansatz.expr.coeffs_substituted(images), label});
            } else {
                nc.rules.add(normalize_branch_rule(r.ansatz, br.branch, label));
            }
            nc.path.push_back(label);
            next.push_back(std::move(nc));
            if (next.size() > opt.context_cap)
                throw SizeLimitError("staged context fan-out exceeds " +
                                     std::to_string(opt.context_cap) + " at " + key);
        }
        if (reports) reports->push_back(std::move(r));
    }
    ctxs = std::move(next);
}

void require_live(const std::vector<StageContext>& ctxs, const MomentSymbol& rep) {
    if (!ctxs.empty()) return;
    const std::string key = render_symbol(rep);
    throw StagingError("stage " + key + " admits no consistent rule", key);
}

void expect(bool ok, const std::string& what) {
    if (!ok) throw AssertionDiff(what);
}

CoeffPoly av(int i) { return CoeffPoly::variable(unknown_name(static_cast<std::size_t>(i - 1))); }

}  // namespace

DerivationReport derive_rule(const Pattern& p, const StageContext& ctx,
                             bool first_order_via_rules, std::size_t branch_cap) {
    DerivationReport r;
    r.pattern = p;
    r.ansatz = build_ansatz(p);
    r.first_order = ctx.rules.first_order;
    r.first_order_via_rules = first_order_via_rules;
    r.context_path = ctx.path;
    r.branch_cap = branch_cap;

    r.units = unit_constraints_by_letter(r.ansatz, ctx.rules, first_order_via_rules);
    for (const auto& u : r.units) r.combined.merge(u.constraints);

    r.exchange = exchange_symmetry_constraints(r.ansatz);
    if (r.exchange.applicable)
        r.combined.merge(r.exchange.constraints);
    else if (!r.exchange.notice.empty())
        r.notices.push_back(r.exchange.notice);

    if (p.symbol.order == 2 && p.flags.phi2_symmetric) {
        r.phi2_symmetry_applicable = true;
        r.phi2_symmetry = phi2_symmetry_constraints(r.ansatz);
        r.combined.merge(r.phi2_symmetry);
    }
    if (p.flags.phi1_tracial && (p.symbol.order == 1 || p.flags.phi2_tracial_each_arg)) {
        r.traciality_applicable = true;
        r.traciality = traciality_constraints(r.ansatz);
        r.combined.merge(r.traciality);
    }

    for (const auto& inst : associativity_instances(p)) {
        AssociativityCheck c =
            checked_instance(inst, r.ansatz, ctx.rules, first_order_via_rules);
        bool feasible = false;
        for (const auto& route : c.routes) feasible = feasible || route.feasible;
        if (!feasible)
            r.notices.push_back("instance " + render_symbol(inst) +
                                " has no feasible bracketing");
        r.combined.merge(c.constraints);
        collect_spot_checks(c, r.spot_checks);
        r.associativity.push_back(std::move(c));
    }

    std::set<std::string> alphas(r.ansatz.unknowns.begin(), r.ansatz.unknowns.end());
    std::set<std::string, VarNaturalLess> extra;
    for (const auto& c : r.combined.items())
        for (const auto& v : c.variables()) {
            if (alphas.count(v)) continue;
            auto it = ctx.params.find(v);
            if (it == ctx.params.end())
                throw InternalError("constraint mentions unregistered coefficient " + v);
            extra.insert(v);
        }
    r.unknowns = r.ansatz.unknowns;
    for (const auto& v : extra) {
        r.unknowns.push_back(v);
        r.params.emplace(v, ctx.params.at(v));
    }

    const std::string key = render_symbol(p.symbol);
    auto branches = solve(r.combined, r.unknowns, branch_cap);
    for (std::size_t i = 0; i < branches.size(); ++i) {
        BranchReport br;
        br.branch = std::move(branches[i]);
        br.verified = verify_branch(r.combined, br.branch);
        if (br.branch.residual.empty()) {
            br.normalizable = true;
            br.normalized = normalize_branch_rule(r.ansatz, br.branch,
                                                  key + ":branch-" + std::to_string(i + 1));
        }
        r.branches.push_back(std::move(br));
    }
    return r;
}

std::vector<MomentSymbol> shape_classes(int order, int letters, const SymmetryFlags& flags) {
    if (order != 1 && order != 2) throw OrderError("moment order must be 1 or 2");
    std::map<std::string, MomentSymbol> by_key;
    if (letters < 2) return {};
    auto add = [&](const MomentSymbol& s) {
        ShapeClass cls = compute_class(s, flags);
        by_key.emplace(cls.key(), cls.rep);
    };
    for (const auto& part : enumerate_partitions(letters)) {
        if (part.size() < 2) continue;
        std::vector<int> block_of(static_cast<std::size_t>(letters), 0);
        for (std::size_t b = 0; b < part.size(); ++b)
            for (int pos : part[b]) block_of[static_cast<std::size_t>(pos)] = static_cast<int>(b);
        // Blocks are listed by least element, so the block rank is already
        // the first-appearance rank of its algebra.
        Word w;
        std::map<int, int> counter;
        for (int pos = 0; pos < letters; ++pos) {
            int b = block_of[static_cast<std::size_t>(pos)];
            w.push_back(mk(std::string(1, static_cast<char>('a' + b)), ++counter[b]));
        }
        if (order == 1) {
            add(make_phi1(w));
        } else {
            for (int cut = 1; cut < letters; ++cut) {
                Word lhs(w.begin(), w.begin() + cut);
                Word rhs(w.begin() + cut, w.end());
                add(make_phi2(lhs, rhs));
            }
        }
    }
    std::vector<MomentSymbol> out;
    out.reserve(by_key.size());
    for (const auto& [k, s] : by_key) out.push_back(s);
    return out;
}

std::vector<DerivationReport> derive_pattern(const Pattern& p, Factorizer first_order,
                                             std::size_t branch_cap) {
    StageOptions opt;
    opt.flags = p.flags;
    opt.first_order = first_order;
    opt.branch_cap = branch_cap;

    std::vector<StageContext> ctxs(1);
    ctxs[0].rules.first_order = first_order;
    int counter = 0;
    if (p.symbol.order == 2) {
        int n = static_cast<int>(symbol_letter_count(p.symbol));
        for (int k = 2; k < n; ++k)
            for (const auto& rep : shape_classes(2, k, p.flags)) {
                stage_one(ctxs, rep, opt, counter, nullptr, nullptr);
                require_live(ctxs, rep);
            }
    }
    std::vector<DerivationReport> out;
    for (const auto& ctx : ctxs)
        out.push_back(derive_rule(p, ctx, false, branch_cap));
    return out;
}

std::vector<DerivationReport> explore_pattern(const Pattern& p, BranchChoice choice,
                                              Factorizer first_order, std::size_t branch_cap) {
    if (p.symbol.order != 2) throw OrderError("exploration continues second-order patterns");
    StageOptions opt;
    opt.flags = p.flags;
    opt.first_order = first_order;
    opt.branch_cap = branch_cap;

    const MomentSymbol pair = aligned_pair_symbol();
    const std::string pair_key = render_symbol(pair);
    const std::string self = render_symbol(p.symbol);

    std::vector<StageContext> ctxs(1);
    ctxs[0].rules.first_order = first_order;
    int counter = 0;
    int n = static_cast<int>(symbol_letter_count(p.symbol));
    int upper = std::max(n - 1, self != pair_key ? 3 : n - 1);
    for (int k = 2; k <= upper; ++k)
        for (const auto& rep : shape_classes(2, k, p.flags)) {
            const std::string key = render_symbol(rep);
            if (key == self) continue;
            stage_one(ctxs, rep, opt, counter, key == pair_key ? &choice : nullptr, nullptr);
            require_live(ctxs, rep);
        }
    if (self != pair_key && ctxs.front().rules.find(pair_key) == nullptr) {
        stage_one(ctxs, pair, opt, counter, &choice, nullptr);
        require_live(ctxs, pair);
    }

    std::vector<DerivationReport> out;
    for (const auto& ctx : ctxs) {
        DerivationReport r = derive_rule(p, ctx, false, branch_cap);
        if (self == pair_key)
            r.notices.push_back("branch choice does not apply: the target is the branching class");
        out.push_back(std::move(r));
    }
    return out;
}

namespace {

Monomial mono(std::vector<MomentSymbol> factors) { return make_monomial(std::move(factors)); }

// The nine admissible monomials of the balanced four-letter pattern, in
// ansatz order.
std::vector<Monomial> pair_monomials() {
    Word a1{mk("a", 1)}, a2{mk("a", 2)}, b1{mk("b", 1)}, b2{mk("b", 2)};
    Word a1a2{mk("a", 1), mk("a", 2)}, b1b2{mk("b", 1), mk("b", 2)};
    MomentSymbol paa = make_phi2(a1, a2);
    MomentSymbol pbb = make_phi2(b1, b2);
    MomentSymbol faa = make_phi1(a1a2);
    MomentSymbol fbb = make_phi1(b1b2);
    MomentSymbol fa1 = make_phi1(a1), fa2 = make_phi1(a2);
    MomentSymbol fb1 = make_phi1(b1), fb2 = make_phi1(b2);
    return {
        mono({paa, pbb}),           mono({paa, fbb}),      mono({paa, fb1, fb2}),
        mono({faa, pbb}),           mono({fa1, fa2, pbb}), mono({faa, fbb}),
        mono({faa, fb1, fb2}),      mono({fa1, fa2, fbb}), mono({fa1, fa2, fb1, fb2}),
    };
}

void assert_cross_report(const DerivationReport& r) {
    expect(r.ansatz.monomials.size() == 1, "cross pattern: expected a single monomial ansatz");
    expect(r.combined.contains(av(1)), "cross pattern: missing constraint alpha1");
    expect(r.branches.size() == 1, "cross pattern: expected a unique branch");
    const BranchReport& b = r.branches.front();
    expect(b.verified && b.normalizable, "cross pattern: branch failed verification");
    expect(b.normalized.rhs.is_zero(), "cross pattern: rule should vanish");
}

void assert_insertion_report(const DerivationReport& r) {
    expect(r.ansatz.monomials.size() == 3, "insertion pattern: expected three monomials");
    expect(r.combined.contains(av(1) - CoeffPoly(Rational(1))),
           "insertion pattern: missing constraint alpha1 - 1");
    expect(r.combined.contains(av(2)), "insertion pattern: missing constraint alpha2");
    expect(r.combined.contains(av(3)), "insertion pattern: missing constraint alpha3");
    expect(r.combined.contains(av(2) + av(3)), "insertion pattern: missing constraint alpha2 + alpha3");
    expect(r.branches.size() == 1, "insertion pattern: expected a unique branch");
    const BranchReport& b = r.branches.front();
    expect(b.verified && b.normalizable, "insertion pattern: branch failed verification");
    PolyExpr want = PolyExpr::term(
        CoeffPoly(Rational(1)),
        {CanonSymbol::of(make_phi2(Word{mk("a", 1)}, Word{mk("a", 2)})),
         CanonSymbol::of(make_phi1(Word{mk("b", 1)}))});
    expect(b.normalized.rhs == want, "insertion pattern: normalized rule is not phi2(a1, a2) phi1(b1)");
}

void assert_pair_report(const DerivationReport& r) {
    const std::vector<Monomial> want = pair_monomials();
    expect(r.ansatz.monomials.size() == 9, "pair pattern: expected nine monomials");
    for (std::size_t i = 0; i < want.size(); ++i)
        expect(render_monomial(r.ansatz.monomials[i]) == render_monomial(want[i]),
               "pair pattern: monomial slot " + std::to_string(i + 1) + " is " +
                   render_monomial(r.ansatz.monomials[i]) + ", expected " +
                   render_monomial(want[i]));

    const CoeffPoly one{Rational(1)};
    const std::vector<std::pair<CoeffPoly, std::string>> members = {
        {av(2) + av(3) - one, "alpha2 + alpha3 - 1"},
        {av(6) + av(7), "alpha6 + alpha7"},
        {av(8) + av(9), "alpha8 + alpha9"},
        {av(4) + av(5) - one, "alpha4 + alpha5 - 1"},
        {av(6) + av(8), "alpha6 + alpha8"},
        {av(7) + av(9), "alpha7 + alpha9"},
        {av(2) - av(4), "alpha2 - alpha4"},
        {av(3) - av(5), "alpha3 - alpha5"},
        {av(7) - av(8), "alpha7 - alpha8"},
        {av(1) * av(6) - av(4) * av(4), "alpha1 alpha6 - alpha4^2"},
    };
    for (const auto& [poly, name] : members)
        expect(r.combined.contains(poly), "pair pattern: missing constraint " + name);

    bool saw_square = false, saw_product = false;
    const CoeffPoly square = av(4) * av(4);
    const CoeffPoly product = av(1) * av(6);
    for (const auto& s : r.spot_checks) {
        if (s.coefficient == square) saw_square = true;
        if (s.coefficient == product) saw_product = true;
    }
    expect(saw_square, "pair pattern: no route carries the bare coefficient alpha4^2");
    expect(saw_product, "pair pattern: no route carries the bare coefficient alpha1 alpha6");

    std::map<std::string, CoeffPoly, VarNaturalLess> linear{{"alpha2", CoeffPoly(Rational(0))},
                                                            {"alpha4", CoeffPoly(Rational(0))}};
    CoeffPoly reduced = (product - square).substituted(linear);
    expect(reduced == product, "pair pattern: quadratic does not reduce to alpha1 alpha6");

    expect(r.branches.size() == 2, "pair pattern: expected exactly two branches, got " +
                                       std::to_string(r.branches.size()));
    std::map<std::string, Rational, VarNaturalLess> cand1{
        {"alpha1", 0}, {"alpha2", 0}, {"alpha3", 1}, {"alpha4", 0}, {"alpha5", 1},
        {"alpha6", 1}, {"alpha7", -1}, {"alpha8", -1}, {"alpha9", 1}};
    std::map<std::string, Rational, VarNaturalLess> cand2{
        {"alpha1", 1}, {"alpha2", 0}, {"alpha3", 1}, {"alpha4", 0}, {"alpha5", 1},
        {"alpha6", 0}, {"alpha7", 0}, {"alpha8", 0}, {"alpha9", 0}};
    bool have1 = false, have2 = false;
    for (const auto& br : r.branches) {
        expect(br.verified, "pair pattern: branch failed verification");
        expect(br.branch.residual.empty(), "pair pattern: branch left a residual");
        expect(br.branch.free_params.size() == 1,
               "pair pattern: branch is not a one-parameter family");
        auto pt = branch_point(br.branch, r.unknowns);
        if (pt == cand1) have1 = true;
        if (pt == cand2) have2 = true;
    }
    expect(have1, "pair pattern: missing the bracket candidate");
    expect(have2, "pair pattern: missing the product candidate");

    const std::vector<Monomial> monos = pair_monomials();
    const std::vector<Rational> want1{0, 0, 1, 0, 1, 1, -1, -1, 1};
    const std::vector<Rational> want2{1, 0, 1, 0, 1, 0, 0, 0, 0};
    for (const auto& br : r.branches) {
        auto pt = branch_point(br.branch, r.unknowns);
        const std::vector<Rational>& want_coeffs = (pt == cand1) ? want1 : want2;
        for (std::size_t i = 0; i < monos.size(); ++i) {
            CoeffPoly c = br.normalized.rhs.coefficient_of(monos[i]);
            expect(c == CoeffPoly(want_coeffs[i]),
                   "pair pattern: candidate coefficient on slot " + std::to_string(i + 1) +
                       " is " + c.render() + ", expected " + rational_str(want_coeffs[i]));
        }
    }
}

}  // namespace

PaperReproduction reproduce_paper() {
    SymmetryFlags flags;
    StageContext ctx;
    PaperReproduction out;

    const MomentSymbol cross = make_phi2(Word{mk("a", 1)}, Word{mk("b", 1)});
    const MomentSymbol insertion = make_phi2(Word{mk("a", 1), mk("b", 1)}, Word{mk("a", 2)});
    const MomentSymbol pair = aligned_pair_symbol();

    DerivationReport r1 = derive_rule(make_pattern(cross, flags), ctx);
    assert_cross_report(r1);
    std::string label1 = render_symbol(cross) + ":branch-1";
    ctx.rules.add(normalize_branch_rule(r1.ansatz, r1.branches.front().branch, label1));
    ctx.path.push_back(label1);

    DerivationReport r2 = derive_rule(make_pattern(insertion, flags), ctx);
    assert_insertion_report(r2);
    std::string label2 = render_symbol(insertion) + ":branch-1";
    ctx.rules.add(normalize_branch_rule(r2.ansatz, r2.branches.front().branch, label2));
    ctx.path.push_back(label2);

    DerivationReport r3 = derive_rule(make_pattern(pair, flags), ctx);
    assert_pair_report(r3);

    out.reports.push_back(std::move(r1));
    out.reports.push_back(std::move(r2));
    out.reports.push_back(std::move(r3));
    return out;
}

ClassificationResult classify_first_order(int max_letters) {
    if (max_letters < 2) throw SizeLimitError("classification needs at least two letters");
    if (max_letters > 6) throw SizeLimitError("classification beyond six letters is unsupported");

    StageOptions opt;
    opt.first_order_via_rules = true;
    opt.symbolic_params = true;

    ClassificationResult out;
    out.max_letters = max_letters;
    std::vector<StageContext> ctxs(1);
    int counter = 0;
    for (int k = 2; k <= max_letters; ++k)
        for (const auto& rep : shape_classes(1, k, opt.flags)) {
            stage_one(ctxs, rep, opt, counter, nullptr, &out.reports);
            require_live(ctxs, rep);
        }
    out.final_contexts = std::move(ctxs);
    return out;
}

std::map<std::string, Rational, VarNaturalLess> model_point(const Ansatz& a, Factorizer model) {
    if (a.pattern.symbol.order != 1)
        throw OrderError("model points are defined for first-order patterns");
    PolyExpr e = factorize(a.pattern.symbol.args[0], model, a.pattern.flags);
    std::set<Monomial, MonomialLess> span(a.monomials.begin(), a.monomials.end());
    for (const auto& [m, c] : e.terms())
        if (!span.count(m)) throw InternalError("model expansion leaves the ansatz span");
    std::map<std::string, Rational, VarNaturalLess> pt;
    for (std::size_t i = 0; i < a.unknowns.size(); ++i) {
        CoeffPoly c = e.coefficient_of(a.monomials[i]);
        pt[a.unknowns[i]] = c.is_zero() ? Rational(0) : c.constant_value();
    }
    return pt;
}

std::map<std::string, Rational, VarNaturalLess> model_point(const DerivationReport& r,
                                                            Factorizer model) {
    auto pt = model_point(r.ansatz, model);
    for (const auto& [name, origin] : r.params) {
        PolyExpr e = factorize(origin.rep.args[0], model, r.pattern.flags);
        CoeffPoly c = e.coefficient_of(origin.monomial);
        pt[name] = c.is_zero() ? Rational(0) : c.constant_value();
    }
    return pt;
}

}  // namespace uniprod
