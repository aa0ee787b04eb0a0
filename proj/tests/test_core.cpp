#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>

#include "uniprod/coeffpoly.hpp"
#include "uniprod/errors.hpp"
#include "uniprod/parse.hpp"
#include "uniprod/polyexpr.hpp"
#include "uniprod/symbols.hpp"
#include "uniprod/words.hpp"

using namespace uniprod;

namespace {

Letter L(const std::string& alg, int idx) { return Letter{alg, idx}; }

CoeffPoly V(const std::string& name) { return CoeffPoly::variable(name); }
CoeffPoly C(long n) { return CoeffPoly(Rational(n)); }

}  // namespace

TEST_CASE("word order: letter-lexicographic, longer word first on prefix ties") {
    Word a1{L("a", 1)};
    Word a1a2{L("a", 1), L("a", 2)};
    Word a2{L("a", 2)};
    Word b1{L("b", 1)};
    CHECK(word_cmp(a1, a1) == 0);
    CHECK(word_cmp(a1, a2) < 0);
    CHECK(word_cmp(a1, b1) < 0);
    CHECK(word_cmp(a1a2, a1) < 0);  // proper prefix: longer first
    CHECK(word_cmp(a1, a1a2) > 0);
}

TEST_CASE("canonical rotation picks the least cyclic shift only when tracial") {
    Word w{L("b", 1), L("a", 1)};
    Word rotated = canonical_rotation(w, true);
    CHECK(render_word(rotated) == "a1 b1");
    CHECK(render_word(canonical_rotation(w, false)) == "b1 a1");
    // idempotent
    CHECK(render_word(canonical_rotation(rotated, true)) == "a1 b1");
}

TEST_CASE("symbol canonicalization: unit absorption and argument order") {
    SymmetryFlags flags;
    CanonSymbol unit_phi1 = canonicalize_symbol(make_phi1(Word{}), flags);
    CHECK(unit_phi1.kind == CanonSymbol::Kind::one);

    CanonSymbol unit_phi2 =
        canonicalize_symbol(make_phi2(Word{}, Word{L("a", 1)}), flags);
    CHECK(unit_phi2.kind == CanonSymbol::Kind::zero);

    CanonSymbol swapped = canonicalize_symbol(
        make_phi2(Word{L("b", 1)}, Word{L("a", 1)}), flags);
    REQUIRE(swapped.kind == CanonSymbol::Kind::symbol);
    CHECK(render_symbol(swapped.sym) == "phi2(a1, b1)");

    // without the symmetric flag the arguments stay put
    SymmetryFlags rigid;
    rigid.phi2_symmetric = false;
    CanonSymbol kept = canonicalize_symbol(
        make_phi2(Word{L("b", 1)}, Word{L("a", 1)}), rigid);
    REQUIRE(kept.kind == CanonSymbol::Kind::symbol);
    CHECK(render_symbol(kept.sym) == "phi2(b1, a1)");
}

TEST_CASE("canonicalization is idempotent on a spread of symbols") {
    SymmetryFlags flags;
    std::vector<MomentSymbol> symbols{
        make_phi1(Word{L("b", 1), L("a", 1), L("a", 2)}),
        make_phi2(Word{L("b", 2), L("b", 1)}, Word{L("a", 1)}),
        make_phi2(Word{L("a", 2), L("a", 1)}, Word{L("b", 1), L("b", 2)}),
        make_phi1(Word{L("c", 1)}),
    };
    for (const auto& s : symbols) {
        CanonSymbol once = canonicalize_symbol(s, flags);
        if (once.kind != CanonSymbol::Kind::symbol) continue;
        CanonSymbol twice = canonicalize_symbol(once.sym, flags);
        REQUIRE(twice.kind == CanonSymbol::Kind::symbol);
        CHECK(render_symbol(twice.sym) == render_symbol(once.sym));
    }
}

TEST_CASE("monomial order: second-order factors dominate") {
    Monomial m1 = make_monomial({make_phi2(Word{L("a", 1)}, Word{L("a", 2)}),
                                 make_phi2(Word{L("b", 1)}, Word{L("b", 2)})});
    Monomial m2 = make_monomial({make_phi2(Word{L("a", 1)}, Word{L("a", 2)}),
                                 make_phi1(Word{L("b", 1), L("b", 2)})});
    Monomial m3 = make_monomial({make_phi1(Word{L("a", 1), L("a", 2)}),
                                 make_phi1(Word{L("b", 1), L("b", 2)})});
    CHECK(monomial_cmp(m1, m2) < 0);
    CHECK(monomial_cmp(m2, m3) < 0);
    CHECK(render_monomial(m1) == "phi2(a1, a2)*phi2(b1, b2)");
    CHECK(render_monomial(Monomial{}) == "1");
}

TEST_CASE("coefficient polynomials form a commutative ring") {
    CoeffPoly x = V("alpha1");
    CoeffPoly y = V("alpha2");
    CHECK((x + y) * (x + y) == x * x + x * y * C(2) + y * y);
    CHECK((x - x).is_zero());
    CHECK((x * y - y * x).is_zero());
    CHECK(C(0).is_zero());
    CHECK(C(3).is_constant());
    CHECK(C(3).constant_value() == Rational(3));
    CHECK((x * y).total_degree() == 2);
}

TEST_CASE("substitution is partial: missing variables survive") {
    CoeffPoly p = V("alpha1") * V("alpha6") - V("alpha4") * V("alpha4");
    std::map<std::string, CoeffPoly, VarNaturalLess> sub;
    sub["alpha4"] = C(0);
    CoeffPoly q = p.substituted(sub);
    CHECK(q == V("alpha1") * V("alpha6"));
    std::map<std::string, Rational, VarNaturalLess> point;
    point["alpha1"] = Rational(2);
    point["alpha6"] = Rational(3);
    CHECK(q.evaluated(point) == Rational(6));
}

TEST_CASE("variable order is natural: alpha2 before alpha10") {
    VarNaturalLess less;
    CHECK(less("alpha2", "alpha10"));
    CHECK(!less("alpha10", "alpha2"));
    CHECK(less("alpha9", "p1"));
    CoeffPoly p = V("alpha10") + V("alpha2");
    CHECK(*p.variables().begin() == "alpha2");
}

TEST_CASE("univariate rational roots") {
    // alpha^2 - alpha: roots 0 and 1
    CoeffPoly p = V("alpha1") * V("alpha1") - V("alpha1");
    bool complete = false;
    auto roots = univariate_rational_roots(p, "alpha1", complete);
    REQUIRE(roots.size() == 2);
    CHECK(complete);
    CHECK(roots[0] == Rational(0));
    CHECK(roots[1] == Rational(1));

    // 2*alpha - 3: root 3/2
    CoeffPoly q = V("alpha1") * C(2) - C(3);
    auto half = univariate_rational_roots(q, "alpha1", complete);
    REQUIRE(half.size() == 1);
    CHECK(complete);
    CHECK(half[0] == Rational(3) / Rational(2));

    // alpha^2 - 2 has no rational roots and does not split
    CoeffPoly r = V("alpha1") * V("alpha1") - C(2);
    auto none = univariate_rational_roots(r, "alpha1", complete);
    CHECK(none.empty());
    CHECK(!complete);
}

TEST_CASE("polynomial expressions collect over canonical symbols") {
    SymmetryFlags flags;
    PolyExpr e = PolyExpr::symbol_term(
        C(1), make_phi2(Word{L("b", 1)}, Word{L("a", 1)}), flags);
    PolyExpr f = PolyExpr::symbol_term(
        C(-1), make_phi2(Word{L("a", 1)}, Word{L("b", 1)}), flags);
    CHECK((e + f).is_zero());
    CHECK(parse_expr("phi2(b1, a1) - phi2(a1, b1)", flags).is_zero());
}

TEST_CASE("expression parsing round-trips rendering") {
    SymmetryFlags flags;
    std::vector<std::string> sources{
        "phi2(a1, a2)*phi1(b1 b2)",
        "2*phi1(a1)*phi1(b1) - 1/3*phi1(a1 b1)",
        "alpha1*phi2(a1, a2)*phi2(b1, b2) + alpha2*phi2(a1, a2)*phi1(b1 b2)",
        "0",
    };
    for (const auto& src : sources) {
        PolyExpr e = parse_expr(src, flags);
        PolyExpr again = parse_expr(e.render(), flags);
        CHECK(again == e);
    }
}

TEST_CASE("unit substitution reduces the pattern moment") {
    SymmetryFlags flags;
    PolyExpr e = parse_expr("phi2(a1 b1, a2 b2)", flags);
    PolyExpr dropped = e.substituted_unit(L("b", 2), flags);
    CHECK(dropped.render() == "phi2(a1 b1, a2)");
    PolyExpr both = dropped.substituted_unit(L("b", 1), flags);
    CHECK(both.render() == "phi2(a1, a2)");
}

TEST_CASE("parse errors carry 1-based columns") {
    CHECK_THROWS_AS(parse_moment("phi2(a1, b1"), ParseError);
    try {
        parse_moment("phi2(a1, b1");
    } catch (const ParseError& e) {
        CHECK(e.column == 12);
    }
    try {
        parse_moment("phi3(a1)");
    } catch (const ParseError& e) {
        CHECK(e.column >= 1);
    }
    CHECK_THROWS_AS(parse_word("a0"), ParseError);
    CHECK_THROWS_AS(parse_expr("alpha1 +", SymmetryFlags{}), ParseError);
}

TEST_CASE("rationals render as integers or p/q") {
    CHECK(rational_str(Rational(5)) == "5");
    CHECK(rational_str(Rational(-3) / Rational(2)) == "-3/2");
}
