#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <random>
#include <string>
#include <vector>

#include "uniprod/errors.hpp"
#include "uniprod/parse.hpp"
#include "uniprod/solver.hpp"

using namespace uniprod;

namespace {

CoeffPoly V(const std::string& name) { return CoeffPoly::variable(name); }
CoeffPoly C(long n) { return CoeffPoly(Rational(n)); }

std::vector<std::string> names(std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(unknown_name(i));
    return out;
}

ConstraintSet set_of(const std::vector<CoeffPoly>& ps) {
    ConstraintSet cs;
    for (const auto& p : ps) cs.add(p);
    return cs;
}

// The constraint system the paired pattern produces: the unit and exchange
// relations plus the two bracketing matches at the coupled monomial.
ConstraintSet paired_system() {
    return set_of({
        V("alpha2") + V("alpha3") - C(1),
        V("alpha4") + V("alpha5") - C(1),
        V("alpha6") + V("alpha7"),
        V("alpha6") + V("alpha8"),
        V("alpha7") + V("alpha9"),
        V("alpha8") + V("alpha9"),
        V("alpha4") - V("alpha2"),
        V("alpha5") - V("alpha3"),
        V("alpha8") - V("alpha7"),
        V("alpha1") * V("alpha6") - V("alpha4") * V("alpha4"),
        V("alpha1") * V("alpha6") + V("alpha4") - V("alpha4") * V("alpha4"),
    });
}

}  // namespace

TEST_CASE("a linear system resolves in one branch") {
    auto branches = solve(set_of({V("alpha1") + V("alpha2") - C(3),
                                  V("alpha1") - V("alpha2") - C(1)}),
                          names(2));
    REQUIRE(branches.size() == 1);
    const auto& b = branches[0];
    CHECK(b.path.empty());
    CHECK(b.free_params.empty());
    CHECK(b.residual.empty());
    CHECK(b.assignments.at("alpha1") == C(2));
    CHECK(b.assignments.at("alpha2") == C(1));
}

TEST_CASE("a square vanishes in a single branch") {
    auto branches = solve(set_of({V("alpha4") * V("alpha4")}), names(4));
    REQUIRE(branches.size() == 1);
    CHECK(branches[0].assignments.at("alpha4") == C(0));
    CHECK(branches[0].residual.empty());
}

TEST_CASE("a pure product forks, lowest variable first") {
    auto branches = solve(set_of({V("alpha1") * V("alpha6")}), names(6));
    REQUIRE(branches.size() == 2);
    CHECK(branches[0].path == std::vector<std::string>{"alpha1 = 0"});
    CHECK(branches[0].assignments.at("alpha1") == C(0));
    CHECK(branches[1].path == std::vector<std::string>{"alpha6 = 0"});
    CHECK(branches[1].assignments.at("alpha6") == C(0));
}

TEST_CASE("univariate constraints split into their rational roots") {
    auto branches = solve(set_of({V("alpha1") * V("alpha1") - V("alpha1")}), names(1));
    REQUIRE(branches.size() == 2);
    CHECK(branches[0].assignments.at("alpha1") == C(0));
    CHECK(branches[1].assignments.at("alpha1") == C(1));
}

TEST_CASE("the paired system has exactly the two known branches") {
    ConstraintSet cs = paired_system();
    auto branches = solve(cs, names(9));
    REQUIRE(branches.size() == 2);

    const auto& first = branches[0];
    CHECK(first.path == std::vector<std::string>{"alpha1 = 0"});
    CHECK(first.free_params == std::vector<std::string>{"alpha6"});
    CHECK(first.residual.empty());
    CHECK(verify_branch(cs, first));
    auto p1 = branch_point(first, names(9));
    CHECK(p1.at("alpha1") == Rational(0));
    CHECK(p1.at("alpha2") == Rational(0));
    CHECK(p1.at("alpha3") == Rational(1));
    CHECK(p1.at("alpha4") == Rational(0));
    CHECK(p1.at("alpha5") == Rational(1));
    CHECK(p1.at("alpha6") == Rational(1));
    CHECK(p1.at("alpha7") == Rational(-1));
    CHECK(p1.at("alpha8") == Rational(-1));
    CHECK(p1.at("alpha9") == Rational(1));

    const auto& second = branches[1];
    CHECK(second.path == std::vector<std::string>{"alpha6 = 0"});
    CHECK(second.free_params == std::vector<std::string>{"alpha1"});
    CHECK(second.residual.empty());
    CHECK(verify_branch(cs, second));
    auto p2 = branch_point(second, names(9));
    CHECK(p2.at("alpha1") == Rational(1));
    CHECK(p2.at("alpha2") == Rational(0));
    CHECK(p2.at("alpha3") == Rational(1));
    CHECK(p2.at("alpha4") == Rational(0));
    CHECK(p2.at("alpha5") == Rational(1));
    CHECK(p2.at("alpha6") == Rational(0));
    CHECK(p2.at("alpha7") == Rational(0));
    CHECK(p2.at("alpha8") == Rational(0));
    CHECK(p2.at("alpha9") == Rational(0));

    CHECK(branch_contains(first, p1));
    CHECK(branch_contains(second, p2));
    CHECK_FALSE(branch_contains(second, p1));
    std::map<std::string, Rational, VarNaturalLess> off = p2;
    off["alpha1"] = Rational(Rational(5) / Rational(3));
    CHECK(branch_contains(second, off));
}

TEST_CASE("branch verification rejects foreign constraints") {
    ConstraintSet cs = paired_system();
    auto branches = solve(cs, names(9));
    REQUIRE(branches.size() == 2);
    ConstraintSet stricter = cs;
    stricter.add(V("alpha6") - C(2));
    CHECK_FALSE(verify_branch(stricter, branches[0]));
}

TEST_CASE("an inconsistent system has no branches") {
    CHECK(solve(set_of({V("alpha1"), V("alpha1") - C(1)}), names(1)).empty());
    CHECK(solve(set_of({C(1)}), names(1)).empty());
}

TEST_CASE("a product pinned by a linear row needs no case split") {
    auto branches = solve(set_of({V("alpha1") * V("alpha2"), V("alpha1") + V("alpha2")}),
                          names(2));
    REQUIRE(branches.size() == 1);
    CHECK(branches[0].path.empty());
    CHECK(branches[0].assignments.at("alpha1") == C(0));
    CHECK(branches[0].assignments.at("alpha2") == C(0));
}

TEST_CASE("the branch cap is enforced") {
    ConstraintSet cs = set_of({V("alpha1") * V("alpha2"), V("alpha3") * V("alpha4"),
                               V("alpha5") * V("alpha6")});
    CHECK_THROWS_AS(solve(cs, names(6), 2), BranchOverflowError);
    CHECK(solve(cs, names(6)).size() == 8);
}

TEST_CASE("system size limits are enforced") {
    ConstraintSet big;
    for (std::size_t i = 0; i < kMaxConstraints + 1; ++i)
        big.add(V("alpha1") - C(static_cast<long>(i)));
    CHECK_THROWS_AS(solve(big, names(1)), SizeLimitError);

    std::vector<std::string> many = names(kMaxUnknowns + 1);
    CHECK_THROWS_AS(solve(set_of({V("alpha1")}), many), SizeLimitError);
}

TEST_CASE("normalization pins free parameters to one") {
    SymmetryFlags flags;
    Ansatz a = build_ansatz(make_pattern(parse_moment("phi2(a1 b1, a2 b2)"), flags));
    auto branches = solve(paired_system(), names(9));
    REQUIRE(branches.size() == 2);

    Rule r1 = normalize_branch_rule(a, branches[0]);
    CHECK(r1.rhs == parse_expr(
              "phi2(a1, a2)*phi1(b1)*phi1(b2) + phi2(b1, b2)*phi1(a1)*phi1(a2)"
              " + phi1(a1 a2)*phi1(b1 b2) - phi1(a1 a2)*phi1(b1)*phi1(b2)"
              " - phi1(a1)*phi1(a2)*phi1(b1 b2)"
              " + phi1(a1)*phi1(a2)*phi1(b1)*phi1(b2)",
              flags));

    Rule r2 = normalize_branch_rule(a, branches[1]);
    CHECK(r2.rhs == parse_expr(
              "phi2(a1, a2)*phi2(b1, b2) + phi2(a1, a2)*phi1(b1)*phi1(b2)"
              " + phi2(b1, b2)*phi1(a1)*phi1(a2)",
              flags));
}

TEST_CASE("normalization refuses unresolved residuals") {
    SymmetryFlags flags;
    Ansatz a = build_ansatz(make_pattern(parse_moment("phi2(a1, b1)"), flags));
    SolutionBranch b;
    b.free_params = {"alpha1"};
    b.residual = {V("alpha1") * V("alpha1") + C(1)};
    CHECK_THROWS_AS(normalize_branch_rule(a, b), NotFullySolvedError);
    CHECK_THROWS_AS(branch_point(b, names(1)), NotFullySolvedError);
}

TEST_CASE("planted rational solutions survive the solver") {
    std::mt19937 gen(77u);
    std::uniform_int_distribution<long> coeff(-5, 5);
    std::uniform_int_distribution<long> denom(1, 4);
    std::uniform_int_distribution<int> pick(1, 3);
    std::uniform_int_distribution<int> mode(0, 1);

    for (int trial = 0; trial < 25; ++trial) {
        auto vars = names(4);
        std::map<std::string, Rational, VarNaturalLess> planted;
        planted[vars[0]] = Rational(0);
        for (std::size_t k = 1; k < vars.size(); ++k)
            planted[vars[k]] = Rational(Rational(coeff(gen)) / Rational(denom(gen)));

        // Random row mixes of the solved system alpha_k = planted_k, then a
        // monomial quadratic the planted point kills through alpha1 = 0.
        std::vector<CoeffPoly> base;
        for (std::size_t k = 1; k < vars.size(); ++k)
            base.push_back(V(vars[k]) - CoeffPoly(planted[vars[k]]));
        ConstraintSet cs;
        for (const auto& row : base) {
            CoeffPoly mixed = row;
            for (const auto& other : base)
                mixed = mixed + other.scaled(Rational(coeff(gen)));
            cs.add(mixed);
        }
        if (mode(gen) == 0) {
            cs.add(V(vars[0]) * V(vars[static_cast<std::size_t>(pick(gen))]));
        } else {
            cs.add(V(vars[0]) * V(vars[0]));
        }

        auto branches = solve(cs, vars);
        REQUIRE(!branches.empty());
        bool found = false;
        for (const auto& b : branches) {
            CHECK(verify_branch(cs, b));
            if (!b.residual.empty()) continue;
            if (branch_contains(b, planted)) found = true;
        }
        CHECK_MESSAGE(found, "planted point lost in trial ", trial);
    }
}
