#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <string>
#include <vector>

#include "uniprod/derivation.hpp"
#include "uniprod/errors.hpp"
#include "uniprod/parse.hpp"

using namespace uniprod;

namespace {

Pattern pattern_of(const std::string& text, const SymmetryFlags& flags = {}) {
    return make_pattern(parse_moment(text), flags);
}

CoeffPoly av(int k) { return CoeffPoly::variable("alpha" + std::to_string(k)); }

std::vector<std::string> class_keys(int order, int letters) {
    std::vector<std::string> out;
    for (const auto& s : shape_classes(order, letters, SymmetryFlags{}))
        out.push_back(render_symbol(s));
    return out;
}

using Point = std::map<std::string, Rational, VarNaturalLess>;

Point point_of(std::initializer_list<std::pair<const char*, long>> vals) {
    Point p;
    for (const auto& [name, v] : vals) p[name] = Rational(v);
    return p;
}

bool combined_vanishes(const DerivationReport& r, const Point& p) {
    for (const auto& c : r.combined.items())
        if (c.evaluated(p) != 0) return false;
    return true;
}

// Replays a fixed factorization model through the classification transcript:
// a report is on the model's path when every context entry matches the
// branch previously seen to contain the model's point. Returns how many
// reports the walk visited.
int replay_model(const ClassificationResult& result, Factorizer model) {
    std::map<std::string, std::string> chosen;
    int visited = 0;
    for (const auto& r : result.reports) {
        bool on_path = true;
        for (const auto& entry : r.context_path) {
            auto colon = entry.rfind(':');
            auto it = chosen.find(entry.substr(0, colon));
            if (it == chosen.end() || it->second != entry.substr(colon + 1)) {
                on_path = false;
                break;
            }
        }
        if (!on_path) continue;
        ++visited;
        Point p = model_point(r, model);
        CHECK(combined_vanishes(r, p));
        bool found = false;
        for (std::size_t i = 0; i < r.branches.size() && !found; ++i) {
            if (branch_contains(r.branches[i].branch, p)) {
                chosen[render_symbol(r.pattern.symbol)] = "branch-" + std::to_string(i + 1);
                found = true;
            }
        }
        CHECK(found);
    }
    return visited;
}

}  // namespace

TEST_CASE("shape class inventories are canonical and ascending") {
    CHECK(class_keys(2, 2) == std::vector<std::string>{"phi2(a1, b1)"});
    CHECK(class_keys(2, 3) == std::vector<std::string>{
              "phi2(a1 a2, b1)", "phi2(a1 b1, a2)", "phi2(a1 b1, c1)"});
    CHECK(class_keys(1, 2) == std::vector<std::string>{"phi1(a1 b1)"});
    CHECK(class_keys(1, 4) == std::vector<std::string>{
              "phi1(a1 a2 a3 b1)", "phi1(a1 a2 b1 b2)", "phi1(a1 a2 b1 c1)",
              "phi1(a1 b1 a2 b2)", "phi1(a1 b1 a2 c1)", "phi1(a1 b1 c1 d1)"});
    CHECK(class_keys(1, 1).empty());
    CHECK_THROWS_AS(shape_classes(0, 3, SymmetryFlags{}), OrderError);
    CHECK_THROWS_AS(shape_classes(3, 3, SymmetryFlags{}), OrderError);
}

TEST_CASE("the reference chain walks three stages in order") {
    PaperReproduction rep = reproduce_paper();
    REQUIRE(rep.reports.size() == 3);

    const DerivationReport& r0 = rep.reports[0];
    CHECK(render_symbol(r0.pattern.symbol) == "phi2(a1, b1)");
    CHECK(r0.context_path.empty());
    CHECK(r0.unknowns == std::vector<std::string>{"alpha1"});
    CHECK(r0.notices.empty());
    CHECK(r0.spot_checks.empty());
    REQUIRE(r0.branches.size() == 1);
    CHECK(r0.branches[0].verified);
    CHECK(r0.branches[0].normalizable);
    CHECK(r0.branches[0].branch.path.empty());
    CHECK(r0.branches[0].branch.free_params.empty());
    CHECK(r0.branches[0].branch.assignments.at("alpha1").is_zero());
    CHECK(r0.branches[0].normalized.rhs.is_zero());

    const DerivationReport& r1 = rep.reports[1];
    CHECK(render_symbol(r1.pattern.symbol) == "phi2(a1 b1, a2)");
    CHECK(r1.context_path == std::vector<std::string>{"phi2(a1, b1):branch-1"});
    CHECK(r1.unknowns == std::vector<std::string>{"alpha1", "alpha2", "alpha3"});
    CHECK(r1.notices == std::vector<std::string>{
              "pattern is not invariant under algebra exchange",
              "instance phi2(a1 b1 c1, a2 b2) has no feasible bracketing"});
    CHECK(r1.spot_checks.size() == 3);
    REQUIRE(r1.branches.size() == 1);
    CHECK(r1.branches[0].verified);
    CHECK(r1.branches[0].branch.assignments.at("alpha1") == CoeffPoly(Rational(1)));
    CHECK(r1.branches[0].branch.assignments.at("alpha2").is_zero());
    CHECK(r1.branches[0].branch.assignments.at("alpha3").is_zero());
    CHECK(r1.branches[0].normalized.rhs == parse_expr("phi2(a1, a2)*phi1(b1)"));
}

TEST_CASE("the balanced four-letter stage forks into the two candidate rules") {
    PaperReproduction rep = reproduce_paper();
    const DerivationReport& r = rep.reports[2];
    CHECK(render_symbol(r.pattern.symbol) == "phi2(a1 b1, a2 b2)");
    CHECK(r.context_path == std::vector<std::string>{
              "phi2(a1, b1):branch-1", "phi2(a1 b1, a2):branch-1"});
    REQUIRE(r.unknowns.size() == 9);
    CHECK(r.notices.empty());
    CHECK(r.spot_checks.size() == 144);

    CHECK(r.combined.size() == 60);
    // The six unit rows and the three exchange rows.
    CHECK(r.combined.contains(av(9) + av(7)));
    CHECK(r.combined.contains(av(8) + av(6)));
    CHECK(r.combined.contains(av(5) + av(4) - CoeffPoly(Rational(1))));
    CHECK(r.combined.contains(av(9) + av(8)));
    CHECK(r.combined.contains(av(7) + av(6)));
    CHECK(r.combined.contains(av(3) + av(2) - CoeffPoly(Rational(1))));
    CHECK(r.combined.contains(av(8) - av(7)));
    CHECK(r.combined.contains(av(5) - av(3)));
    CHECK(r.combined.contains(av(4) - av(2)));
    // The quadratic obstructions carrying the case split.
    CHECK(r.combined.contains(av(1) * av(6) - av(4) * av(4)));
    CHECK(r.combined.contains(av(1) * av(6) - av(4) * av(4) + av(4)));
    CHECK(r.combined.contains(av(4) * av(4) - av(2) * av(4)));

    REQUIRE(r.associativity.size() == 2);
    CHECK(render_symbol(r.associativity[0].instance) == "phi2(a1 b1 c1, a2 b2 c2)");
    CHECK(render_symbol(r.associativity[1].instance) == "phi2(a1 b1 c1, a2 c2 b2)");
    for (const auto& check : r.associativity) {
        CHECK(check.routes.size() == 3);
        CHECK(check.constraints.size() == 30);
        CHECK(check.notices.empty());
    }

    REQUIRE(r.branches.size() == 2);
    const BranchReport& b1 = r.branches[0];
    CHECK(b1.branch.path == std::vector<std::string>{"alpha1 = 0"});
    CHECK(b1.branch.free_params == std::vector<std::string>{"alpha6"});
    CHECK(b1.branch.assignments.at("alpha7") == -av(6));
    CHECK(b1.branch.assignments.at("alpha8") == -av(6));
    CHECK(b1.branch.assignments.at("alpha9") == av(6));
    CHECK(b1.branch.assignments.count("alpha6") == 0);
    CHECK(b1.verified);
    Point p1 = branch_point(b1.branch, r.unknowns);
    CHECK(p1 == point_of({{"alpha1", 0}, {"alpha2", 0}, {"alpha3", 1},
                          {"alpha4", 0}, {"alpha5", 1}, {"alpha6", 1},
                          {"alpha7", -1}, {"alpha8", -1}, {"alpha9", 1}}));
    CHECK(b1.normalized.rhs == parse_expr(
              "phi2(a1, a2)*phi1(b1)*phi1(b2) + phi2(b1, b2)*phi1(a1)*phi1(a2)"
              " + phi1(a1 a2)*phi1(b1 b2) - phi1(a1 a2)*phi1(b1)*phi1(b2)"
              " - phi1(a1)*phi1(a2)*phi1(b1 b2) + phi1(a1)*phi1(a2)*phi1(b1)*phi1(b2)"));

    const BranchReport& b2 = r.branches[1];
    CHECK(b2.branch.path == std::vector<std::string>{"alpha6 = 0"});
    CHECK(b2.branch.free_params == std::vector<std::string>{"alpha1"});
    CHECK(b2.branch.assignments.count("alpha1") == 0);
    CHECK(b2.branch.assignments.at("alpha3") == CoeffPoly(Rational(1)));
    CHECK(b2.branch.assignments.at("alpha5") == CoeffPoly(Rational(1)));
    CHECK(b2.branch.assignments.at("alpha6").is_zero());
    CHECK(b2.verified);
    Point p2 = branch_point(b2.branch, r.unknowns);
    CHECK(p2 == point_of({{"alpha1", 1}, {"alpha2", 0}, {"alpha3", 1},
                          {"alpha4", 0}, {"alpha5", 1}, {"alpha6", 0},
                          {"alpha7", 0}, {"alpha8", 0}, {"alpha9", 0}}));
    CHECK(b2.normalized.rhs == parse_expr(
              "phi2(a1, a2)*phi2(b1, b2) + phi2(a1, a2)*phi1(b1)*phi1(b2)"
              " + phi2(b1, b2)*phi1(a1)*phi1(a2)"));

    CHECK(combined_vanishes(r, p1));
    CHECK(combined_vanishes(r, p2));
}

TEST_CASE("first-order classification walks eleven reports over two contexts") {
    ClassificationResult result = classify_first_order(4);
    REQUIRE(result.reports.size() == 11);
    CHECK(result.final_contexts.size() == 2);
    CHECK(result.max_letters == 4);

    const std::vector<std::string> want_patterns = {
        "phi1(a1 b1)",       "phi1(a1 a2 b1)",    "phi1(a1 b1 c1)",
        "phi1(a1 a2 a3 b1)", "phi1(a1 a2 b1 b2)", "phi1(a1 a2 b1 c1)",
        "phi1(a1 b1 a2 b2)", "phi1(a1 b1 a2 c1)", "phi1(a1 b1 a2 c1)",
        "phi1(a1 b1 c1 d1)", "phi1(a1 b1 c1 d1)"};
    for (std::size_t i = 0; i < want_patterns.size(); ++i)
        CHECK(render_symbol(result.reports[i].pattern.symbol) == want_patterns[i]);

    for (const auto& r : result.reports) {
        CHECK(r.first_order_via_rules);
        for (const auto& b : r.branches) {
            CHECK(b.verified);
            CHECK(b.normalizable);
            CHECK(b.branch.free_params.empty());
            CHECK(b.branch.residual.empty());
        }
    }

    const DerivationReport& fork = result.reports[6];
    REQUIRE(fork.branches.size() == 2);
    CHECK(fork.branches[0].branch.path == std::vector<std::string>{"alpha1 = 0"});
    CHECK(fork.branches[1].branch.path == std::vector<std::string>{"alpha1 = 1"});
    CHECK(fork.context_path.size() == 6);

    CHECK(result.reports[7].context_path.back() == "phi1(a1 b1 a2 b2):branch-1");
    CHECK(result.reports[8].context_path.back() == "phi1(a1 b1 a2 b2):branch-2");
    CHECK(result.reports[9].context_path.back() == "phi1(a1 b1 a2 c1):branch-1");
    CHECK(result.reports[10].context_path.back() == "phi1(a1 b1 a2 c1):branch-1");
    REQUIRE(result.reports[9].context_path.size() == 8);
    CHECK(result.reports[9].context_path[6] == "phi1(a1 b1 a2 b2):branch-1");
    CHECK(result.reports[10].context_path[6] == "phi1(a1 b1 a2 b2):branch-2");
}

TEST_CASE("the two fixed models land on opposite branches of the fork") {
    ClassificationResult result = classify_first_order(4);
    const DerivationReport& fork = result.reports[6];
    REQUIRE(render_symbol(fork.pattern.symbol) == "phi1(a1 b1 a2 b2)");

    Point free_pt = model_point(fork, Factorizer::free_product);
    Point tensor_pt = model_point(fork, Factorizer::tensor_product);
    CHECK(free_pt == point_of({{"alpha1", 0}, {"alpha2", 1}, {"alpha3", 1}, {"alpha4", -1}}));
    CHECK(tensor_pt == point_of({{"alpha1", 1}, {"alpha2", 0}, {"alpha3", 0}, {"alpha4", 0}}));

    CHECK(combined_vanishes(fork, free_pt));
    CHECK(combined_vanishes(fork, tensor_pt));
    CHECK(branch_contains(fork.branches[0].branch, free_pt));
    CHECK(branch_contains(fork.branches[1].branch, tensor_pt));
    CHECK_FALSE(branch_contains(fork.branches[0].branch, tensor_pt));
    CHECK_FALSE(branch_contains(fork.branches[1].branch, free_pt));
}

TEST_CASE("both fixed models replay cleanly through the classification") {
    ClassificationResult result = classify_first_order(4);
    CHECK(replay_model(result, Factorizer::free_product) == 9);
    CHECK(replay_model(result, Factorizer::tensor_product) == 9);
}

TEST_CASE("classification respects smaller letter bounds") {
    ClassificationResult two = classify_first_order(2);
    REQUIRE(two.reports.size() == 1);
    CHECK(render_symbol(two.reports[0].pattern.symbol) == "phi1(a1 b1)");
    CHECK(two.final_contexts.size() == 1);

    ClassificationResult three = classify_first_order(3);
    REQUIRE(three.reports.size() == 3);
    CHECK(three.final_contexts.size() == 1);
    for (const auto& r : three.reports) REQUIRE(r.branches.size() == 1);
}

TEST_CASE("a fixed model pins the diagonal four-letter stage directly") {
    Pattern p = pattern_of("phi1(a1 b1 a2 b2)");

    auto free_reports = derive_pattern(p, Factorizer::free_product);
    REQUIRE(free_reports.size() == 1);
    const DerivationReport& fr = free_reports[0];
    CHECK(fr.context_path.empty());
    CHECK(fr.notices == std::vector<std::string>{
              "pattern is not invariant under algebra exchange"});
    REQUIRE(fr.branches.size() == 1);
    CHECK(fr.branches[0].branch.path.empty());
    CHECK(fr.branches[0].branch.free_params.empty());
    CHECK(branch_point(fr.branches[0].branch, fr.unknowns) ==
          model_point(fr.ansatz, Factorizer::free_product));
    CHECK(fr.branches[0].normalized.rhs == parse_expr(
              "phi1(a1 a2)*phi1(b1)*phi1(b2) + phi1(a1)*phi1(a2)*phi1(b1 b2)"
              " - phi1(a1)*phi1(a2)*phi1(b1)*phi1(b2)"));

    auto tensor_reports = derive_pattern(p, Factorizer::tensor_product);
    REQUIRE(tensor_reports.size() == 1);
    const DerivationReport& tr = tensor_reports[0];
    REQUIRE(tr.branches.size() == 1);
    CHECK(branch_point(tr.branches[0].branch, tr.unknowns) ==
          model_point(tr.ansatz, Factorizer::tensor_product));
    CHECK(tr.branches[0].normalized.rhs == parse_expr("phi1(a1 a2)*phi1(b1 b2)"));
}

TEST_CASE("exploration threads one candidate context through a longer pattern") {
    Pattern p = pattern_of("phi2(a1 b1 a2, b2)");
    const std::vector<std::string> staged_prefix = {
        "phi2(a1, b1):branch-1", "phi2(a1 a2, b1):branch-1",
        "phi2(a1 b1, a2):branch-1", "phi2(a1 b1, c1):branch-1"};

    auto first = explore_pattern(p, BranchChoice::candidate_1);
    REQUIRE(first.size() == 1);
    const DerivationReport& r = first[0];
    CHECK(render_symbol(r.pattern.symbol) == "phi2(a1 a2 b1, b2)");
    std::vector<std::string> want_ctx = staged_prefix;
    want_ctx.push_back("phi2(a1 b1, a2 b2):branch-1");
    CHECK(r.context_path == want_ctx);
    CHECK(r.notices == std::vector<std::string>{
              "pattern is not invariant under algebra exchange"});
    REQUIRE(r.branches.size() == 1);
    CHECK(r.branches[0].branch.path.empty());
    CHECK(r.branches[0].branch.free_params.empty());
    CHECK(r.branches[0].branch.assignments.at("alpha4") == CoeffPoly(Rational(1)));
    CHECK(r.branches[0].branch.assignments.at("alpha1").is_zero());
    CHECK(r.branches[0].branch.assignments.at("alpha6").is_zero());
    CHECK(r.branches[0].normalized.rhs == parse_expr("phi2(b1, b2)*phi1(a1 a2)"));

    auto second = explore_pattern(p, BranchChoice::candidate_2);
    REQUIRE(second.size() == 1);
    CHECK(second[0].context_path.back() == "phi2(a1 b1, a2 b2):branch-2");
    REQUIRE(second[0].branches.size() == 1);
    CHECK(second[0].branches[0].normalized.rhs == parse_expr("phi2(b1, b2)*phi1(a1 a2)"));

    auto both = explore_pattern(p, BranchChoice::all);
    REQUIRE(both.size() == 2);
    CHECK(both[0].context_path.back() == "phi2(a1 b1, a2 b2):branch-1");
    CHECK(both[1].context_path.back() == "phi2(a1 b1, a2 b2):branch-2");
}

TEST_CASE("exploring the branching class itself reports the fork") {
    auto reports = explore_pattern(pattern_of("phi2(a1 b1, a2 b2)"), BranchChoice::candidate_1);
    REQUIRE(reports.size() == 1);
    const DerivationReport& r = reports[0];
    CHECK(r.context_path == std::vector<std::string>{
              "phi2(a1, b1):branch-1", "phi2(a1 a2, b1):branch-1",
              "phi2(a1 b1, a2):branch-1", "phi2(a1 b1, c1):branch-1"});
    CHECK(r.notices == std::vector<std::string>{
              "branch choice does not apply: the target is the branching class"});
    REQUIRE(r.branches.size() == 2);
    CHECK(r.branches[0].branch.path == std::vector<std::string>{"alpha1 = 0"});
    CHECK(r.branches[1].branch.path == std::vector<std::string>{"alpha6 = 0"});
}

TEST_CASE("derivation interfaces reject out-of-scope requests") {
    CHECK_THROWS_AS(explore_pattern(pattern_of("phi1(a1 b1 a2 b2)"), BranchChoice::candidate_1),
                    OrderError);
    CHECK_THROWS_AS(classify_first_order(1), SizeLimitError);
    CHECK_THROWS_AS(classify_first_order(7), SizeLimitError);

    StageContext empty_ctx;
    DerivationReport cross = derive_rule(pattern_of("phi2(a1, b1)"), empty_ctx);
    CHECK_THROWS_AS(model_point(cross, Factorizer::free_product), OrderError);
}
