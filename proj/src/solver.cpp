#include "uniprod/solver.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "uniprod/errors.hpp"

namespace uniprod {

namespace {

struct WorkBranch {
    std::vector<CoeffPoly> constraints;
    std::map<std::string, CoeffPoly, VarNaturalLess> assignments;
    std::vector<std::string> path;
};

// Applies the assignments, normalizes, dedupes. False when a nonzero
// constant shows up (the case is contradictory).
bool simplify(WorkBranch& wb) {
    std::vector<CoeffPoly> next;
    for (const auto& p : wb.constraints) {
        CoeffPoly q = p.substituted(wb.assignments).normalized();
        if (q.is_zero()) continue;
        if (q.is_constant()) return false;
        next.push_back(q);
    }
    std::sort(next.begin(), next.end(), PolyLess{});
    next.erase(std::unique(next.begin(), next.end()), next.end());
    wb.constraints = std::move(next);
    return true;
}

// Row reduction over the rationals with the distinct power products as
// columns, highest first. False on a contradictory row.
bool row_reduce(std::vector<CoeffPoly>& constraints) {
    std::set<Mono, MonoGreater> col_set;
    for (const auto& p : constraints)
        for (const auto& [m, c] : p.terms()) col_set.insert(m);
    std::vector<Mono> cols(col_set.begin(), col_set.end());

    std::vector<std::vector<Rational>> rows;
    for (const auto& p : constraints) {
        std::vector<Rational> row(cols.size(), Rational(0));
        for (std::size_t c = 0; c < cols.size(); ++c) row[c] = p.coefficient(cols[c]);
        rows.push_back(std::move(row));
    }

    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols.size() && rank < rows.size(); ++c) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        Rational lead = rows[rank][c];
        for (auto& x : rows[rank]) x /= lead;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == rank || rows[i][c] == 0) continue;
            Rational factor = rows[i][c];
            for (std::size_t j = 0; j < cols.size(); ++j) rows[i][j] -= factor * rows[rank][j];
        }
        ++rank;
    }

    std::vector<CoeffPoly> out;
    for (std::size_t i = 0; i < rank; ++i) {
        CoeffPoly p;
        for (std::size_t j = 0; j < cols.size(); ++j)
            if (rows[i][j] != 0) p.add_term(cols[j], rows[i][j]);
        p = p.normalized();
        if (p.is_zero()) continue;
        if (p.is_constant()) return false;
        out.push_back(std::move(p));
    }
    std::sort(out.begin(), out.end(), PolyLess{});
    constraints = std::move(out);
    return true;
}

// Records var := value, substituting into the stored assignments so they
// stay expressed in unassigned variables only.
void assign(WorkBranch& wb, const std::string& var, const CoeffPoly& value) {
    std::map<std::string, CoeffPoly, VarNaturalLess> image{{var, value}};
    for (auto& [v, expr] : wb.assignments) expr = expr.substituted(image);
    wb.assignments[var] = value;
}

// Pulls every degree-<=1 row into an assignment for its leading variable.
bool extract_linear(WorkBranch& wb) {
    bool any = false;
    for (const auto& p : wb.constraints) {
        if (p.total_degree() > 1) continue;
        const auto& lead = *p.terms().begin();  // highest mono, a single variable
        std::string var = lead.first.begin()->first;
        CoeffPoly value =
            (CoeffPoly::variable(var).scaled(lead.second) - p).scaled(Rational(1) / lead.second);
        assign(wb, var, value);
        any = true;
    }
    return any;
}

// c * x^n with n >= 2 forces x = 0.
bool extract_pure_power(WorkBranch& wb) {
    for (const auto& p : wb.constraints) {
        if (p.terms().size() != 1) continue;
        const Mono& m = p.terms().begin()->first;
        if (m.size() != 1 || m.begin()->second < 2) continue;
        assign(wb, m.begin()->first, CoeffPoly(Rational(0)));
        return true;
    }
    return false;
}

const CoeffPoly* find_monomial_product(const std::vector<CoeffPoly>& constraints) {
    for (const auto& p : constraints) {
        if (p.terms().size() != 1) continue;
        if (p.terms().begin()->first.size() >= 2) return &p;
    }
    return nullptr;
}

std::string render_assignment(const std::string& var, const CoeffPoly& value) {
    return var + " = " + value.render();
}

std::string branch_key(const SolutionBranch& b) {
    std::string key;
    for (const auto& [v, expr] : b.assignments) key += v + "=" + expr.render() + ";";
    key += "|";
    for (const auto& r : b.residual) key += r.render() + ";";
    return key;
}

}  // namespace

std::vector<SolutionBranch> solve(const ConstraintSet& cs, const std::vector<std::string>& unknowns,
                                  std::size_t branch_cap) {
    if (cs.size() > kMaxConstraints)
        throw SizeLimitError("constraint system exceeds the row bound");
    if (unknowns.size() > kMaxUnknowns)
        throw SizeLimitError("constraint system exceeds the unknown bound");

    std::deque<WorkBranch> queue;
    queue.push_back(WorkBranch{cs.items(), {}, {}});
    std::size_t created = 1;

    std::vector<SolutionBranch> results;
    std::set<std::string> seen;

    auto enqueue = [&](WorkBranch child) {
        if (++created > branch_cap) throw BranchOverflowError("case analysis exceeded the branch cap");
        queue.push_back(std::move(child));
    };

    while (!queue.empty()) {
        WorkBranch wb = std::move(queue.front());
        queue.pop_front();

        bool alive = true;
        bool settled = false;
        while (alive && !settled) {
            if (!simplify(wb)) {
                alive = false;
                break;
            }
            if (wb.constraints.empty()) {
                settled = true;
                break;
            }
            if (!row_reduce(wb.constraints)) {
                alive = false;
                break;
            }
            if (extract_linear(wb)) continue;
            if (extract_pure_power(wb)) continue;

            if (const CoeffPoly* prod = find_monomial_product(wb.constraints)) {
                const Mono& m = prod->terms().begin()->first;
                for (const auto& [var, exp] : m) {
                    WorkBranch child = wb;
                    assign(child, var, CoeffPoly(Rational(0)));
                    child.path.push_back(render_assignment(var, CoeffPoly(Rational(0))));
                    enqueue(std::move(child));
                }
                alive = false;
                break;
            }

            const CoeffPoly* uni = nullptr;
            std::vector<Rational> roots;
            for (const auto& p : wb.constraints) {
                auto vars = p.variables();
                if (vars.size() != 1) continue;
                bool complete = false;
                auto r = univariate_rational_roots(p, *vars.begin(), complete);
                if (!complete) continue;
                uni = &p;
                roots = std::move(r);
                break;
            }
            if (uni) {
                std::string var = *uni->variables().begin();
                std::sort(roots.begin(), roots.end());
                roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
                for (const auto& root : roots) {
                    WorkBranch child = wb;
                    assign(child, var, CoeffPoly(root));
                    child.path.push_back(render_assignment(var, CoeffPoly(root)));
                    enqueue(std::move(child));
                }
                alive = false;
                break;
            }

            settled = true;  // nothing else applies; the rest is residual
        }
        if (!alive) continue;

        SolutionBranch b;
        b.assignments = std::move(wb.assignments);
        b.residual = std::move(wb.constraints);
        b.path = std::move(wb.path);
        for (const auto& u : unknowns)
            if (!b.assignments.count(u)) b.free_params.push_back(u);
        if (seen.insert(branch_key(b)).second) results.push_back(std::move(b));
    }
    return results;
}

namespace {

// Linear-span membership against the residual rows, by elimination.
bool in_span(const CoeffPoly& q, const std::vector<CoeffPoly>& basis) {
    if (q.is_zero()) return true;
    std::vector<CoeffPoly> rows = basis;
    rows.push_back(q);
    std::set<Mono, MonoGreater> col_set;
    for (const auto& p : rows)
        for (const auto& [m, c] : p.terms()) col_set.insert(m);
    std::vector<Mono> cols(col_set.begin(), col_set.end());

    std::vector<std::vector<Rational>> mat;
    for (const auto& p : basis) {
        std::vector<Rational> row(cols.size(), Rational(0));
        for (std::size_t c = 0; c < cols.size(); ++c) row[c] = p.coefficient(cols[c]);
        mat.push_back(std::move(row));
    }
    std::vector<Rational> target(cols.size(), Rational(0));
    for (std::size_t c = 0; c < cols.size(); ++c) target[c] = q.coefficient(cols[c]);

    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols.size() && rank < mat.size(); ++c) {
        std::size_t pivot = rank;
        while (pivot < mat.size() && mat[pivot][c] == 0) ++pivot;
        if (pivot == mat.size()) continue;
        std::swap(mat[rank], mat[pivot]);
        Rational lead = mat[rank][c];
        for (auto& x : mat[rank]) x /= lead;
        for (std::size_t i = 0; i < mat.size(); ++i) {
            if (i == rank || mat[i][c] == 0) continue;
            Rational f = mat[i][c];
            for (std::size_t j = 0; j < cols.size(); ++j) mat[i][j] -= f * mat[rank][j];
        }
        if (target[c] != 0) {
            Rational f = target[c];
            for (std::size_t j = 0; j < cols.size(); ++j) target[j] -= f * mat[rank][j];
        }
        ++rank;
    }
    for (const auto& x : target)
        if (x != 0) return false;
    return true;
}

}  // namespace

bool verify_branch(const ConstraintSet& cs, const SolutionBranch& b) {
    for (const auto& p : cs.items()) {
        CoeffPoly q = p.substituted(b.assignments).normalized();
        if (!in_span(q, b.residual)) return false;
    }
    return true;
}

bool branch_contains(const SolutionBranch& b,
                     const std::map<std::string, Rational, VarNaturalLess>& point) {
    for (const auto& [var, expr] : b.assignments) {
        auto it = point.find(var);
        if (it == point.end()) return false;
        if (expr.evaluated(point) != it->second) return false;
    }
    for (const auto& r : b.residual)
        if (r.evaluated(point) != 0) return false;
    return true;
}

std::map<std::string, Rational, VarNaturalLess> branch_point(
    const SolutionBranch& b, const std::vector<std::string>& unknowns) {
    if (!b.residual.empty())
        throw NotFullySolvedError("branch still carries unresolved constraints");
    std::map<std::string, Rational, VarNaturalLess> ones;
    for (const auto& f : b.free_params) ones[f] = Rational(1);
    std::map<std::string, Rational, VarNaturalLess> point;
    for (const auto& u : unknowns) {
        auto it = b.assignments.find(u);
        point[u] = it == b.assignments.end() ? Rational(1) : it->second.evaluated(ones);
    }
    return point;
}

Rule normalize_branch_rule(const Ansatz& a, const SolutionBranch& b,
                           const std::string& provenance) {
    auto point = branch_point(b, a.unknowns);
    std::map<std::string, CoeffPoly, VarNaturalLess> images;
    for (const auto& [var, value] : point) images[var] = CoeffPoly(value);
    Rule r;
    r.rep = a.pattern.symbol;
    r.rhs = a.expr.coeffs_substituted(images);
    r.provenance = provenance;
    return r;
}

}  // namespace uniprod
