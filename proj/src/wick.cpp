#include "uniprod/wick.hpp"

#include <cstddef>
#include <numeric>
#include <string>

#include "uniprod/errors.hpp"

namespace uniprod {

LaurentPoly laurent_add(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out = a;
    for (const auto& [e, c] : b) {
        out[e] += c;
        if (out[e] == 0) out.erase(e);
    }
    return out;
}

LaurentPoly laurent_sub(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out = a;
    for (const auto& [e, c] : b) {
        out[e] -= c;
        if (out[e] == 0) out.erase(e);
    }
    return out;
}

LaurentPoly laurent_mul(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            out[ea + eb] += ca * cb;
            if (out[ea + eb] == 0) out.erase(ea + eb);
        }
    return out;
}

long long laurent_coeff(const LaurentPoly& p, int exponent) {
    auto it = p.find(exponent);
    return it == p.end() ? 0 : it->second;
}

namespace {

struct UnionFind {
    std::vector<int> parent;

    explicit UnionFind(int n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }

    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    void unite(int a, int b) { parent[find(a)] = find(b); }

    int classes() {
        int count = 0;
        for (int i = 0; i < static_cast<int>(parent.size()); ++i)
            if (find(i) == i) ++count;
        return count;
    }
};

struct Slot {
    int algebra;
    int row;  // index position to the left of this factor
    int col;  // index position to the right (cyclically)
};

struct PairingWalk {
    std::vector<Slot> slots;
    std::vector<int> partner;
    LaurentPoly total;

    void run() { descend(std::vector<std::pair<int, int>>{}); }

    void descend(std::vector<std::pair<int, int>> pairs) {
        int first = -1;
        for (int i = 0; i < static_cast<int>(slots.size()); ++i)
            if (partner[i] < 0) {
                first = i;
                break;
            }
        if (first < 0) {
            tally(pairs);
            return;
        }
        for (int j = first + 1; j < static_cast<int>(slots.size()); ++j) {
            if (partner[j] >= 0) continue;
            if (slots[j].algebra != slots[first].algebra) continue;
            partner[first] = j;
            partner[j] = first;
            pairs.emplace_back(first, j);
            descend(pairs);
            pairs.pop_back();
            partner[first] = -1;
            partner[j] = -1;
        }
    }

    void tally(const std::vector<std::pair<int, int>>& pairs) {
        int positions = 0;
        for (const auto& s : slots)
            positions = std::max(positions, std::max(s.row, s.col) + 1);
        UnionFind uf(positions);
        for (const auto& [a, b] : pairs) {
            uf.unite(slots[a].row, slots[b].col);
            uf.unite(slots[a].col, slots[b].row);
        }
        int loops = uf.classes();
        int exponent = loops - static_cast<int>(pairs.size());
        total[exponent] += 1;
        if (total[exponent] == 0) total.erase(exponent);
    }
};

constexpr std::size_t kMaxSlots = 12;

}  // namespace

LaurentPoly trace_moment(const std::vector<TraceWord>& circles) {
    std::size_t count = 0;
    for (const auto& w : circles) count += w.size();
    if (count > kMaxSlots)
        throw SizeLimitError("trace moment limited to " +
                             std::to_string(kMaxSlots) + " matrix factors");
    if (count % 2 != 0) return {};

    PairingWalk walk;
    int base = 0;
    for (const auto& w : circles) {
        int len = static_cast<int>(w.size());
        if (len == 0)
            throw SizeLimitError("trace moment needs nonempty words");
        for (int k = 0; k < len; ++k)
            walk.slots.push_back({w[k], base + k, base + (k + 1) % len});
        base += len;
    }
    walk.partner.assign(walk.slots.size(), -1);
    walk.run();
    return walk.total;
}

Rational phi1_limit(const TraceWord& word) {
    LaurentPoly e = trace_moment({word});
    for (const auto& [exp, coeff] : e)
        if (exp > 1 && coeff != 0)
            throw InternalError("trace expectation grows faster than N");
    return Rational(static_cast<long>(laurent_coeff(e, 1)));
}

Rational phi2_limit(const TraceWord& lhs, const TraceWord& rhs) {
    LaurentPoly joint = trace_moment({lhs, rhs});
    LaurentPoly split = laurent_mul(trace_moment({lhs}), trace_moment({rhs}));
    LaurentPoly cov = laurent_sub(joint, split);
    for (const auto& [exp, coeff] : cov)
        if (exp > 0 && coeff != 0)
            throw InternalError("trace covariance grows with N");
    return Rational(static_cast<long>(laurent_coeff(cov, 0)));
}

}  // namespace uniprod
