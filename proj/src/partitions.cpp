#include "uniprod/partitions.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "uniprod/errors.hpp"

namespace uniprod {

SetPartition normalize_partition(SetPartition p) {
    for (auto& b : p) std::sort(b.begin(), b.end());
    std::sort(p.begin(), p.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) { return a[0] < b[0]; });
    return p;
}

std::string render_partition(const SetPartition& p) {
    std::string out;
    for (const auto& b : p) {
        out += '{';
        for (std::size_t i = 0; i < b.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(b[i]);
        }
        out += '}';
    }
    return out;
}

std::vector<SetPartition> enumerate_partitions(int n, int bound) {
    if (n < 0 || n > bound) throw SizeLimitError("partition ground set too large");
    std::vector<SetPartition> out;
    if (n == 0) {
        out.push_back({});
        return out;
    }
    // Restricted growth strings.
    std::vector<int> rgs(static_cast<std::size_t>(n), 0);
    auto emit = [&]() {
        int blocks = *std::max_element(rgs.begin(), rgs.end()) + 1;
        SetPartition p(static_cast<std::size_t>(blocks));
        for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(rgs[i])].push_back(i);
        out.push_back(std::move(p));
    };
    // Iterate all RGS in lexicographic order.
    for (;;) {
        emit();
        int i = n - 1;
        while (i > 0) {
            int cap = 0;
            for (int j = 0; j < i; ++j) cap = std::max(cap, rgs[j]);
            if (rgs[i] <= cap) break;
            --i;
        }
        if (i == 0) break;
        ++rgs[i];
        for (int j = i + 1; j < n; ++j) rgs[j] = 0;
    }
    return out;
}

bool is_noncrossing(const SetPartition& p) {
    int n = 0;
    for (const auto& b : p) n += static_cast<int>(b.size());
    std::vector<int> owner(static_cast<std::size_t>(n), -1);
    for (std::size_t bi = 0; bi < p.size(); ++bi)
        for (int x : p[bi]) owner[static_cast<std::size_t>(x)] = static_cast<int>(bi);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d)
                    if (owner[a] == owner[c] && owner[b] == owner[d] && owner[a] != owner[b])
                        return false;
    return true;
}

namespace {

// Non-crossing partitions of an arbitrary ordered ground segment.
void nc_rec(const std::vector<int>& ground, std::vector<SetPartition>& out) {
    if (ground.empty()) {
        out.push_back({});
        return;
    }
    int first = ground[0];
    // Choose the rest of the block containing `first` as a subset of the
    // remaining elements; the gaps between consecutive chosen elements are
    // then partitioned independently, which is exactly non-crossing.
    std::vector<int> rest(ground.begin() + 1, ground.end());
    std::size_t m = rest.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
        std::vector<int> block{first};
        std::vector<std::vector<int>> gaps;
        std::vector<int> gap;
        for (std::size_t i = 0; i < m; ++i) {
            if (mask & (std::size_t{1} << i)) {
                gaps.push_back(gap);
                gap.clear();
                block.push_back(rest[i]);
            } else {
                gap.push_back(rest[i]);
            }
        }
        gaps.push_back(gap);
        // Cartesian product of the gap partitions.
        std::vector<std::vector<SetPartition>> gap_parts;
        for (const auto& g : gaps) {
            std::vector<SetPartition> ps;
            nc_rec(g, ps);
            gap_parts.push_back(std::move(ps));
        }
        std::vector<std::size_t> idx(gap_parts.size(), 0);
        for (;;) {
            SetPartition p{block};
            for (std::size_t g = 0; g < gap_parts.size(); ++g)
                for (const auto& b : gap_parts[g][idx[g]]) p.push_back(b);
            out.push_back(normalize_partition(std::move(p)));
            std::size_t k = 0;
            while (k < idx.size()) {
                if (++idx[k] < gap_parts[k].size()) break;
                idx[k] = 0;
                ++k;
            }
            if (k == idx.size()) break;
        }
    }
}

}  // namespace

std::vector<SetPartition> enumerate_nc(int n, int bound) {
    if (n < 0 || n > bound) throw SizeLimitError("non-crossing ground set too large");
    std::vector<int> ground(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) ground[static_cast<std::size_t>(i)] = i;
    std::vector<SetPartition> out;
    nc_rec(ground, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool partition_leq(const SetPartition& lo, const SetPartition& hi) {
    std::map<int, int> owner;
    for (std::size_t bi = 0; bi < hi.size(); ++bi)
        for (int x : hi[bi]) owner[x] = static_cast<int>(bi);
    for (const auto& b : lo) {
        if (b.empty()) continue;
        auto it = owner.find(b[0]);
        if (it == owner.end()) return false;
        for (int x : b) {
            auto jt = owner.find(x);
            if (jt == owner.end() || jt->second != it->second) return false;
        }
    }
    return true;
}

long long nc_moebius(const SetPartition& lo, const SetPartition& hi, int n) {
    if (!partition_leq(lo, hi)) throw OrderError("moebius needs lo <= hi in refinement order");

    static std::map<std::string, long long> memo;
    static std::mutex memo_mutex;
    std::string key = std::to_string(n) + "|" + render_partition(lo) + "|" + render_partition(hi);
    {
        std::lock_guard<std::mutex> lock(memo_mutex);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }

    long long value;
    if (lo == hi) {
        value = 1;
    } else {
        long long acc = 0;
        for (const auto& tau : enumerate_nc(n)) {
            if (tau == hi) continue;
            if (partition_leq(lo, tau) && partition_leq(tau, hi)) acc += nc_moebius(lo, tau, n);
        }
        value = -acc;
    }
    {
        std::lock_guard<std::mutex> lock(memo_mutex);
        memo[key] = value;
    }
    return value;
}

namespace {

SetPartition full_partition(int n) {
    SetPartition p(1);
    for (int i = 0; i < n; ++i) p[0].push_back(i);
    return p;
}

}  // namespace

std::vector<Rational> moments_to_cumulants(const std::vector<Rational>& moments) {
    int upto = static_cast<int>(moments.size());
    std::vector<Rational> out;
    for (int n = 1; n <= upto; ++n) {
        Rational kappa(0);
        for (const auto& sigma : enumerate_nc(n)) {
            Rational prod(static_cast<long>(nc_moebius(sigma, full_partition(n), n)));
            for (const auto& b : sigma) {
                std::size_t order = b.size();
                if (order > moments.size()) throw MissingOrderError("moment table incomplete");
                prod *= moments[order - 1];
            }
            kappa += prod;
        }
        out.push_back(kappa);
    }
    return out;
}

std::vector<Rational> cumulants_to_moments(const std::vector<Rational>& cumulants) {
    int upto = static_cast<int>(cumulants.size());
    std::vector<Rational> out;
    for (int n = 1; n <= upto; ++n) {
        Rational m(0);
        for (const auto& pi : enumerate_nc(n)) {
            Rational prod(1);
            for (const auto& b : pi) {
                std::size_t order = b.size();
                if (order > cumulants.size()) throw MissingOrderError("cumulant table incomplete");
                prod *= cumulants[order - 1];
            }
            m += prod;
        }
        out.push_back(m);
    }
    return out;
}

}  // namespace uniprod
