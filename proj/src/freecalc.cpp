#include "uniprod/freecalc.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "uniprod/errors.hpp"
#include "uniprod/partitions.hpp"

namespace uniprod {

namespace {

SetPartition full_partition(int n) {
    SetPartition p(1);
    for (int i = 0; i < n; ++i) p[0].push_back(i);
    return p;
}

Word subword(const Word& w, const std::vector<int>& positions) {
    Word out;
    for (int i : positions) out.push_back(w[static_cast<std::size_t>(i)]);
    return out;
}

// Cumulant of a single-algebra word, written back in moments:
// sum over NC(k) of moebius(sigma, 1) * prod phi1(block subword).
PolyExpr block_cumulant(const Word& w, const SymmetryFlags& flags) {
    int k = static_cast<int>(w.size());
    PolyExpr acc;
    for (const auto& sigma : enumerate_nc(k)) {
        long mu = static_cast<long>(nc_moebius(sigma, full_partition(k), k));
        PolyExpr term{Rational(mu)};
        for (const auto& block : sigma)
            term = term * PolyExpr::symbol_term(CoeffPoly(Rational(1)),
                                                make_phi1(subword(w, block)), flags);
        acc = acc + term;
    }
    return acc;
}

}  // namespace

PolyExpr free_factorize(const Word& word, const SymmetryFlags& flags, int bound) {
    int n = static_cast<int>(word.size());
    if (n > bound) throw SizeLimitError("word too long for free factorization");
    std::map<std::string, PolyExpr> cumulant_cache;
    PolyExpr acc;
    for (const auto& pi : enumerate_nc(n)) {
        bool monochromatic = true;
        for (const auto& block : pi) {
            const std::string& alg = word[static_cast<std::size_t>(block[0])].algebra;
            for (int i : block)
                if (word[static_cast<std::size_t>(i)].algebra != alg) {
                    monochromatic = false;
                    break;
                }
            if (!monochromatic) break;
        }
        if (!monochromatic) continue;
        PolyExpr term{Rational(1)};
        for (const auto& block : pi) {
            Word sw = subword(word, block);
            std::string key = render_word(sw);
            auto it = cumulant_cache.find(key);
            if (it == cumulant_cache.end())
                it = cumulant_cache.emplace(key, block_cumulant(sw, flags)).first;
            term = term * it->second;
        }
        acc = acc + term;
    }
    return acc;
}

PolyExpr tensor_factorize(const Word& word, const SymmetryFlags& flags) {
    std::vector<std::string> seen;
    PolyExpr out{Rational(1)};
    for (const auto& l : word) {
        if (std::find(seen.begin(), seen.end(), l.algebra) != seen.end()) continue;
        seen.push_back(l.algebra);
        Word sw;
        for (const auto& m : word)
            if (m.algebra == l.algebra) sw.push_back(m);
        out = out * PolyExpr::symbol_term(CoeffPoly(Rational(1)), make_phi1(sw), flags);
    }
    return out;
}

PolyExpr factorize(const Word& word, Factorizer which, const SymmetryFlags& flags, int bound) {
    if (which == Factorizer::tensor_product) return tensor_factorize(word, flags);
    return free_factorize(word, flags, bound);
}

}  // namespace uniprod
