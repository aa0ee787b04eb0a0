#include "uniprod/ansatz.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "uniprod/errors.hpp"
#include "uniprod/partitions.hpp"

namespace uniprod {

std::string unknown_name(std::size_t i) { return "alpha" + std::to_string(i + 1); }

namespace {

using FactorList = std::vector<MomentSymbol>;

bool letter_less(const Letter& x, const Letter& y) { return letter_cmp(x, y) < 0; }

std::string factor_list_key(const FactorList& fs) {
    std::string key;
    for (const auto& f : fs) {
        key += render_symbol(f);
        key += '|';
    }
    return key;
}

// Distinct canonical factors a single block of same-algebra letters can
// carry: every ordering as a phi1 word, and (for second-order patterns)
// every ordered two-part split as a phi2 pair.
std::vector<MomentSymbol> block_factors(std::vector<Letter> block, bool allow_phi2,
                                        const SymmetryFlags& flags) {
    std::vector<MomentSymbol> out;
    std::set<std::string> seen;
    std::sort(block.begin(), block.end(), letter_less);
    do {
        CanonSymbol c1 = canonicalize_symbol(make_phi1(block), flags);
        if (c1.kind == CanonSymbol::Kind::symbol && seen.insert(render_symbol(c1.sym)).second)
            out.push_back(c1.sym);
        if (allow_phi2) {
            for (std::size_t cut = 1; cut < block.size(); ++cut) {
                Word lhs(block.begin(), block.begin() + static_cast<std::ptrdiff_t>(cut));
                Word rhs(block.begin() + static_cast<std::ptrdiff_t>(cut), block.end());
                CanonSymbol c2 = canonicalize_symbol(make_phi2(lhs, rhs), flags);
                if (c2.kind == CanonSymbol::Kind::symbol &&
                    seen.insert(render_symbol(c2.sym)).second)
                    out.push_back(c2.sym);
            }
        }
    } while (std::next_permutation(block.begin(), block.end(), letter_less));
    return out;
}

// All distinct sorted factor lists for one algebra's letters.
std::vector<FactorList> algebra_options(const std::vector<Letter>& letters, bool allow_phi2,
                                        const SymmetryFlags& flags) {
    std::vector<FactorList> out;
    std::set<std::string> seen;
    for (const auto& part : enumerate_partitions(static_cast<int>(letters.size()))) {
        std::vector<std::vector<MomentSymbol>> per_block;
        for (const auto& blk : part) {
            std::vector<Letter> block;
            for (int i : blk) block.push_back(letters[static_cast<std::size_t>(i)]);
            per_block.push_back(block_factors(std::move(block), allow_phi2, flags));
        }
        std::vector<std::size_t> pick(per_block.size(), 0);
        while (true) {
            FactorList fs;
            for (std::size_t b = 0; b < per_block.size(); ++b)
                fs.push_back(per_block[b][pick[b]]);
            std::sort(fs.begin(), fs.end(), [](const MomentSymbol& x, const MomentSymbol& y) {
                return symbol_cmp(x, y) < 0;
            });
            if (seen.insert(factor_list_key(fs)).second) out.push_back(std::move(fs));
            std::size_t b = 0;
            for (; b < pick.size(); ++b) {
                if (++pick[b] < per_block[b].size()) break;
                pick[b] = 0;
            }
            if (b == pick.size()) break;
        }
    }
    return out;
}

}  // namespace

std::vector<Monomial> enumerate_monomials(const Pattern& p) {
    std::map<std::string, std::vector<Letter>> by_algebra;
    for (const auto& l : pattern_letters(p)) by_algebra[l.algebra].push_back(l);
    if (by_algebra.size() < 2)
        throw DegeneratePatternError("pattern must mix at least two algebras");

    bool allow_phi2 = p.symbol.order == 2;
    std::vector<std::vector<FactorList>> options;
    for (const auto& [alg, ls] : by_algebra)
        options.push_back(algebra_options(ls, allow_phi2, p.flags));

    std::set<Monomial, MonomialLess> monos;
    std::vector<std::size_t> pick(options.size(), 0);
    while (true) {
        std::vector<MomentSymbol> factors;
        for (std::size_t g = 0; g < options.size(); ++g)
            for (const auto& f : options[g][pick[g]]) factors.push_back(f);
        monos.insert(make_monomial(std::move(factors)));
        std::size_t g = 0;
        for (; g < pick.size(); ++g) {
            if (++pick[g] < options[g].size()) break;
            pick[g] = 0;
        }
        if (g == pick.size()) break;
    }
    return {monos.begin(), monos.end()};
}

Ansatz build_ansatz(const Pattern& p) {
    Ansatz a;
    a.pattern = p;
    a.monomials = enumerate_monomials(p);
    for (std::size_t i = 0; i < a.monomials.size(); ++i) {
        a.unknowns.push_back(unknown_name(i));
        a.expr.add_term(a.monomials[i], CoeffPoly::variable(a.unknowns.back()));
    }
    return a;
}

}  // namespace uniprod
