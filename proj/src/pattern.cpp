#include "uniprod/pattern.hpp"

#include <algorithm>
#include <set>

#include "uniprod/errors.hpp"

namespace uniprod {

std::vector<Letter> symbol_letters(const MomentSymbol& s) {
    std::vector<Letter> out;
    for (const auto& arg : s.args)
        for (const auto& l : arg) out.push_back(l);
    return out;
}

std::vector<Letter> pattern_letters(const Pattern& p) { return symbol_letters(p.symbol); }

namespace {

// Relabel algebras and indices by first appearance; returns the relabeled
// symbol and the positional letter correspondence back to the input.
MomentSymbol relabel_first_appearance(const MomentSymbol& s,
                                      std::map<Letter, Letter, LetterLess>* rep_to_input) {
    std::map<std::string, char> algebra_names;
    std::map<std::string, std::map<int, int>> index_names;
    MomentSymbol out = s;
    for (int a = 0; a < 2; ++a) {
        for (std::size_t i = 0; i < s.args[a].size(); ++i) {
            const Letter& l = s.args[a][i];
            auto it = algebra_names.find(l.algebra);
            if (it == algebra_names.end()) {
                if (algebra_names.size() >= 26)
                    throw InternalError("too many algebras to relabel");
                it = algebra_names
                         .emplace(l.algebra, static_cast<char>('a' + algebra_names.size()))
                         .first;
            }
            auto& idx_map = index_names[l.algebra];
            auto jt = idx_map.find(l.index);
            if (jt == idx_map.end())
                jt = idx_map.emplace(l.index, static_cast<int>(idx_map.size()) + 1).first;
            Letter rep{std::string(1, it->second), jt->second};
            out.args[a][i] = rep;
            if (rep_to_input) (*rep_to_input)[rep] = l;
        }
    }
    return out;
}

}  // namespace

ShapeClass compute_class(const MomentSymbol& s, const SymmetryFlags& flags) {
    bool rotate = s.order == 1 ? flags.phi1_tracial : flags.phi2_tracial_each_arg;
    std::vector<bool> swaps{false};
    if (s.order == 2 && flags.phi2_symmetric) swaps.push_back(true);

    ShapeClass best;
    std::string best_key;
    for (bool swap : swaps) {
        MomentSymbol base = s;
        if (swap) std::swap(base.args[0], base.args[1]);
        std::size_t n1 = std::max<std::size_t>(base.args[0].size(), 1);
        std::size_t n2 = std::max<std::size_t>(base.args[1].size(), 1);
        if (!rotate) n1 = n2 = 1;
        for (std::size_t r1 = 0; r1 < n1; ++r1) {
            for (std::size_t r2 = 0; r2 < n2; ++r2) {
                MomentSymbol t = base;
                t.args[0] = rotate_word(t.args[0], r1);
                t.args[1] = rotate_word(t.args[1], r2);
                std::map<Letter, Letter, LetterLess> corr;
                MomentSymbol rep = relabel_first_appearance(t, &corr);
                std::string key = render_symbol(rep);
                if (best_key.empty() || key < best_key) {
                    best_key = key;
                    best.rep = rep;
                    best.rep_to_input = std::move(corr);
                }
            }
        }
    }
    return best;
}

MomentSymbol delete_letter(const MomentSymbol& s, const Letter& l) {
    MomentSymbol out = s;
    for (auto& arg : out.args)
        arg.erase(std::remove(arg.begin(), arg.end(), l), arg.end());
    return out;
}

Pattern make_pattern(const MomentSymbol& s, const SymmetryFlags& flags, std::size_t max_letters) {
    if (s.order == 2 && (s.args[0].empty() || s.args[1].empty()))
        throw DegeneratePatternError("second-order pattern argument is the unit");
    auto letters = symbol_letters(s);
    if (letters.empty()) throw DegeneratePatternError("pattern has no letters");
    if (letters.size() > max_letters) throw SizeLimitError("pattern exceeds the letter bound");
    std::set<Letter, LetterLess> seen;
    for (const auto& l : letters)
        if (!seen.insert(l).second)
            throw DegeneratePatternError("pattern letters must be distinct");
    if (symbol_algebras(s).size() < 2)
        throw DegeneratePatternError("pattern must mix at least two algebras");
    Pattern p;
    p.flags = flags;
    p.symbol = compute_class(s, flags).rep;
    return p;
}

}  // namespace uniprod
