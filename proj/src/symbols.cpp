#include "uniprod/symbols.hpp"

#include <algorithm>

namespace uniprod {

MomentSymbol make_phi1(Word w) {
    MomentSymbol s;
    s.order = 1;
    s.args[0] = std::move(w);
    return s;
}

MomentSymbol make_phi2(Word w1, Word w2) {
    MomentSymbol s;
    s.order = 2;
    s.args[0] = std::move(w1);
    s.args[1] = std::move(w2);
    return s;
}

int symbol_cmp(const MomentSymbol& a, const MomentSymbol& b) {
    if (a.order != b.order) return a.order == 2 ? -1 : 1;
    int c = word_cmp(a.args[0], b.args[0]);
    if (c != 0) return c;
    return word_cmp(a.args[1], b.args[1]);
}

std::string render_symbol(const MomentSymbol& s) {
    if (s.order == 1) return "phi1(" + render_word(s.args[0]) + ")";
    return "phi2(" + render_word(s.args[0]) + ", " + render_word(s.args[1]) + ")";
}

static std::string latex_word(const Word& w) {
    std::string out;
    for (const auto& l : w) {
        if (!out.empty()) out += ' ';
        out += l.algebra + "_{" + std::to_string(l.index) + "}";
    }
    return out;
}

std::string render_symbol_latex(const MomentSymbol& s) {
    if (s.order == 1) return "\\varphi_1(" + latex_word(s.args[0]) + ")";
    return "\\varphi_2(" + latex_word(s.args[0]) + ", " + latex_word(s.args[1]) + ")";
}

std::set<std::string> symbol_algebras(const MomentSymbol& s) {
    std::set<std::string> out = word_algebras(s.args[0]);
    auto more = word_algebras(s.args[1]);
    out.insert(more.begin(), more.end());
    return out;
}

bool symbol_single_algebra(const MomentSymbol& s) { return symbol_algebras(s).size() <= 1; }

std::size_t symbol_letter_count(const MomentSymbol& s) {
    return s.args[0].size() + s.args[1].size();
}

CanonSymbol canonicalize_symbol(const MomentSymbol& s, const SymmetryFlags& flags) {
    if (s.order == 1) {
        if (s.args[0].empty()) return CanonSymbol::one();
        return CanonSymbol::of(make_phi1(canonical_rotation(s.args[0], flags.phi1_tracial)));
    }
    if (s.args[0].empty() || s.args[1].empty()) return CanonSymbol::zero();
    Word a = canonical_rotation(s.args[0], flags.phi2_tracial_each_arg);
    Word b = canonical_rotation(s.args[1], flags.phi2_tracial_each_arg);
    if (flags.phi2_symmetric && word_cmp(b, a) < 0) std::swap(a, b);
    return CanonSymbol::of(make_phi2(std::move(a), std::move(b)));
}

Monomial make_monomial(std::vector<MomentSymbol> factors) {
    std::sort(factors.begin(), factors.end(),
              [](const MomentSymbol& a, const MomentSymbol& b) { return symbol_cmp(a, b) < 0; });
    return Monomial{std::move(factors)};
}

int monomial_cmp(const Monomial& a, const Monomial& b) {
    auto count2 = [](const Monomial& m) {
        std::size_t n = 0;
        for (const auto& f : m.factors) n += (f.order == 2);
        return n;
    };
    std::size_t na = count2(a), nb = count2(b);
    if (na != nb) return na > nb ? -1 : 1;
    std::size_t n = std::min(a.factors.size(), b.factors.size());
    for (std::size_t i = 0; i < n; ++i) {
        int c = symbol_cmp(a.factors[i], b.factors[i]);
        if (c != 0) return c;
    }
    if (a.factors.size() == b.factors.size()) return 0;
    return a.factors.size() < b.factors.size() ? -1 : 1;
}

std::string render_monomial(const Monomial& m) {
    if (m.factors.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < m.factors.size(); ++i) {
        if (i) out += '*';
        out += render_symbol(m.factors[i]);
    }
    return out;
}

std::string render_monomial_latex(const Monomial& m) {
    if (m.factors.empty()) return "1";
    std::string out;
    for (const auto& f : m.factors) out += render_symbol_latex(f);
    return out;
}

}  // namespace uniprod
