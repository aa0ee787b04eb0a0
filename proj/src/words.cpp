#include "uniprod/words.hpp"

namespace uniprod {

int letter_cmp(const Letter& a, const Letter& b) {
    if (a.algebra != b.algebra) return a.algebra < b.algebra ? -1 : 1;
    if (a.index != b.index) return a.index < b.index ? -1 : 1;
    return 0;
}

int word_cmp(const Word& a, const Word& b) {
    std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        int c = letter_cmp(a[i], b[i]);
        if (c != 0) return c;
    }
    if (a.size() == b.size()) return 0;
    return a.size() > b.size() ? -1 : 1;
}

Word rotate_word(const Word& w, std::size_t offset) {
    if (w.empty()) return w;
    offset %= w.size();
    Word out;
    out.reserve(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) out.push_back(w[(i + offset) % w.size()]);
    return out;
}

Word canonical_rotation(const Word& w, bool tracial) {
    if (!tracial || w.size() < 2) return w;
    Word best = w;
    for (std::size_t off = 1; off < w.size(); ++off) {
        Word cand = rotate_word(w, off);
        if (word_cmp(cand, best) < 0) best = cand;
    }
    return best;
}

std::string render_letter(const Letter& l) { return l.algebra + std::to_string(l.index); }

std::string render_word(const Word& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ' ';
        out += render_letter(w[i]);
    }
    return out;
}

std::set<std::string> word_algebras(const Word& w) {
    std::set<std::string> s;
    for (const auto& l : w) s.insert(l.algebra);
    return s;
}

}  // namespace uniprod
