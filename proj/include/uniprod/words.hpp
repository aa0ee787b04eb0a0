#pragma once

#include <set>
#include <string>
#include <vector>

namespace uniprod {

// A formal algebra element: algebra label plus a 1-based instance index.
struct Letter {
    std::string algebra;
    int index = 1;

    bool operator==(const Letter& o) const {
        return algebra == o.algebra && index == o.index;
    }
    bool operator!=(const Letter& o) const { return !(*this == o); }
};

int letter_cmp(const Letter& a, const Letter& b);

// A word is a (possibly empty) product of letters; empty means the unit.
using Word = std::vector<Letter>;

// Total order on words: letter-by-letter, and when one word is a proper
// prefix of the other the longer word comes first. This single order is
// used everywhere words are compared (rotation selection, argument
// sorting, monomial ordering).
int word_cmp(const Word& a, const Word& b);

struct WordLess {
    bool operator()(const Word& a, const Word& b) const { return word_cmp(a, b) < 0; }
};

struct LetterLess {
    bool operator()(const Letter& a, const Letter& b) const { return letter_cmp(a, b) < 0; }
};

Word rotate_word(const Word& w, std::size_t offset);

// Least cyclic rotation under word_cmp; identity when `tracial` is false.
Word canonical_rotation(const Word& w, bool tracial);

std::string render_letter(const Letter& l);
std::string render_word(const Word& w);  // letters joined by single spaces

std::set<std::string> word_algebras(const Word& w);

}  // namespace uniprod
