#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "uniprod/symbols.hpp"

namespace uniprod {

inline constexpr std::size_t kDefaultPatternLetterBound = 8;

// Left-hand side of a universal formula: a mixed moment over at least two
// algebras with pairwise distinct letters. The stored symbol is always the
// canonical representative of its shape class (see compute_class), so rules
// keyed by patterns are spelling-independent.
struct Pattern {
    MomentSymbol symbol;
    SymmetryFlags flags;
};

Pattern make_pattern(const MomentSymbol& s, const SymmetryFlags& flags,
                     std::size_t max_letters = kDefaultPatternLetterBound);

// Letters in scan order (first argument, then second). Distinct by
// construction.
std::vector<Letter> pattern_letters(const Pattern& p);
std::vector<Letter> symbol_letters(const MomentSymbol& s);

// Shape class of a moment symbol: the symbol is relabeled (algebras by first
// appearance to a, b, c, ...; per-algebra indices by first appearance to
// 1, 2, ...) and minimized over the transforms the flags allow (argument
// swap, per-argument cyclic rotations). rep_to_input records which input
// letter sits at each representative position.
struct ShapeClass {
    MomentSymbol rep;
    std::map<Letter, Letter, LetterLess> rep_to_input;

    std::string key() const { return render_symbol(rep); }
};

ShapeClass compute_class(const MomentSymbol& s, const SymmetryFlags& flags);

// Removes every occurrence of the letter; no canonicalization.
MomentSymbol delete_letter(const MomentSymbol& s, const Letter& l);

}  // namespace uniprod
