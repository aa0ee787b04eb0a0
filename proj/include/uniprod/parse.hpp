#pragma once

#include <string>

#include "uniprod/polyexpr.hpp"
#include "uniprod/symbols.hpp"
#include "uniprod/words.hpp"

namespace uniprod {

// "a1 b1 a2" -> word. Letters are a lowercase label followed by a decimal
// index >= 1.
Word parse_word(const std::string& text);

// "phi1(a1 b1)" or "phi2(a1 b1, a2 b2)" -> raw symbol (not canonicalized).
MomentSymbol parse_moment(const std::string& text);

// Sum-of-products expression over rationals, unknowns, and moment symbols.
// Round-trips the PolyExpr rendering; used by fixtures.
PolyExpr parse_expr(const std::string& text, const SymmetryFlags& flags = {});

}  // namespace uniprod
