#pragma once

#include <string>
#include <vector>

#include "uniprod/pattern.hpp"
#include "uniprod/polyexpr.hpp"

namespace uniprod {

// The general linear combination a rule for a pattern can take: one unknown
// per admissible factored monomial, in the canonical monomial order.
struct Ansatz {
    Pattern pattern;
    std::vector<Monomial> monomials;
    std::vector<std::string> unknowns;  // aligned with monomials
    PolyExpr expr;
};

std::string unknown_name(std::size_t i);  // 0-based slot -> "alpha<i+1>"

// Every product of per-algebra factorizations of the pattern letters.
// Second-order factors are admitted only for second-order patterns.
std::vector<Monomial> enumerate_monomials(const Pattern& p);

Ansatz build_ansatz(const Pattern& p);

}  // namespace uniprod
