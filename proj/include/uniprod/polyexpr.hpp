#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "uniprod/coeffpoly.hpp"
#include "uniprod/symbols.hpp"

namespace uniprod {

// Map from a pattern letter to its replacement word.
using LetterImages = std::map<Letter, Word, LetterLess>;

// Formal sum of moment monomials with CoeffPoly coefficients. All symbols
// are kept canonical under the expression's symmetry flags.
class PolyExpr {
  public:
    using Terms = std::map<Monomial, CoeffPoly, MonomialLess>;

    PolyExpr() = default;
    explicit PolyExpr(const Rational& scalar);
    explicit PolyExpr(const CoeffPoly& scalar);

    // Single term from canonical factors; zero factors annihilate, unit
    // factors drop out.
    static PolyExpr term(const CoeffPoly& coeff, const std::vector<CanonSymbol>& factors);
    static PolyExpr symbol_term(const CoeffPoly& coeff, const MomentSymbol& s,
                                const SymmetryFlags& flags);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Monomial& m, const CoeffPoly& c);

    PolyExpr operator+(const PolyExpr& o) const;
    PolyExpr operator-(const PolyExpr& o) const;
    PolyExpr operator*(const PolyExpr& o) const;
    PolyExpr scaled(const CoeffPoly& c) const;

    bool operator==(const PolyExpr& o) const { return terms_ == o.terms_; }

    CoeffPoly coefficient_of(const Monomial& m) const;
    std::vector<Monomial> monomials() const;

    // Deletes every occurrence of the letter and re-canonicalizes. Models
    // setting that letter to the unit of its algebra.
    PolyExpr substituted_unit(const Letter& l, const SymmetryFlags& flags) const;

    // Replaces each letter by a word (identity for unmapped letters) and
    // re-canonicalizes.
    PolyExpr instantiated(const LetterImages& images, const SymmetryFlags& flags) const;

    // Applies a symbol transform monomial-wise and re-canonicalizes.
    PolyExpr mapped_symbols(const std::function<MomentSymbol(const MomentSymbol&)>& f,
                            const SymmetryFlags& flags) const;

    // Substitutes unknowns inside all coefficients.
    PolyExpr coeffs_substituted(
        const std::map<std::string, CoeffPoly, VarNaturalLess>& images) const;

    // Exact numeric evaluation: symbol values are keyed by the canonical
    // rendering, unknown values by name.
    Rational evaluated(const std::map<std::string, Rational>& symbol_values,
                       const std::map<std::string, Rational, VarNaturalLess>& unknown_values) const;

    std::string render() const;
    std::string render_latex() const;

  private:
    Terms terms_;
};

}  // namespace uniprod
