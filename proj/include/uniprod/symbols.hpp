#pragma once

#include <array>
#include <set>
#include <string>
#include <vector>

#include "uniprod/words.hpp"

namespace uniprod {

// Symmetry assumptions the canonical forms are allowed to use.
struct SymmetryFlags {
    bool phi1_tracial = true;
    bool phi2_tracial_each_arg = true;
    bool phi2_symmetric = true;

    bool operator==(const SymmetryFlags&) const = default;
};

// phi1(w) or phi2(w, w'). For order 1 the second argument is empty.
struct MomentSymbol {
    int order = 1;  // 1 or 2
    std::array<Word, 2> args;

    bool operator==(const MomentSymbol& o) const {
        return order == o.order && args == o.args;
    }
};

MomentSymbol make_phi1(Word w);
MomentSymbol make_phi2(Word w1, Word w2);

// Second-order symbols sort before first-order ones; ties break on the
// argument words.
int symbol_cmp(const MomentSymbol& a, const MomentSymbol& b);

std::string render_symbol(const MomentSymbol& s);
std::string render_symbol_latex(const MomentSymbol& s);

std::set<std::string> symbol_algebras(const MomentSymbol& s);
bool symbol_single_algebra(const MomentSymbol& s);
std::size_t symbol_letter_count(const MomentSymbol& s);

// Canonical form of a symbol: a genuine symbol, or a scalar absorbed by
// the functional axioms (phi1 of the unit is 1, phi2 against the unit is 0).
struct CanonSymbol {
    enum class Kind { zero, one, symbol };
    Kind kind = Kind::symbol;
    MomentSymbol sym;

    static CanonSymbol zero() { return {Kind::zero, {}}; }
    static CanonSymbol one() { return {Kind::one, {}}; }
    static CanonSymbol of(MomentSymbol s) { return {Kind::symbol, std::move(s)}; }
};

// Rotates argument words to their least cyclic rotation (per flags), sorts
// phi2 arguments (when symmetric), and applies unit reductions. Idempotent.
CanonSymbol canonicalize_symbol(const MomentSymbol& s, const SymmetryFlags& flags);

// A product of moment symbols, kept sorted under symbol_cmp.
struct Monomial {
    std::vector<MomentSymbol> factors;

    bool operator==(const Monomial& o) const { return factors == o.factors; }
};

Monomial make_monomial(std::vector<MomentSymbol> factors);  // sorts

// Order: more second-order factors first, then lexicographic on the sorted
// factor sequence.
int monomial_cmp(const Monomial& a, const Monomial& b);

struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return monomial_cmp(a, b) < 0;
    }
};

std::string render_monomial(const Monomial& m);  // "1" for the empty product
std::string render_monomial_latex(const Monomial& m);

}  // namespace uniprod
