#pragma once

#include "uniprod/polyexpr.hpp"
#include "uniprod/symbols.hpp"
#include "uniprod/words.hpp"

namespace uniprod {

// Which first-order independence model drives the factorization of mixed
// first-order moments.
enum class Factorizer { free_product, tensor_product };

// Expand phi1 of a mixed word into a polynomial in single-algebra phi1
// symbols, assuming the algebras are freely independent.  The expansion sums
// over monochromatic non-crossing partitions, with each block contributing
// its cumulant re-expanded in moments.
PolyExpr free_factorize(const Word& word, const SymmetryFlags& flags, int bound = 10);

// Same contract under tensor independence: the moment splits as the product
// of the per-algebra subwords taken in their original order.
PolyExpr tensor_factorize(const Word& word, const SymmetryFlags& flags);

PolyExpr factorize(const Word& word, Factorizer which, const SymmetryFlags& flags,
                   int bound = 10);

}  // namespace uniprod
