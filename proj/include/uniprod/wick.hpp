#pragma once

#include <map>
#include <vector>

#include "uniprod/rational.hpp"

namespace uniprod {

// A cyclic word of matrix factors; each entry names an independent GUE
// ensemble by id.  Tr(A A B B) is the word {0, 0, 1, 1}.
using TraceWord = std::vector<int>;

// Polynomial in the matrix dimension N, allowing negative powers.  Maps
// exponent to coefficient; absent exponents are zero.
using LaurentPoly = std::map<int, long long>;

LaurentPoly laurent_add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly laurent_sub(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly laurent_mul(const LaurentPoly& a, const LaurentPoly& b);
long long laurent_coeff(const LaurentPoly& p, int exponent);

// Exact expectation of a product of unnormalized traces of independent GUE
// matrices, as a Laurent polynomial in the dimension.  Entries are
// normalized so that E[A_ij A_kl] = delta_il delta_jk / N.  At most twelve
// matrix factors in total.
LaurentPoly trace_moment(const std::vector<TraceWord>& circles);

// Large-N limit of the normalized trace: the N^1 coefficient of E[Tr w].
Rational phi1_limit(const TraceWord& word);

// Large-N limit of the covariance of two unnormalized traces: the constant
// coefficient of E[Tr w1 Tr w2] - E[Tr w1] E[Tr w2].
Rational phi2_limit(const TraceWord& lhs, const TraceWord& rhs);

}  // namespace uniprod
