#pragma once

#include <string>
#include <vector>

#include "uniprod/rational.hpp"

namespace uniprod {

// Partition of {0,...,n-1}: blocks sorted internally, blocks ordered by
// their least element.
using SetPartition = std::vector<std::vector<int>>;

SetPartition normalize_partition(SetPartition p);
std::string render_partition(const SetPartition& p);

// All set partitions of an n-element ground set.
std::vector<SetPartition> enumerate_partitions(int n, int bound = 12);

// Two blocks cross when p < q < r < s with p,r in one and q,s in the other.
bool is_noncrossing(const SetPartition& p);

// Non-crossing partitions, generated directly by the interval recursion
// (never by filtering the full partition list).
std::vector<SetPartition> enumerate_nc(int n, int bound = 10);

// Refinement order: every block of `lo` is contained in a block of `hi`.
bool partition_leq(const SetPartition& lo, const SetPartition& hi);

// Moebius function of the non-crossing lattice on the interval [lo, hi].
// Throws OrderError when lo is not a refinement of hi.
long long nc_moebius(const SetPartition& lo, const SetPartition& hi, int n);

// Univariate moment <-> cumulant transforms over the non-crossing lattice.
// Tables map order -> value and must cover every order up to `upto`.
std::vector<Rational> moments_to_cumulants(const std::vector<Rational>& moments_1_to_n);
std::vector<Rational> cumulants_to_moments(const std::vector<Rational>& cumulants_1_to_n);

}  // namespace uniprod
