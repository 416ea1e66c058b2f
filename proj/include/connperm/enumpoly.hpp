#pragma once

#include <string_view>
#include <utility>

#include "connperm/poly.hpp"

// Exact counting recurrences and the polynomial families built from Dyck
// paths. Every quantity with two known derivations is computed both ways and
// the call throws InternalMismatch if they disagree.
//
// Nothing here is memoized: each call recomputes its tables, so all
// functions are safe to call concurrently.

namespace connperm {

BigInt factorial(int n);
/// (2m-1)!! = (2m-1)(2m-3)...1, with (-1)!! = 1 for m = 0.
BigInt double_factorial_odd(int m);

/// x(x+1)...(x+n-1), A_0 = 1. Coefficient of x^k is the unsigned Stirling
/// number of the first kind s(n,k).
BivariatePoly stirling_poly(int n);
BigInt stirling_first(int n, int k);

/// Number of indecomposable permutations of size n >= 1.
BigInt c_count(int n);
/// Indecomposable permutations of size n >= 1 with k cycles (zero outside
/// 1 <= k <= n-1, except c(1,1) = 1).
BigInt c_count_by_cycles(int n, int k);
/// sum_k c(n,k) x^k.
BivariatePoly c_poly(int n);

/// Indecomposable fixed-point-free involutions of size 2m, m >= 1.
BigInt i_count(int m);

/// Product over down steps: x after an up step, y + (height after) otherwise.
/// Throws InvalidPath.
BivariatePoly L_of_path(std::string_view word);
/// Product over down steps of y + (height after). Throws InvalidPath.
BivariatePoly M_of_path(std::string_view word);

struct PathFamily {
  BivariatePoly all;        // sum over all Dyck paths of semilength n
  BivariatePoly primitive;  // sum over primitive paths only
};

/// (L_n, L'_n) for n >= 1 by the shift recurrence, checked against direct
/// summation over all paths.
PathFamily L_family(int n);
/// (M_m, M'_m) for m >= 1, same dual evaluation.
PathFamily M_family(int m);

/// sum over S_n of x^cycles y^(left-to-right maxima), by series inversion
/// over indecomposable blocks. A size-1 block is a fixed point that is both a
/// cycle and a left-to-right maximum, so it carries weight x*y.
BivariatePoly joint_perm_poly(int n);

/// Probability that two uniform permutations of S_n generate a transitive
/// group: c_{n+1} / (n * n!).
BigRational transitive_probability(int n);

/// U(z,y) = sum_{m>=0} z^m M'_{m+1}(y), exponent = number of map edges.
SeriesInZ rooted_map_series(int order);
/// U - y - z U(z,y) U(z,y+1) through z^order; identically zero when the
/// functional equation holds.
SeriesInZ arques_beraud_check(int order);

namespace detail {

// Series inversion with an arbitrary weight for the size-1 block. Exposed for
// the verification harness.
BivariatePoly joint_perm_poly(int n, const BivariatePoly& singleton_weight);

}  // namespace detail

}  // namespace connperm
