#pragma once
#include <cstdint>
#include <vector>

#include "wps/poly.hpp"
#include "wps/rational.hpp"

// Test-only oracles, kept independent of the closed forms they check:
// cohomology dimensions come from explicit monomial bases and exact ranks of
// the multiplication maps in the Euler sequence, not from Bott's formula.
namespace wps::oracle {

// Cech monomial count for H^q(P^m, O(k)): q = 0 counts non-negative exponent
// vectors summing to k; q = m counts all-negative ones; other q give 0.
long long count_h_line(int m, int q, long long k);

// Exponent-vector bases (length m+1) for the two nonzero levels.
std::vector<std::vector<int>> basis_h0(int m, long long k);
std::vector<std::vector<int>> basis_hm(int m, long long k);

// Exact rank of a sparse rational matrix given as rows of (column, value)
// pairs; incremental elimination by leading column.
long long sparse_rank(std::vector<std::vector<std::pair<long long, Rational>>> rows);

// dim H^q(P^m, T(k)) assembled from the long exact sequence of
// 0 -> O(k) -> O(k+1)^{m+1} -> T(k) -> 0 with explicit multiplication
// matrices on the monomial bases.
long long euler_h_tangent(int m, int q, long long k);

// dim H^0(P^m, Omega^1(k)) as the kernel of the evaluation map
// H^0(O(k-1))^{m+1} -> H^0(O(k)), (f_mu) -> sum x^mu f_mu.
long long euler_h0_omega1(int m, long long k);

} // namespace wps::oracle
