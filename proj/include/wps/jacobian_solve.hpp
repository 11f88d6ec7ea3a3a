#pragma once
#include <map>
#include <vector>

#include "wps/poly.hpp"
#include "wps/weights.hpp"

namespace wps {

// Exact solve of the graded Jacobian system shared across a generator family:
// find even polynomials u_sigma with deg u_sigma = a^sigma - b_I such that
//   sum_sigma u_sigma * dg_alpha/dx^sigma = target_alpha   for every alpha.
// Unknown columns are ordered (sigma ascending, basis monomial canonical);
// rows by (alpha, monomial canonical); Gaussian elimination picks the first
// nonzero pivot, so any admissible solution is produced deterministically.
struct JacobianSolve {
    bool consistent = false;
    std::map<int, Poly> coefficients;  // sigma (1-based) -> u_sigma, nonzero only
    std::vector<Poly> residuals;       // target - sum u dg, per alpha; zero iff consistent
};

JacobianSolve solve_in_jacobian_pieces(const std::vector<Poly>& reduced_parts,
                                       const std::vector<Poly>& targets, const WeightSystem& w,
                                       long long b_i);

} // namespace wps
