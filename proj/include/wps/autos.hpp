#pragma once
#include <vector>

#include "wps/model.hpp"
#include "wps/rational.hpp"
#include "wps/subst.hpp"

namespace wps {

// True iff every generator image is homogeneous of the generator's weight and
// parity (zero images pass vacuously). Ring-mode endomorphisms only.
bool check_weight_preserving(const ModelSpec& spec, const Subst& s);

// Total dimension of the coefficient spaces available to a framed automorphism
// congruent to the identity mod J^2: even images draw from C[x](a^mu - b_I)
// over even index sets |I| >= 2, odd images from C[x](b_j - b_I) over odd index
// sets |I| >= 3. Zero means every framed automorphism is trivial.
long long framed_coefficient_dim(const ModelSpec& spec);

using RationalMatrix = std::vector<std::vector<Rational>>;

// The induced action on (theta_1..theta_n) modulo J^3 as a rational matrix
// M[i][j] = coefficient of theta_j in the image of theta_i. Requires s to be
// weight-preserving and congruent to the identity on even generators mod J^2;
// entries between different odd weights must vanish (block compatibility), so
// every surviving length-one coefficient is a constant.
RationalMatrix linear_part(const ModelSpec& spec, const Subst& s);

// theta_i -> sum_j A[i][j] theta_j, even generators fixed.
Subst subst_from_odd_matrix(const ModelSpec& spec, const RationalMatrix& a);

} // namespace wps
