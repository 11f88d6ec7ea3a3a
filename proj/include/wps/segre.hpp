#pragma once
#include "wps/model.hpp"
#include "wps/subst.hpp"

namespace wps {

// Ambient data (m'', n'', b'') of the super-Segre embedding
// P^{m|n}(1|b) x P^{m'|n'}(1|b') into P^{m''|n''}(1|b''):
//   m'' = (m+1)(m'+1) - 1,
//   n'' = sum_i binom(m'+b_i, b_i) + sum_i' binom(m+b'_i', b'_i'),
//   b'' = each b_i repeated binom(m'+b_i, b_i) times, then each b'_i'
//         repeated binom(m+b'_i', b'_i') times.
struct SegreData {
    long long m2 = 0;
    long long n2 = 0;
    std::vector<long long> b2;
};

SegreData segre_data(const ModelSpec& s1, const ModelSpec& s2);

// Coordinate map of the unit-weight super-Segre embedding as a substitution
// from the ambient ring into the product ring. Even ambient coordinates map to
// x^mu y^nu in lexicographic (mu, nu) order; odd ambient coordinates map first
// to the x^mu eta_j block (j outer, mu inner), then to the theta_i y^nu block
// (i outer, nu inner), matching the classical (1,1)-case ordering.
Subst segre_coordinate_map(int m, int n, int m_prime, int n_prime);

} // namespace wps
