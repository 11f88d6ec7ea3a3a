#include "wps/segre.hpp"

#include "wps/cohomology.hpp"
#include "wps/errors.hpp"

namespace wps {

SegreData segre_data(const ModelSpec& s1, const ModelSpec& s2) {
    if (!s1.unit_even() || !s2.unit_even())
        throw input_error("segre_data: both factors need unit even weights");
    if (!s1.positive() || !s2.positive())
        throw input_error("segre_data: both factors must be positive");
    SegreData out;
    out.m2 = static_cast<long long>(s1.m + 1) * (s2.m + 1) - 1;
    for (long long bi : s1.weights.b()) {
        long long mult = binom(s2.m + bi, bi);
        out.n2 += mult;
        out.b2.insert(out.b2.end(), static_cast<size_t>(mult), bi);
    }
    for (long long bi : s2.weights.b()) {
        long long mult = binom(s1.m + bi, bi);
        out.n2 += mult;
        out.b2.insert(out.b2.end(), static_cast<size_t>(mult), bi);
    }
    return out;
}

Subst segre_coordinate_map(int m, int n, int m_prime, int n_prime) {
    if (m < 0 || m_prime < 0 || n < 0 || n_prime < 0)
        throw input_error("segre_coordinate_map: negative dimension");
    // Product ring: x^0..x^m then y^0..y^m' as even variables, theta_1..theta_n
    // then eta_1..eta_n' as odd variables.
    int ev = (m + 1) + (m_prime + 1);
    int ov = n + n_prime;
    if (static_cast<long long>(n) * (m_prime + 1) + static_cast<long long>(n_prime) * (m + 1) >
        kMaxOddVars)
        throw input_error("segre_coordinate_map: ambient odd dimension exceeds 64");

    auto x_var = [&](int mu) { return Poly::variable_even(ev, ov, mu + 1); };           // mu in 0..m
    auto y_var = [&](int nu) { return Poly::variable_even(ev, ov, m + 2 + nu); };       // nu in 0..m'
    auto theta_var = [&](int i) { return Poly::variable_odd(ev, ov, i); };              // i in 1..n
    auto eta_var = [&](int j) { return Poly::variable_odd(ev, ov, n + j); };            // j in 1..n'

    std::vector<Poly> even_images, odd_images;
    for (int mu = 0; mu <= m; ++mu) {
        for (int nu = 0; nu <= m_prime; ++nu) even_images.push_back(x_var(mu) * y_var(nu));
    }
    for (int j = 1; j <= n_prime; ++j) {
        for (int mu = 0; mu <= m; ++mu) odd_images.push_back(x_var(mu) * eta_var(j));
    }
    for (int i = 1; i <= n; ++i) {
        for (int nu = 0; nu <= m_prime; ++nu) odd_images.push_back(y_var(nu) * theta_var(i));
    }
    return Subst(std::move(even_images), std::move(odd_images));
}

} // namespace wps
