#include "wps/charts.hpp"

#include "wps/errors.hpp"

namespace wps {

Subst chart_transition(const ModelSpec& spec, int mu, int nu) {
    if (!spec.unit_even())
        throw input_error("chart transitions are defined only for unit even weights; " +
                          spec.describe() + " has a weighted even part");
    int ev = spec.m + 1;
    int ov = spec.n;
    if (mu < 1 || mu > ev || nu < 1 || nu > ev)
        throw input_error("chart index out of range");

    // Chart rings are represented uniformly with all m+1 even variables; the
    // placeholder z^nu_nu is identically 1, so both the numerator z^sigma_nu
    // and the denominator z^mu_nu follow that convention.
    std::vector<Poly> even_images, odd_images;
    for (int sigma = 1; sigma <= ev; ++sigma) {
        Poly img(ev, ov, Mode::Laurent);
        Monomial m;
        m.even.assign(ev, 0);
        if (sigma != nu) m.even[sigma - 1] += 1;
        if (mu != nu) m.even[mu - 1] -= 1;
        img.add_term(m, Rational(1));
        even_images.push_back(std::move(img));
    }
    for (int j = 1; j <= ov; ++j) {
        long long bj = spec.weights.b()[j - 1];
        Poly img(ev, ov, Mode::Laurent);
        Monomial m;
        m.even.assign(ev, 0);
        if (mu != nu) m.even[mu - 1] = static_cast<int32_t>(-bj);
        m.odd = uint64_t(1) << (j - 1);
        img.add_term(m, Rational(1));
        odd_images.push_back(std::move(img));
    }
    return Subst(std::move(even_images), std::move(odd_images));
}

bool cocycle_check(const ModelSpec& spec, int mu, int nu, int sigma) {
    Subst first = chart_transition(spec, mu, nu);
    Subst second = chart_transition(spec, nu, sigma);
    Subst direct = chart_transition(spec, mu, sigma);
    return compose_then(first, second) == direct;
}

} // namespace wps
