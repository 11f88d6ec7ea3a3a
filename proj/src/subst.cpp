#include "wps/subst.hpp"

#include "wps/errors.hpp"

namespace wps {

Subst::Subst(std::vector<Poly> even_images, std::vector<Poly> odd_images)
    : even_images_(std::move(even_images)), odd_images_(std::move(odd_images)) {
    if (even_images_.empty()) throw input_error("substitution needs at least one even image");
    const Poly& ref = even_images_.front();
    for (const Poly& p : even_images_) {
        if (!p.same_ring(ref)) throw input_error("substitution images live in different rings");
        Parity par = p.parity();
        if (par != Parity::Even && par != Parity::Zero)
            throw input_error("even generator image must have even parity");
    }
    for (const Poly& p : odd_images_) {
        if (!p.same_ring(ref)) throw input_error("substitution images live in different rings");
        Parity par = p.parity();
        if (par != Parity::Odd && par != Parity::Zero)
            throw input_error("odd generator image must have odd parity");
    }
}

Subst Subst::identity(int even_vars, int odd_vars, Mode mode) {
    std::vector<Poly> ev, od;
    ev.reserve(even_vars);
    od.reserve(odd_vars);
    for (int mu = 1; mu <= even_vars; ++mu)
        ev.push_back(Poly::variable_even(even_vars, odd_vars, mu, mode));
    for (int j = 1; j <= odd_vars; ++j)
        od.push_back(Poly::variable_odd(even_vars, odd_vars, j, mode));
    return Subst(std::move(ev), std::move(od));
}

int Subst::target_even() const { return even_images_.front().even_vars(); }
int Subst::target_odd() const { return even_images_.front().odd_vars(); }
Mode Subst::target_mode() const { return even_images_.front().mode(); }

namespace {

// p^e for possibly negative e; negative powers only for single-term p.
Poly image_power(const Poly& p, int32_t e) {
    if (e >= 0) return p.pow(static_cast<unsigned>(e));
    if (p.term_count() != 1)
        throw input_error("negative exponent applied to a non-monomial image");
    const auto& [m, c] = *p.terms().begin();
    if (m.odd != 0) throw input_error("negative exponent applied to an odd image");
    Poly r(p.even_vars(), p.odd_vars(), Mode::Laurent);
    Monomial inv;
    inv.even.resize(m.even.size());
    for (size_t i = 0; i < m.even.size(); ++i) inv.even[i] = -m.even[i];
    Rational cinv = c.inverse();
    Rational acc = Rational(1);
    Monomial total;
    total.even.assign(m.even.size(), 0);
    for (int32_t k = 0; k < -e; ++k) {
        for (size_t i = 0; i < total.even.size(); ++i) total.even[i] += inv.even[i];
        acc *= cinv;
    }
    r.add_term(total, acc);
    return r;
}

} // namespace

Poly apply(const Subst& s, const Poly& f) {
    if (f.even_vars() != s.source_even() || f.odd_vars() != s.source_odd())
        throw input_error("apply: polynomial ring does not match substitution source");
    Poly result(s.target_even(), s.target_odd(), s.target_mode());
    for (const auto& [m, c] : f.terms()) {
        Poly prod = Poly::constant(s.target_even(), s.target_odd(), c, s.target_mode());
        for (size_t i = 0; i < m.even.size(); ++i) {
            if (m.even[i] == 0) continue;
            prod = prod * image_power(s.even_image(static_cast<int>(i) + 1), m.even[i]);
            if (prod.is_zero()) break;
        }
        if (!prod.is_zero()) {
            for (int j : m.odd_indices()) {
                prod = prod * s.odd_image(j);
                if (prod.is_zero()) break;
            }
        }
        result += prod;
    }
    return result;
}

Subst compose_then(const Subst& first, const Subst& second) {
    std::vector<Poly> ev, od;
    ev.reserve(first.source_even());
    od.reserve(first.source_odd());
    for (const Poly& p : first.even_images()) ev.push_back(apply(second, p));
    for (const Poly& p : first.odd_images()) od.push_back(apply(second, p));
    return Subst(std::move(ev), std::move(od));
}

} // namespace wps
