#include "wps/poly.hpp"

#include <algorithm>
#include <sstream>

#include "wps/errors.hpp"

namespace wps {

Poly::Poly(int even_vars, int odd_vars, Mode mode)
    : even_vars_(even_vars), odd_vars_(odd_vars), mode_(mode) {
    if (even_vars < 1) throw input_error("a ring needs at least one even variable");
    if (odd_vars < 0 || odd_vars > kMaxOddVars)
        throw input_error("odd variable count must be between 0 and 64");
}

Poly Poly::constant(int even_vars, int odd_vars, const Rational& c, Mode mode) {
    Poly p(even_vars, odd_vars, mode);
    Monomial m;
    m.even.assign(even_vars, 0);
    p.add_term(m, c);
    return p;
}

Poly Poly::variable_even(int even_vars, int odd_vars, int index, Mode mode) {
    if (index < 1 || index > even_vars) throw input_error("even variable index out of range");
    Poly p(even_vars, odd_vars, mode);
    Monomial m;
    m.even.assign(even_vars, 0);
    m.even[index - 1] = 1;
    p.add_term(m, Rational(1));
    return p;
}

Poly Poly::variable_odd(int even_vars, int odd_vars, int index, Mode mode) {
    if (index < 1 || index > odd_vars) throw input_error("odd variable index out of range");
    Poly p(even_vars, odd_vars, mode);
    Monomial m;
    m.even.assign(even_vars, 0);
    m.odd = uint64_t(1) << (index - 1);
    p.add_term(m, Rational(1));
    return p;
}

void Poly::check_monomial(const Monomial& m) const {
    WPS_ASSERT(m.even.size() == static_cast<size_t>(even_vars_), "term arity mismatch");
    WPS_ASSERT(odd_vars_ == kMaxOddVars || (m.odd >> odd_vars_) == 0, "odd index beyond ring arity");
    if (mode_ == Mode::Ring) {
        for (int32_t e : m.even) WPS_ASSERT(e >= 0, "negative exponent outside Laurent mode");
    }
}

void Poly::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    check_monomial(m);
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly r(even_vars_, odd_vars_, mode_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Poly operator+(const Poly& f, const Poly& g) {
    if (f.even_vars_ != g.even_vars_ || f.odd_vars_ != g.odd_vars_)
        throw input_error("add: variable counts differ");
    if (f.mode_ != g.mode_) throw input_error("add: Ring/Laurent mode mismatch");
    Poly r = f;
    for (const auto& [m, c] : g.terms_) r.add_term(m, c);
    return r;
}

Poly operator-(const Poly& f, const Poly& g) { return f + (-g); }

Poly operator*(const Poly& f, const Poly& g) {
    if (f.even_vars_ != g.even_vars_ || f.odd_vars_ != g.odd_vars_)
        throw input_error("mul: variable counts differ");
    Mode mode = (f.mode_ == Mode::Laurent || g.mode_ == Mode::Laurent) ? Mode::Laurent : Mode::Ring;
    Poly r(f.even_vars_, f.odd_vars_, mode);
    for (const auto& [ma, ca] : f.terms_) {
        for (const auto& [mb, cb] : g.terms_) {
            int sign = odd_merge_sign(ma.odd, mb.odd);
            if (sign == 0) continue;
            Monomial m;
            m.odd = ma.odd | mb.odd;
            m.even.resize(ma.even.size());
            for (size_t i = 0; i < m.even.size(); ++i) m.even[i] = ma.even[i] + mb.even[i];
            Rational c = ca * cb;
            if (sign < 0) c = -c;
            r.add_term(m, c);
        }
    }
    return r;
}

Poly Poly::scaled(const Rational& c) const {
    Poly r(even_vars_, odd_vars_, mode_);
    if (c.is_zero()) return r;
    for (const auto& [m, coeff] : terms_) r.terms_.emplace(m, coeff * c);
    return r;
}

Poly Poly::pow(unsigned e) const {
    Poly r = Poly::constant(even_vars_, odd_vars_, Rational(1), mode_);
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
}

Poly Poly::partial_even(int mu) const {
    if (mu < 1 || mu > even_vars_) throw input_error("partial_even: index out of range");
    Poly r(even_vars_, odd_vars_, mode_);
    for (const auto& [m, c] : terms_) {
        int32_t e = m.even[mu - 1];
        if (e == 0) continue;
        Monomial d = m;
        d.even[mu - 1] = e - 1;
        r.add_term(d, c * Rational(e));
    }
    return r;
}

Poly Poly::partial_odd(int i) const {
    if (i < 1 || i > odd_vars_) throw input_error("partial_odd: index out of range");
    if (mode_ != Mode::Ring) throw input_error("partial_odd: Ring mode required");
    Poly r(even_vars_, odd_vars_, mode_);
    uint64_t bit = uint64_t(1) << (i - 1);
    for (const auto& [m, c] : terms_) {
        if (!(m.odd & bit)) continue;
        Monomial d = m;
        d.odd &= ~bit;
        int sign = odd_removal_sign(m.odd, i);
        r.add_term(d, sign < 0 ? -c : c);
    }
    return r;
}

Parity Poly::parity() const {
    if (terms_.empty()) return Parity::Zero;
    bool even = true, odd = true;
    for (const auto& [m, c] : terms_) {
        (void)c;
        if (m.odd_len() % 2 == 0) odd = false;
        else even = false;
    }
    if (even) return Parity::Even;
    if (odd) return Parity::Odd;
    return Parity::Mixed;
}

DegreeResult Poly::degree_under(const std::vector<long long>& even_w,
                                const std::vector<long long>& odd_w) const {
    if (terms_.empty()) return DegreeResult::zero();
    bool first = true;
    long long d = 0;
    for (const auto& [m, c] : terms_) {
        (void)c;
        long long dm = monomial_degree(m, even_w, odd_w);
        if (first) {
            d = dm;
            first = false;
        } else if (dm != d) {
            return DegreeResult::inhomogeneous();
        }
    }
    return DegreeResult::homogeneous(d);
}

DegreeResult Poly::weighted_degree(const WeightSystem& w) const {
    if (w.even_count() != even_vars_ || w.odd_count() != odd_vars_)
        throw input_error("weighted_degree: weight system arity mismatch");
    return degree_under(w.a(), w.b());
}

std::vector<std::pair<int, Poly>> Poly::theta_components() const {
    std::map<int, Poly> comps;
    for (const auto& [m, c] : terms_) {
        int k = m.odd_len();
        auto it = comps.find(k);
        if (it == comps.end()) it = comps.emplace(k, Poly(even_vars_, odd_vars_, mode_)).first;
        it->second.add_term(m, c);
    }
    std::vector<std::pair<int, Poly>> out;
    out.reserve(comps.size());
    for (auto& [k, p] : comps) out.emplace_back(k, std::move(p));
    return out;
}

Poly Poly::coefficient_of_theta(uint64_t odd_mask) const {
    Poly r(even_vars_, odd_vars_, mode_);
    for (const auto& [m, c] : terms_) {
        if (m.odd != odd_mask) continue;
        Monomial e = m;
        e.odd = 0;
        r.add_term(e, c);
    }
    return r;
}

int Poly::max_odd_len() const {
    int k = -1;
    for (const auto& [m, c] : terms_) {
        (void)c;
        k = std::max(k, m.odd_len());
    }
    return k;
}

int Poly::min_positive_odd_len() const {
    int k = 0;
    for (const auto& [m, c] : terms_) {
        (void)c;
        int l = m.odd_len();
        if (l > 0 && (k == 0 || l < k)) k = l;
    }
    return k;
}

std::string monomial_to_string(const Monomial& m) {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < m.even.size(); ++i) {
        if (m.even[i] == 0) continue;
        if (!first) os << "*";
        os << "x" << (i + 1);
        if (m.even[i] != 1) os << "^" << m.even[i];
        first = false;
    }
    for (int j : m.odd_indices()) {
        if (!first) os << "*";
        os << "t" << j;
        first = false;
    }
    if (first) os << "1";
    return os.str();
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational mag = c.is_negative() ? -c : c;
        if (first) {
            if (c.is_negative()) os << "-";
            first = false;
        } else {
            os << (c.is_negative() ? " - " : " + ");
        }
        bool trivial_monomial = m.odd == 0;
        for (int32_t e : m.even) trivial_monomial = trivial_monomial && e == 0;
        if (trivial_monomial) {
            os << mag.to_string();
        } else if (mag.is_one()) {
            os << monomial_to_string(m);
        } else {
            os << mag.to_string() << "*" << monomial_to_string(m);
        }
    }
    return os.str();
}

} // namespace wps
