#pragma once
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "wps/monomial.hpp"
#include "wps/rational.hpp"
#include "wps/weights.hpp"

namespace wps {

enum class Mode { Ring, Laurent };

enum class Parity { Zero, Even, Odd, Mixed };

// Sparse element of the supercommutative ring Q[x_1..x_E | t_1..t_O] with
// canonical term storage: odd words ascending and sign-normalized, no zero
// coefficients. Laurent mode admits negative even exponents (chart algebra).
class Poly {
  public:
    Poly() = default;
    Poly(int even_vars, int odd_vars, Mode mode = Mode::Ring);

    static Poly constant(int even_vars, int odd_vars, const Rational& c, Mode mode = Mode::Ring);
    static Poly variable_even(int even_vars, int odd_vars, int index, Mode mode = Mode::Ring); // 1-based
    static Poly variable_odd(int even_vars, int odd_vars, int index, Mode mode = Mode::Ring);  // 1-based

    int even_vars() const { return even_vars_; }
    int odd_vars() const { return odd_vars_; }
    Mode mode() const { return mode_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, Rational, MonomialLess>& terms() const { return terms_; }

    bool same_ring(const Poly& o) const {
        return even_vars_ == o.even_vars_ && odd_vars_ == o.odd_vars_ && mode_ == o.mode_;
    }

    // Adds c * m, folding into canonical form; drops the term when it cancels.
    void add_term(const Monomial& m, const Rational& c);

    Poly operator-() const;
    friend Poly operator+(const Poly& f, const Poly& g);
    friend Poly operator-(const Poly& f, const Poly& g);
    friend Poly operator*(const Poly& f, const Poly& g);
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    friend bool operator==(const Poly& f, const Poly& g) {
        return f.even_vars_ == g.even_vars_ && f.odd_vars_ == g.odd_vars_ && f.terms_ == g.terms_;
    }
    friend bool operator!=(const Poly& f, const Poly& g) { return !(f == g); }

    Poly scaled(const Rational& c) const;
    Poly pow(unsigned e) const;

    Poly partial_even(int mu) const; // 1-based; usual derivation, Laurent allowed
    Poly partial_odd(int i) const;   // 1-based; left odd derivation, Ring mode only

    Parity parity() const;

    DegreeResult weighted_degree(const WeightSystem& w) const;
    DegreeResult degree_under(const std::vector<long long>& even_w,
                              const std::vector<long long>& odd_w) const;

    // Decomposition by odd length: f = sum of components of pure odd length k,
    // nonzero components only, ascending k.
    std::vector<std::pair<int, Poly>> theta_components() const;
    // Even-coefficient polynomial of the ascending word given by odd_mask.
    Poly coefficient_of_theta(uint64_t odd_mask) const;
    // Largest odd length present, or -1 when zero.
    int max_odd_len() const;
    // Smallest positive odd length present, or 0 when theta-free.
    int min_positive_odd_len() const;

    // Canonical text form, e.g. "x1^2 + x2*t1*t2 - 1/2*t1*t2".
    std::string to_string() const;

  private:
    int even_vars_ = 0;
    int odd_vars_ = 0;
    Mode mode_ = Mode::Ring;
    std::map<Monomial, Rational, MonomialLess> terms_;

    void check_monomial(const Monomial& m) const;
};

std::string monomial_to_string(const Monomial& m);

} // namespace wps
