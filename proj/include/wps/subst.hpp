#pragma once
#include <vector>

#include "wps/poly.hpp"

namespace wps {

// Ring homomorphism C[x_1..x_E | t_1..t_O] -> target ring, given by generator
// images. Source and target rings may differ (chart transitions, Segre maps);
// an endomorphism is the special case where they coincide. Even generators must
// map to even-parity elements, odd generators to odd-parity elements.
class Subst {
  public:
    Subst(std::vector<Poly> even_images, std::vector<Poly> odd_images);

    static Subst identity(int even_vars, int odd_vars, Mode mode = Mode::Ring);

    int source_even() const { return static_cast<int>(even_images_.size()); }
    int source_odd() const { return static_cast<int>(odd_images_.size()); }
    int target_even() const;
    int target_odd() const;
    Mode target_mode() const;

    const Poly& even_image(int mu) const { return even_images_.at(mu - 1); } // 1-based
    const Poly& odd_image(int j) const { return odd_images_.at(j - 1); }     // 1-based
    const std::vector<Poly>& even_images() const { return even_images_; }
    const std::vector<Poly>& odd_images() const { return odd_images_; }

    friend bool operator==(const Subst& s, const Subst& t) {
        return s.even_images_ == t.even_images_ && s.odd_images_ == t.odd_images_;
    }
    friend bool operator!=(const Subst& s, const Subst& t) { return !(s == t); }

  private:
    std::vector<Poly> even_images_;
    std::vector<Poly> odd_images_;
};

// The homomorphism extension evaluated on f; monomial-wise substitution with
// the sign bookkeeping delegated to the supercommutative product. Negative
// even exponents (Laurent) require the corresponding image to be a single
// invertible term.
Poly apply(const Subst& s, const Poly& f);

// Substitution performing `first`, then `second`: apply(compose_then(a,b), f)
// equals apply(b, apply(a, f)).
Subst compose_then(const Subst& first, const Subst& second);

} // namespace wps
