#include "wps/autos.hpp"

#include "wps/errors.hpp"

namespace wps {

namespace {

bool image_ok(const Poly& img, long long weight, Parity expected, const WeightSystem& w) {
    Parity par = img.parity();
    if (par == Parity::Zero) return true;
    if (par != expected) return false;
    DegreeResult d = img.weighted_degree(w);
    return d.kind == DegreeResult::Homogeneous && d.degree == weight;
}

} // namespace

bool check_weight_preserving(const ModelSpec& spec, const Subst& s) {
    if (s.target_mode() != Mode::Ring) throw input_error("check_weight_preserving: Ring mode required");
    if (s.source_even() != spec.m + 1 || s.source_odd() != spec.n ||
        s.target_even() != spec.m + 1 || s.target_odd() != spec.n)
        throw input_error("check_weight_preserving: substitution is not an endomorphism of the model ring");
    const WeightSystem& w = spec.weights;
    for (int mu = 1; mu <= spec.m + 1; ++mu) {
        if (!image_ok(s.even_image(mu), w.a()[mu - 1], Parity::Even, w)) return false;
    }
    for (int j = 1; j <= spec.n; ++j) {
        if (!image_ok(s.odd_image(j), w.b()[j - 1], Parity::Odd, w)) return false;
    }
    return true;
}

long long framed_coefficient_dim(const ModelSpec& spec) {
    const WeightSystem& w = spec.weights;
    long long total = 0;
    int n = spec.n;
    if (n > 20) throw input_error("framed_coefficient_dim: exhaustive index-set enumeration capped at n = 20");
    // ascending index sets as bitmasks
    for (uint64_t mask = 1; n > 0 && mask < (uint64_t(1) << n); ++mask) {
        int len = __builtin_popcountll(mask);
        long long b_i = w.odd_weight_sum(mask);
        if (len >= 2 && len % 2 == 0) {
            for (long long a_mu : w.a()) total += w.graded_piece_dim(a_mu - b_i);
        } else if (len >= 3) {
            for (long long b_j : w.b()) total += w.graded_piece_dim(b_j - b_i);
        }
    }
    return total;
}

RationalMatrix linear_part(const ModelSpec& spec, const Subst& s) {
    if (!check_weight_preserving(spec, s))
        throw input_error("linear_part: substitution is not weight-preserving");
    for (int mu = 1; mu <= spec.m + 1; ++mu) {
        Poly dev = s.even_image(mu) - Poly::variable_even(spec.m + 1, spec.n, mu);
        for (const auto& [mono, c] : dev.terms()) {
            (void)c;
            if (mono.odd_len() < 2)
                throw input_error("linear_part: even generator x" + std::to_string(mu) +
                                  " is not congruent to itself mod J^2");
        }
    }
    RationalMatrix mat(spec.n, std::vector<Rational>(spec.n, Rational(0)));
    for (int i = 1; i <= spec.n; ++i) {
        const Poly& img = s.odd_image(i);
        for (const auto& [m, c] : img.terms()) {
            if (m.odd_len() != 1) continue; // mod J^3
            int j = m.odd_indices().front();
            bool constant_coeff = true;
            for (int32_t e : m.even) constant_coeff = constant_coeff && e == 0;
            if (!constant_coeff)
                throw input_error("linear_part: image of t" + std::to_string(i) +
                                  " has a non-constant coefficient on t" + std::to_string(j) +
                                  " (odd weights differ across the block)");
            mat[i - 1][j - 1] = c;
        }
    }
    return mat;
}

Subst subst_from_odd_matrix(const ModelSpec& spec, const RationalMatrix& a) {
    if (a.size() != static_cast<size_t>(spec.n))
        throw input_error("subst_from_odd_matrix: matrix size does not match n");
    int ev = spec.m + 1, ov = spec.n;
    std::vector<Poly> even_images, odd_images;
    for (int mu = 1; mu <= ev; ++mu) even_images.push_back(Poly::variable_even(ev, ov, mu));
    for (int i = 0; i < ov; ++i) {
        if (a[i].size() != static_cast<size_t>(ov))
            throw input_error("subst_from_odd_matrix: ragged matrix");
        Poly img(ev, ov);
        for (int j = 0; j < ov; ++j)
            img += Poly::variable_odd(ev, ov, j + 1).scaled(a[i][j]);
        odd_images.push_back(std::move(img));
    }
    return Subst(std::move(even_images), std::move(odd_images));
}

} // namespace wps
