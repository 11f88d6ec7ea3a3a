#pragma once
#include <cstdint>
#include <vector>

#include "wps/monomial.hpp"

namespace wps {

struct DegreeResult {
    enum Kind { Zero, Homogeneous, Inhomogeneous } kind = Zero;
    long long degree = 0; // meaningful only for Homogeneous

    static DegreeResult zero() { return {Zero, 0}; }
    static DegreeResult homogeneous(long long d) { return {Homogeneous, d}; }
    static DegreeResult inhomogeneous() { return {Inhomogeneous, 0}; }
    bool is_homogeneous_of(long long d) const { return kind == Homogeneous && degree == d; }
};

// Plain weighted degree of a monomial under arbitrary integer weight vectors.
// No positivity assumptions; also used for per-factor bidegrees on products.
long long monomial_degree(const Monomial& m, const std::vector<long long>& even_w,
                          const std::vector<long long>& odd_w);

// Weights (a | b) of a weighted projective superspace: even weights all >= 1,
// odd weights arbitrary integers. Positive means all b_j >= 1.
class WeightSystem {
  public:
    WeightSystem(std::vector<long long> even_weights, std::vector<long long> odd_weights);

    const std::vector<long long>& a() const { return a_; }
    const std::vector<long long>& b() const { return b_; }
    int even_count() const { return static_cast<int>(a_.size()); }
    int odd_count() const { return static_cast<int>(b_.size()); }

    bool is_positive() const;
    // min(b) >= max(a); the degree condition under which homogeneously
    // non-reduced subvarieties are homogeneously non-split.
    bool eq43() const;
    bool unit_even() const; // a == (1,...,1)

    long long degree(const Monomial& m) const { return monomial_degree(m, a_, b_); }
    long long odd_weight_sum(uint64_t odd_mask) const;

    // All even monomials of weighted degree exactly d, in canonical order.
    std::vector<Monomial> graded_piece_basis(long long d) const;
    long long graded_piece_dim(long long d) const;

  private:
    std::vector<long long> a_;
    std::vector<long long> b_;
};

} // namespace wps
