#include "wps/weights.hpp"

#include <algorithm>

#include "wps/errors.hpp"

namespace wps {

long long monomial_degree(const Monomial& m, const std::vector<long long>& even_w,
                          const std::vector<long long>& odd_w) {
    WPS_ASSERT(m.even.size() == even_w.size(), "monomial_degree: even arity mismatch");
    long long d = 0;
    for (size_t i = 0; i < even_w.size(); ++i) d += even_w[i] * m.even[i];
    uint64_t odd = m.odd;
    while (odd) {
        int j = __builtin_ctzll(odd);
        WPS_ASSERT(j < static_cast<int>(odd_w.size()), "monomial_degree: odd index out of range");
        d += odd_w[j];
        odd &= odd - 1;
    }
    return d;
}

WeightSystem::WeightSystem(std::vector<long long> even_weights, std::vector<long long> odd_weights)
    : a_(std::move(even_weights)), b_(std::move(odd_weights)) {
    if (a_.empty()) throw input_error("weight system needs at least one even weight");
    for (long long w : a_) {
        if (w < 1) throw input_error("even weights must be positive integers");
    }
    if (b_.size() > static_cast<size_t>(kMaxOddVars))
        throw input_error("at most 64 odd variables are supported");
}

bool WeightSystem::is_positive() const {
    return std::all_of(b_.begin(), b_.end(), [](long long w) { return w >= 1; });
}

bool WeightSystem::eq43() const {
    if (b_.empty()) return true;
    long long min_b = *std::min_element(b_.begin(), b_.end());
    long long max_a = *std::max_element(a_.begin(), a_.end());
    return min_b >= max_a;
}

bool WeightSystem::unit_even() const {
    return std::all_of(a_.begin(), a_.end(), [](long long w) { return w == 1; });
}

long long WeightSystem::odd_weight_sum(uint64_t odd_mask) const {
    long long s = 0;
    while (odd_mask) {
        int j = __builtin_ctzll(odd_mask);
        WPS_ASSERT(j < static_cast<int>(b_.size()), "odd_weight_sum: index out of range");
        s += b_[j];
        odd_mask &= odd_mask - 1;
    }
    return s;
}

namespace {

void enumerate_basis(const std::vector<long long>& a, size_t var, long long remaining,
                     Monomial& cur, std::vector<Monomial>& out) {
    if (var + 1 == a.size()) {
        if (remaining % a[var] == 0) {
            cur.even[var] = static_cast<int32_t>(remaining / a[var]);
            out.push_back(cur);
            cur.even[var] = 0;
        }
        return;
    }
    for (long long e = 0; e * a[var] <= remaining; ++e) {
        cur.even[var] = static_cast<int32_t>(e);
        enumerate_basis(a, var + 1, remaining - e * a[var], cur, out);
    }
    cur.even[var] = 0;
}

} // namespace

std::vector<Monomial> WeightSystem::graded_piece_basis(long long d) const {
    std::vector<Monomial> out;
    if (d < 0) return out;
    Monomial cur;
    cur.even.assign(a_.size(), 0);
    enumerate_basis(a_, 0, d, cur, out);
    std::sort(out.begin(), out.end(), MonomialLess{});
    return out;
}

long long WeightSystem::graded_piece_dim(long long d) const {
    if (d < 0) return 0;
    return static_cast<long long>(graded_piece_basis(d).size());
}

} // namespace wps
