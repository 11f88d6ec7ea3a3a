#include "wps/sections.hpp"

#include <set>

#include "wps/errors.hpp"
#include "wps/jacobian_solve.hpp"

namespace wps {

NormalSection extract_normal_section(const Poly& f, const ModelSpec& spec) {
    if (f.parity() != Parity::Even) throw input_error("extract_normal_section: even polynomial required");
    DegreeResult deg = f.weighted_degree(spec.weights);
    if (deg.kind != DegreeResult::Homogeneous)
        throw input_error("extract_normal_section: homogeneous polynomial required");
    int k = f.min_positive_odd_len();
    if (k == 0) throw input_error("extract_normal_section: polynomial is homogeneously reduced");

    NormalSection section;
    section.g = f.coefficient_of_theta(0);
    section.k = k;
    section.d = deg.degree;
    std::set<uint64_t> masks;
    for (const auto& [mono, c] : f.terms()) {
        (void)c;
        if (mono.odd_len() == k) masks.insert(mono.odd);
    }
    for (uint64_t mask : masks) {
        Poly h = f.coefficient_of_theta(mask);
        long long expected = section.d - spec.weights.odd_weight_sum(mask);
        DegreeResult hd = h.weighted_degree(spec.weights);
        WPS_ASSERT(hd.is_homogeneous_of(expected),
                   "normal section component degree differs from d - b_I");
        section.components.emplace(mask, std::move(h));
    }
    return section;
}

std::optional<JacobianWitnesses> jacobian_membership(const NormalSection& section,
                                                     const ModelSpec& spec) {
    JacobianWitnesses witnesses;
    for (const auto& [mask, h] : section.components) {
        long long b_i = spec.weights.odd_weight_sum(mask);
        JacobianSolve solve = solve_in_jacobian_pieces({section.g}, {h}, spec.weights, b_i);
        if (!solve.consistent) return std::nullopt;
        witnesses.emplace(mask, std::move(solve.coefficients));
    }
    return witnesses;
}

} // namespace wps
