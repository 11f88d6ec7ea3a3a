#pragma once
#include <string>
#include <vector>

#include "wps/weights.hpp"

namespace wps {

// The data (m, n, a, b) of the weighted projective superspace P^{m|n}(a|b).
struct ModelSpec {
    int m = 1;
    int n = 0;
    WeightSystem weights;

    ModelSpec(int m_, int n_, WeightSystem w);
    static ModelSpec unweighted(int m, int n); // a = b = (1,...,1)

    bool positive() const { return weights.is_positive(); }
    bool eq43() const { return weights.eq43(); }
    bool unit_even() const { return weights.unit_even(); }
    std::string describe() const; // e.g. "P^{2|2}(1|1,1)"
};

// Split-model identification: reduced space descriptor and the odd cotangent
// line-bundle twists (-b_1, ..., -b_n).
struct SplitModelData {
    std::string reduced;
    std::vector<long long> odd_cotangent_twists;
};

SplitModelData split_model(const ModelSpec& spec);

// External direct sum data for a product of two superspaces; each twist is
// tagged with the factor (1 or 2) it comes from.
struct ProductModelData {
    std::string reduced;
    std::vector<std::pair<long long, int>> odd_cotangent_twists;
};

ProductModelData product_model(const ModelSpec& s1, const ModelSpec& s2);

} // namespace wps
