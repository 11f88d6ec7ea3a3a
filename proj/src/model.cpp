#include "wps/model.hpp"

#include <sstream>

#include "wps/errors.hpp"

namespace wps {

ModelSpec::ModelSpec(int m_, int n_, WeightSystem w) : m(m_), n(n_), weights(std::move(w)) {
    if (m < 1) throw input_error("model: m must be >= 1");
    if (m > 4096) throw input_error("model: m capped at 4096");
    if (n < 0) throw input_error("model: n must be >= 0");
    if (weights.even_count() != m + 1)
        throw input_error("model: expected " + std::to_string(m + 1) + " even weights, got " +
                          std::to_string(weights.even_count()));
    if (weights.odd_count() != n)
        throw input_error("model: expected " + std::to_string(n) + " odd weights, got " +
                          std::to_string(weights.odd_count()));
}

ModelSpec ModelSpec::unweighted(int m, int n) {
    return ModelSpec(m, n, WeightSystem(std::vector<long long>(m + 1, 1), std::vector<long long>(n, 1)));
}

namespace {

std::string join(const std::vector<long long>& v) {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v[i];
    }
    return os.str();
}

} // namespace

std::string ModelSpec::describe() const {
    std::ostringstream os;
    os << "P^{" << m << "|" << n << "}(";
    if (unit_even()) os << "1";
    else os << join(weights.a());
    os << "|" << join(weights.b()) << ")";
    return os.str();
}

SplitModelData split_model(const ModelSpec& spec) {
    SplitModelData data;
    std::ostringstream os;
    os << "P^" << spec.m;
    if (!spec.unit_even()) os << "(" << join(spec.weights.a()) << ")";
    data.reduced = os.str();
    for (long long bj : spec.weights.b()) data.odd_cotangent_twists.push_back(-bj);
    return data;
}

ProductModelData product_model(const ModelSpec& s1, const ModelSpec& s2) {
    ProductModelData data;
    data.reduced = split_model(s1).reduced + " x " + split_model(s2).reduced;
    for (long long bj : s1.weights.b()) data.odd_cotangent_twists.emplace_back(-bj, 1);
    for (long long bj : s2.weights.b()) data.odd_cotangent_twists.emplace_back(-bj, 2);
    return data;
}

} // namespace wps
