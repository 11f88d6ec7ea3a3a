#pragma once
#include <optional>
#include <string>
#include <vector>

#include "wps/model.hpp"
#include "wps/poly.hpp"

namespace wps {

// A variety analysis job: a model (or a pair of models for products) plus
// even, homogeneous, nonzero defining polynomials in the homogeneous
// coordinate ring. Product generators live in the combined ring (factor-one
// even variables first, then factor-two; same for odd) and must be
// bihomogeneous.
class VarietyJob {
  public:
    VarietyJob(ModelSpec spec, std::vector<Poly> generators, std::vector<std::string> names = {},
               bool assume_irreducible = false, bool assume_smooth = false);
    VarietyJob(ModelSpec first, ModelSpec second, std::vector<Poly> generators,
               std::vector<std::string> names = {}, bool assume_irreducible = false,
               bool assume_smooth = false);

    bool is_product() const { return second_.has_value(); }
    const ModelSpec& spec() const { return first_; }
    const ModelSpec& first() const { return first_; }
    const ModelSpec& second() const;

    int even_vars() const;
    int odd_vars() const;

    const std::vector<Poly>& generators() const { return generators_; }
    const std::vector<std::string>& names() const { return names_; }
    bool assume_irreducible() const { return assume_irreducible_; }
    bool assume_smooth() const { return assume_smooth_; }

    // Weighted degree of generator idx (single-model jobs).
    long long degree(size_t idx) const;
    // Bidegree of generator idx (product jobs).
    std::pair<long long, long long> bidegree(size_t idx) const;

    // Odd weight of an index word in the combined ring (sum over both factors
    // for products).
    long long odd_weight_sum(uint64_t mask) const;

  private:
    ModelSpec first_;
    std::optional<ModelSpec> second_;
    std::vector<Poly> generators_;
    std::vector<std::string> names_;
    bool assume_irreducible_ = false;
    bool assume_smooth_ = false;
    std::vector<long long> degrees_;
    std::vector<std::pair<long long, long long>> bidegrees_;

    void validate();
};

} // namespace wps
