#include "wps/job.hpp"

#include "wps/errors.hpp"

namespace wps {

VarietyJob::VarietyJob(ModelSpec spec, std::vector<Poly> generators, std::vector<std::string> names,
                       bool assume_irreducible, bool assume_smooth)
    : first_(std::move(spec)),
      generators_(std::move(generators)),
      names_(std::move(names)),
      assume_irreducible_(assume_irreducible),
      assume_smooth_(assume_smooth) {
    validate();
}

VarietyJob::VarietyJob(ModelSpec first, ModelSpec second, std::vector<Poly> generators,
                       std::vector<std::string> names, bool assume_irreducible, bool assume_smooth)
    : first_(std::move(first)),
      second_(std::move(second)),
      generators_(std::move(generators)),
      names_(std::move(names)),
      assume_irreducible_(assume_irreducible),
      assume_smooth_(assume_smooth) {
    validate();
}

const ModelSpec& VarietyJob::second() const {
    WPS_ASSERT(second_.has_value(), "second(): not a product job");
    return *second_;
}

int VarietyJob::even_vars() const {
    return first_.m + 1 + (second_ ? second_->m + 1 : 0);
}

int VarietyJob::odd_vars() const { return first_.n + (second_ ? second_->n : 0); }

long long VarietyJob::degree(size_t idx) const {
    WPS_ASSERT(!is_product() && idx < degrees_.size(), "degree(): bad index or product job");
    return degrees_[idx];
}

std::pair<long long, long long> VarietyJob::bidegree(size_t idx) const {
    WPS_ASSERT(is_product() && idx < bidegrees_.size(), "bidegree(): bad index or single job");
    return bidegrees_[idx];
}

long long VarietyJob::odd_weight_sum(uint64_t mask) const {
    if (!is_product()) return first_.weights.odd_weight_sum(mask);
    uint64_t first_mask = mask & ((first_.n == 64) ? ~uint64_t(0) : ((uint64_t(1) << first_.n) - 1));
    uint64_t second_mask = mask >> first_.n;
    return first_.weights.odd_weight_sum(first_mask) + second_->weights.odd_weight_sum(second_mask);
}

void VarietyJob::validate() {
    if (generators_.empty()) throw input_error("variety needs at least one generator");
    if (names_.empty()) {
        for (size_t i = 0; i < generators_.size(); ++i) names_.push_back("f" + std::to_string(i + 1));
    }
    if (names_.size() != generators_.size())
        throw input_error("generator name list does not match generator count");

    int ev = even_vars(), ov = odd_vars();
    // per-factor weight vectors over the combined ring (zero on the other factor)
    std::vector<long long> ew1(ev, 0), ow1(ov, 0), ew2(ev, 0), ow2(ov, 0);
    for (int i = 0; i <= first_.m; ++i) ew1[i] = first_.weights.a()[i];
    for (int j = 0; j < first_.n; ++j) ow1[j] = first_.weights.b()[j];
    if (second_) {
        for (int i = 0; i <= second_->m; ++i) ew2[first_.m + 1 + i] = second_->weights.a()[i];
        for (int j = 0; j < second_->n; ++j) ow2[first_.n + j] = second_->weights.b()[j];
    }

    for (size_t idx = 0; idx < generators_.size(); ++idx) {
        const Poly& f = generators_[idx];
        const std::string& name = names_[idx];
        if (f.even_vars() != ev || f.odd_vars() != ov)
            throw input_error("generator " + name + " lives in the wrong ring");
        if (f.mode() != Mode::Ring)
            throw input_error("generator " + name + " must be in Ring mode");
        if (f.is_zero()) throw input_error("generator " + name + " is zero");
        Parity par = f.parity();
        if (par != Parity::Even)
            throw input_error("generator " + name + " is not of even parity");
        DegreeResult d1 = f.degree_under(ew1, ow1);
        if (d1.kind != DegreeResult::Homogeneous)
            throw input_error("generator " + name + " is not homogeneous" +
                              (second_ ? std::string(" in the first factor") : std::string()));
        if (!second_) {
            degrees_.push_back(d1.degree);
        } else {
            DegreeResult d2 = f.degree_under(ew2, ow2);
            if (d2.kind != DegreeResult::Homogeneous)
                throw input_error("generator " + name + " is not homogeneous in the second factor");
            bidegrees_.emplace_back(d1.degree, d2.degree);
        }
    }
}

} // namespace wps
