#pragma once
#include <optional>
#include <string>
#include <vector>

#include "wps/job.hpp"
#include "wps/search.hpp"

namespace wps {

enum class Outcome { Split, HomogeneouslySplit, HomogeneouslyNonSplit, NonSplit, Inconclusive };

std::string outcome_name(Outcome o);

struct Reason {
    std::string rule;
    std::string cite; // theorem citation, or "plumbing"
    std::string detail;
};

struct Verdict {
    Outcome outcome = Outcome::Inconclusive;
    std::vector<Reason> reasons;
    std::optional<Subst> witness;            // for (Homogeneously)Split via search
    std::optional<ObstructionReport> obstruction;
};

// Rule cascade over the classification primitives; every firing rule appends a
// cited reason. Split-side and non-split-side conclusions on the same job
// raise an internal error.
Verdict analyze(const VarietyJob& job);

} // namespace wps
