#pragma once
#include <optional>
#include <string>
#include <vector>

#include "wps/job.hpp"

namespace wps {

// Parsed job file: line-oriented "key = value" entries inside [model],
// [model2], [variety] and [assume] sections. Generator lines are
// f<i> = "<expression>". '#' starts a comment; blank lines are ignored.
struct JobFile {
    ModelSpec model;
    std::optional<ModelSpec> model2;
    std::vector<std::string> generator_names;
    std::vector<std::string> generator_texts;
    bool assume_irreducible = false;
    bool assume_smooth = false;

    bool has_variety() const { return !generator_texts.empty(); }
    // Builds the validated job; requires at least one generator.
    VarietyJob to_job() const;
};

JobFile parse_job_file(const std::string& path);
JobFile parse_job_text(const std::string& text, const std::string& origin = "<input>");

} // namespace wps
