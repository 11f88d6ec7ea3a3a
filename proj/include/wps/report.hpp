#pragma once
#include "json.hpp"
#include "wps/cohomology.hpp"
#include "wps/model.hpp"
#include "wps/search.hpp"
#include "wps/segre.hpp"
#include "wps/subst.hpp"
#include "wps/verdict.hpp"

namespace wps {

using Json = nlohmann::ordered_json;

Json model_json(const ModelSpec& spec);
Json split_model_json(const ModelSpec& spec);
Json product_model_json(const ModelSpec& s1, const ModelSpec& s2);
Json segre_json(const ModelSpec& s1, const ModelSpec& s2, bool include_map);
Json cohomology_entry_json(int m, const std::string& sheaf, int p, int q, long long k, long long dim);
Json cohomology_table_json(int m, const std::string& sheaf, int p, long long kmin, long long kmax);
Json normality_json(const NormalityCertificate& cert);
Json subst_json(const Subst& s);
Json verdict_json(const Verdict& v, const std::vector<std::string>& generator_names);
Json search_json(const SearchResult& r);
Json charts_json(const ModelSpec& spec, bool all_pass, long long triples);

} // namespace wps
