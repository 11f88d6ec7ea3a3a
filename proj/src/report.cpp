#include "wps/report.hpp"

#include <algorithm>

#include "wps/errors.hpp"

namespace wps {

Json model_json(const ModelSpec& spec) {
    Json j;
    j["m"] = spec.m;
    j["n"] = spec.n;
    j["a"] = spec.weights.a();
    j["b"] = spec.weights.b();
    return j;
}

Json split_model_json(const ModelSpec& spec) {
    SplitModelData data = split_model(spec);
    Json j = model_json(spec);
    j["reduced"] = data.reduced;
    j["odd_cotangent_twists"] = data.odd_cotangent_twists;
    j["positive"] = spec.positive();
    j["eq43"] = spec.eq43();
    j["description"] = spec.describe();
    return j;
}

Json product_model_json(const ModelSpec& s1, const ModelSpec& s2) {
    ProductModelData data = product_model(s1, s2);
    Json j;
    j["factor1"] = model_json(s1);
    j["factor2"] = model_json(s2);
    j["reduced"] = data.reduced;
    Json twists = Json::array();
    for (const auto& [twist, factor] : data.odd_cotangent_twists) {
        twists.push_back(Json{{"twist", twist}, {"factor", factor}});
    }
    j["odd_cotangent_twists"] = twists;
    return j;
}

Json segre_json(const ModelSpec& s1, const ModelSpec& s2, bool include_map) {
    SegreData data = segre_data(s1, s2);
    Json j;
    j["factor1"] = model_json(s1);
    j["factor2"] = model_json(s2);
    j["m2"] = data.m2;
    j["n2"] = data.n2;
    j["b2"] = data.b2;
    bool unit = s1.weights.is_positive() && s2.weights.is_positive() &&
                std::all_of(s1.weights.b().begin(), s1.weights.b().end(),
                            [](long long w) { return w == 1; }) &&
                std::all_of(s2.weights.b().begin(), s2.weights.b().end(),
                            [](long long w) { return w == 1; });
    if (include_map && unit) {
        Subst map = segre_coordinate_map(s1.m, s1.n, s2.m, s2.n);
        Json even = Json::array(), odd = Json::array();
        for (const Poly& p : map.even_images()) even.push_back(p.to_string());
        for (const Poly& p : map.odd_images()) odd.push_back(p.to_string());
        j["coordinate_map"] = Json{{"even", even}, {"odd", odd}};
    }
    return j;
}

Json cohomology_entry_json(int m, const std::string& sheaf, int p, int q, long long k, long long dim) {
    Json j;
    j["m"] = m;
    j["sheaf"] = sheaf;
    if (sheaf == "omega") j["p"] = p;
    j["entries"] = Json::array({Json{{"q", q}, {"k", k}, {"dim", dim}}});
    return j;
}

Json cohomology_table_json(int m, const std::string& sheaf, int p, long long kmin, long long kmax) {
    Json j;
    j["m"] = m;
    j["sheaf"] = sheaf;
    if (sheaf == "omega") j["p"] = p;
    Json entries = Json::array();
    for (int q = 0; q <= m; ++q) {
        for (long long k = kmin; k <= kmax; ++k) {
            long long dim = 0;
            if (sheaf == "line") dim = h_line(m, q, k);
            else if (sheaf == "tangent") dim = h_tangent(m, q, k);
            else if (sheaf == "omega") dim = h_omega(m, p, q, k);
            else throw input_error("unknown sheaf '" + sheaf + "'");
            if (dim != 0) entries.push_back(Json{{"q", q}, {"k", k}, {"dim", dim}});
        }
    }
    j["entries"] = entries;
    return j;
}

Json normality_json(const NormalityCertificate& cert) {
    Json j;
    j["m"] = cert.m;
    j["b"] = cert.b;
    j["d"] = cert.d;
    j["overall"] = cert.overall == NormalityCertificate::Normal ? "Normal" : "NotProvable";
    Json rows = Json::array();
    for (const NormalitySummandRow& row : cert.summands) {
        rows.push_back(Json{{"I", row.indices},
                            {"twist", row.twist},
                            {"h0_ambient", row.h0_ambient},
                            {"h1_twisted_ambient", row.h1_twisted_ambient},
                            {"vanishes", row.vanishes}});
    }
    j["summands"] = rows;
    return j;
}

Json subst_json(const Subst& s) {
    Json j;
    for (int mu = 1; mu <= s.source_even(); ++mu)
        j["x" + std::to_string(mu)] = s.even_image(mu).to_string();
    for (int i = 1; i <= s.source_odd(); ++i)
        j["t" + std::to_string(i)] = s.odd_image(i).to_string();
    return j;
}

Json verdict_json(const Verdict& v, const std::vector<std::string>& generator_names) {
    Json j;
    j["outcome"] = outcome_name(v.outcome);
    Json reasons = Json::array();
    for (const Reason& r : v.reasons)
        reasons.push_back(Json{{"rule", r.rule}, {"cite", r.cite}, {"detail", r.detail}});
    j["reasons"] = reasons;
    if (v.witness) j["witness"] = subst_json(*v.witness);
    if (v.obstruction) {
        Json res = Json::array();
        for (size_t i = 0; i < v.obstruction->residuals.size(); ++i) {
            const Poly& p = v.obstruction->residuals[i];
            if (p.is_zero()) continue;
            std::string name =
                i < generator_names.size() ? generator_names[i] : "f" + std::to_string(i + 1);
            res.push_back(Json{{"generator", name}, {"residual", p.to_string()}});
        }
        j["obstruction"] = Json{{"order", v.obstruction->failed_order}, {"residual", res}};
    }
    return j;
}

Json search_json(const SearchResult& r) {
    Json j;
    switch (r.kind) {
        case SearchResult::HomogeneouslySplit: j["result"] = "HomogeneouslySplit"; break;
        case SearchResult::Obstructed: j["result"] = "Obstructed"; break;
        case SearchResult::Exhausted: j["result"] = "Exhausted"; break;
    }
    if (r.witness) j["witness"] = subst_json(*r.witness);
    if (r.report) {
        Json res = Json::array();
        for (size_t i = 0; i < r.report->residuals.size(); ++i) {
            if (r.report->residuals[i].is_zero()) continue;
            res.push_back(Json{{"generator", "f" + std::to_string(i + 1)},
                               {"residual", r.report->residuals[i].to_string()}});
        }
        j["obstruction"] = Json{{"order", r.report->failed_order}, {"residual", res}};
        if (r.report->solved_prefix) j["solved_prefix"] = subst_json(*r.report->solved_prefix);
    }
    return j;
}

Json charts_json(const ModelSpec& spec, bool all_pass, long long triples) {
    Json j = model_json(spec);
    j["triples_checked"] = triples;
    j["all_cocycles_pass"] = all_pass;
    return j;
}

} // namespace wps
