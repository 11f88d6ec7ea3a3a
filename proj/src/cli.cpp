#include "wps/cli.hpp"

#include <iostream>

#include "CLI11.hpp"
#include "wps/charts.hpp"
#include "wps/classify.hpp"
#include "wps/errors.hpp"
#include "wps/jobfile.hpp"
#include "wps/report.hpp"

namespace wps {

namespace {

bool g_verbose = false;

void emit(const Json& j) { std::cout << j.dump(2) << std::endl; }

void note(const std::string& s) {
    if (g_verbose) std::cerr << s << std::endl;
}

int run_model(const std::string& path) {
    JobFile jf = parse_job_file(path);
    if (jf.model2) emit(product_model_json(jf.model, *jf.model2));
    else emit(split_model_json(jf.model));
    return 0;
}

int run_cohomology(int m, const std::string& sheaf, int p, bool table, long long kmin,
                   long long kmax, long long q, long long k) {
    if (table) {
        emit(cohomology_table_json(m, sheaf, p, kmin, kmax));
        return 0;
    }
    long long dim = 0;
    if (sheaf == "line") dim = h_line(m, static_cast<int>(q), k);
    else if (sheaf == "tangent") dim = h_tangent(m, static_cast<int>(q), k);
    else if (sheaf == "omega") dim = h_omega(m, p, static_cast<int>(q), k);
    else throw input_error("unknown sheaf '" + sheaf + "' (line, tangent or omega)");
    emit(cohomology_entry_json(m, sheaf, p, static_cast<int>(q), k, dim));
    return 0;
}

int run_normality(const std::string& path, std::optional<long long> d_flag) {
    JobFile jf = parse_job_file(path);
    if (jf.model2) throw input_error("normality certificates run on a single model");
    long long d = 0;
    if (d_flag) {
        d = *d_flag;
    } else if (jf.has_variety()) {
        VarietyJob job = jf.to_job();
        if (job.generators().size() != 1)
            throw input_error("pass --d explicitly for multi-generator jobs");
        d = job.degree(0);
        note("using hypersurface degree d = " + std::to_string(d) + " from the variety block");
    } else {
        throw input_error("--d is required when the job file has no variety block");
    }
    emit(normality_json(normality_certificate(jf.model.m, jf.model.weights.b(), d)));
    return 0;
}

int run_analyze(const std::string& path) {
    JobFile jf = parse_job_file(path);
    VarietyJob job = jf.to_job();
    Verdict v = analyze(job);
    note("outcome: " + outcome_name(v.outcome));
    for (const Reason& r : v.reasons) note("  [" + r.cite + "] " + r.rule + ": " + r.detail);
    emit(verdict_json(v, job.names()));
    return 0;
}

int run_search(const std::string& path, std::optional<int> max_order) {
    JobFile jf = parse_job_file(path);
    VarietyJob job = jf.to_job();
    int cap = max_order ? *max_order : job.spec().n;
    SearchResult r = splitting_search(job, cap);
    emit(search_json(r));
    return 0;
}

int run_segre(const std::string& path, bool with_map) {
    JobFile jf = parse_job_file(path);
    if (!jf.model2) throw input_error("segre needs both [model] and [model2] sections");
    emit(segre_json(jf.model, *jf.model2, with_map));
    return 0;
}

int run_charts(const std::string& path, bool check_cocycles, std::optional<int> mu,
               std::optional<int> nu) {
    JobFile jf = parse_job_file(path);
    if (jf.model2) throw input_error("charts run on a single model");
    const ModelSpec& spec = jf.model;
    if (mu && nu) {
        Subst t = chart_transition(spec, *mu, *nu);
        Json j = model_json(spec);
        j["mu"] = *mu;
        j["nu"] = *nu;
        j["transition"] = subst_json(t);
        emit(j);
        return 0;
    }
    if (!check_cocycles)
        throw input_error("charts needs --check-cocycles or a --mu/--nu pair");
    bool all_pass = true;
    long long triples = 0;
    for (int a = 1; a <= spec.m + 1; ++a) {
        for (int b = 1; b <= spec.m + 1; ++b) {
            for (int c = 1; c <= spec.m + 1; ++c) {
                ++triples;
                if (!cocycle_check(spec, a, b, c)) all_pass = false;
            }
        }
    }
    emit(charts_json(spec, all_pass, triples));
    return 0;
}

int dispatch(int argc, char** argv) {
    CLI::App app{"exact splitness analysis for varieties in weighted projective superspaces"};
    app.require_subcommand(1);
    app.fallthrough(); // parent flags may follow the subcommand
    app.add_flag("--verbose", g_verbose, "human-readable summary on stderr");

    std::string path;
    auto* model = app.add_subcommand("model", "split-model data of the job's model");
    model->add_option("job", path, "job file")->required();

    auto* coh = app.add_subcommand("cohomology", "Bott dimension tables on P^m");
    int m = 1, p = 0;
    long long q = 0, k = 0, kmin = -8, kmax = 8;
    bool table = false;
    std::string sheaf = "tangent";
    coh->add_option("--m", m, "ambient dimension")->required();
    coh->add_option("--sheaf", sheaf, "line | tangent | omega (default tangent)");
    coh->add_option("--p", p, "form degree for omega");
    coh->add_option("--q", q, "cohomology degree");
    coh->add_option("--k", k, "twist");
    coh->add_flag("--table", table, "sweep q = 0..m, k in [--k-min, --k-max]");
    coh->add_option("--k-min", kmin, "table twist lower bound (default -8)");
    coh->add_option("--k-max", kmax, "table twist upper bound (default 8)");

    auto* norm = app.add_subcommand("normality", "vanishing-chain normality certificate");
    std::string norm_path;
    std::optional<long long> d_flag;
    norm->add_option("job", norm_path, "job file")->required();
    long long d_value = 0;
    auto* d_opt = norm->add_option("--d", d_value, "hypersurface degree");

    auto* ana = app.add_subcommand("analyze", "full verdict pipeline");
    std::string ana_path;
    ana->add_option("job", ana_path, "job file")->required();

    auto* sea = app.add_subcommand("search", "constructive homogeneous-splitting search");
    std::string sea_path;
    int max_order_value = 0;
    sea->add_option("job", sea_path, "job file")->required();
    auto* max_opt = sea->add_option("--max-order", max_order_value, "stop above this theta order");

    auto* seg = app.add_subcommand("segre", "super-Segre embedding data for a product job");
    std::string seg_path;
    bool with_map = false;
    seg->add_option("job", seg_path, "job file")->required();
    seg->add_flag("--map", with_map, "include the unit-weight coordinate map");

    auto* cha = app.add_subcommand("charts", "chart transitions and cocycle verification");
    std::string cha_path;
    bool check_cocycles = false;
    int mu_value = 0, nu_value = 0;
    cha->add_option("job", cha_path, "job file")->required();
    cha->add_flag("--check-cocycles", check_cocycles, "verify all chart triples");
    auto* mu_opt = cha->add_option("--mu", mu_value, "source chart");
    auto* nu_opt = cha->add_option("--nu", nu_value, "target chart");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1; // flag misuse is an input error; --help exits 0
    }

    if (model->parsed()) return run_model(path);
    if (coh->parsed()) return run_cohomology(m, sheaf, p, table, kmin, kmax, q, k);
    if (norm->parsed()) {
        if (d_opt->count()) d_flag = d_value;
        return run_normality(norm_path, d_flag);
    }
    if (ana->parsed()) return run_analyze(ana_path);
    if (sea->parsed()) {
        std::optional<int> cap;
        if (max_opt->count()) cap = max_order_value;
        return run_search(sea_path, cap);
    }
    if (seg->parsed()) return run_segre(seg_path, with_map);
    if (cha->parsed()) {
        std::optional<int> mu, nu;
        if (mu_opt->count()) mu = mu_value;
        if (nu_opt->count()) nu = nu_value;
        return run_charts(cha_path, check_cocycles, mu, nu);
    }
    return 1;
}

} // namespace

int cli_main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 1;
    } catch (const internal_error& e) {
        std::cerr << "internal error: " << e.what() << std::endl;
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << std::endl;
        return 2;
    }
}

} // namespace wps
