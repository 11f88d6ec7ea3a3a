#include "doctest.h"
#include "gen.hpp"
#include "wps/autos.hpp"
#include "wps/classify.hpp"
#include "wps/errors.hpp"
#include "wps/parse.hpp"
#include "wps/sections.hpp"
#include "wps/search.hpp"
#include "wps/verdict.hpp"

using namespace wps;

namespace {

ModelSpec weighted(int m, std::vector<long long> a, std::vector<long long> b) {
    int n = static_cast<int>(b.size());
    return ModelSpec(m, n, WeightSystem(std::move(a), std::move(b)));
}

VarietyJob hypersurface(const ModelSpec& spec, const std::string& text, bool assume_irr = false,
                        bool assume_smooth = false) {
    Poly f = parse_polynomial(text, spec.m + 1, spec.n);
    return VarietyJob(spec, {f}, {"f1"}, assume_irr, assume_smooth);
}

const ModelSpec kQuadricSpec = ModelSpec::unweighted(2, 2);
const char* kQuadricText = "x1^2 + x2^2 + x3^2 + t1*t2";

ModelSpec sethi_spec(int big_n) {
    int m = 3 * big_n;
    int n = 2 * big_n - 2;
    std::vector<long long> b;
    for (int i = 0; i < big_n - 1; ++i) {
        b.push_back(1);
        b.push_back(2);
    }
    return ModelSpec(m, n, WeightSystem(std::vector<long long>(m + 1, 1), b));
}

std::string sethi_text(int big_n) {
    std::string s;
    for (int i = 1; i <= 3 * big_n + 1; ++i) {
        if (i > 1) s += " + ";
        s += "x" + std::to_string(i) + "^3";
    }
    for (int k = 0; 2 * k + 2 <= 2 * big_n - 2; ++k)
        s += " + t" + std::to_string(2 * k + 1) + "*t" + std::to_string(2 * k + 2);
    return s;
}

bool has_cite(const Verdict& v, const std::string& cite) {
    for (const Reason& r : v.reasons) {
        if (r.cite.find(cite) != std::string::npos) return true;
    }
    return false;
}

} // namespace

TEST_CASE("job validation rejects bad generators") {
    CHECK_THROWS_AS(hypersurface(kQuadricSpec, "x1 + t1*t2"), input_error);  // inhomogeneous
    CHECK_THROWS_AS(hypersurface(kQuadricSpec, "x1 + t1"), input_error);     // odd parity part
    CHECK_THROWS_AS(hypersurface(kQuadricSpec, "0"), input_error);           // zero generator
}

TEST_CASE("homogeneous non-reducedness and order") {
    VarietyJob quad = hypersurface(kQuadricSpec, kQuadricText);
    CHECK(is_homogeneously_nonreduced(quad));
    CHECK(homogeneous_order(quad) == 2);

    VarietyJob reduced = hypersurface(kQuadricSpec, "x1^2 + x2^2 + x3^2");
    CHECK_FALSE(is_homogeneously_nonreduced(reduced));
    CHECK_FALSE(homogeneous_order(reduced).has_value());

    ModelSpec p24 = ModelSpec::unweighted(2, 4);
    VarietyJob quartic = hypersurface(p24, "x1^4 + t1*t2*t3*t4");
    CHECK(homogeneous_order(quartic) == 4);

    ModelSpec p12 = ModelSpec::unweighted(1, 2);
    std::vector<Poly> two = {parse_polynomial("x1*x2", 2, 2),
                             parse_polynomial("x1^2 + t1*t2", 2, 2)};
    VarietyJob pair(p12, two);
    CHECK(is_homogeneously_nonreduced(pair));
    CHECK(homogeneous_order(pair) == 2);
}

TEST_CASE("is_quadric with pair degree diagnostics") {
    auto d1 = is_quadric(hypersurface(kQuadricSpec, kQuadricText));
    CHECK(d1.quadric);
    CHECK(d1.pair_degree_constant);
    CHECK(d1.pair_degree == 2);

    ModelSpec p24 = ModelSpec::unweighted(2, 4);
    auto d2 = is_quadric(hypersurface(p24, "x1^4 + t1*t2*t3*t4"));
    CHECK_FALSE(d2.quadric);

    // diagonal cubic with weights (1|1,2): occurring pair has weight 3 = d
    ModelSpec sethi = sethi_spec(2);
    auto d3 = is_quadric(hypersurface(sethi, sethi_text(2)));
    CHECK(d3.quadric);
    CHECK(d3.pair_degree_constant);
    CHECK(d3.pair_degree == 3);
}

TEST_CASE("smoothness_check structured classes") {
    ModelSpec p2 = ModelSpec::unweighted(2, 0);
    CHECK(smoothness_check(parse_polynomial("x1^2 + x2^2 + x3^2", 3, 0), p2).result ==
          Smoothness::Smooth);
    CHECK(smoothness_check(parse_polynomial("x1*x2", 3, 0), p2).result == Smoothness::Singular);
    // generic quintic: outside the structured classes
    CHECK(smoothness_check(parse_polynomial("x1^5 + x1^3*x2^2 + x2*x3^4", 3, 0), p2).result ==
          Smoothness::Unknown);
    // diagonal form missing a variable
    CHECK(smoothness_check(parse_polynomial("x1^3 + x2^3", 3, 0), p2).result ==
          Smoothness::Singular);
    CHECK(smoothness_check(parse_polynomial("x1 + 2*x2", 3, 0), p2).result == Smoothness::Smooth);
}

TEST_CASE("irreducibility_check structured classes") {
    ModelSpec p2 = ModelSpec::unweighted(2, 0);
    CHECK(irreducibility_check(parse_polynomial("x1^2 + x2^2 + x3^2", 3, 0), p2).result ==
          Irreducibility::Irreducible);
    CHECK(irreducibility_check(parse_polynomial("x1^2 - x2^2", 3, 0), p2).result ==
          Irreducibility::Reducible);
    ModelSpec p3 = ModelSpec::unweighted(3, 0);
    CHECK(irreducibility_check(parse_polynomial("x1^3 + x2^3 + x3^3 + x4^3", 4, 0), p3).result ==
          Irreducibility::Unknown);
    // trial division finds the rational factor of x1^3 - x2^3
    CHECK(irreducibility_check(parse_polynomial("x1^3 - x2^3", 3, 0), p2).result ==
          Irreducibility::Reducible);
}

TEST_CASE("extract_normal_section: worked instances") {
    auto s1 = extract_normal_section(parse_polynomial(kQuadricText, 3, 2), kQuadricSpec);
    CHECK(s1.g == parse_polynomial("x1^2 + x2^2 + x3^2", 3, 2));
    CHECK(s1.k == 2);
    REQUIRE(s1.components.size() == 1);
    CHECK(s1.components.begin()->second == parse_polynomial("1", 3, 2));

    ModelSpec sethi = sethi_spec(2);
    auto s2 = extract_normal_section(parse_polynomial(sethi_text(2), 7, 2), sethi);
    CHECK(s2.k == 2);
    CHECK(s2.d == 3);
    REQUIRE(s2.components.size() == 1);
    CHECK(s2.components.begin()->second == parse_polynomial("1", 7, 2));

    ModelSpec p112 = weighted(2, {1, 1, 2}, {1, 1});
    auto s3 = extract_normal_section(parse_polynomial("x1^2*x3 + x1^2*t1*t2", 3, 2), p112);
    CHECK(s3.g == parse_polynomial("x1^2*x3", 3, 2));
    CHECK(s3.k == 2);
    REQUIRE(s3.components.size() == 1);
    CHECK(s3.components.begin()->second == parse_polynomial("x1^2", 3, 2));

    CHECK_THROWS_AS(extract_normal_section(parse_polynomial("x1^2", 3, 2), kQuadricSpec),
                    input_error);
}

TEST_CASE("property: normal sections carry the graded component data exactly") {
    gen::Rng rng(1313);
    WeightSystem w({1, 1, 1}, {1, 2, 1});
    ModelSpec spec(2, 3, w);
    int exercised = 0;
    for (int trial = 0; trial < 200 && exercised < 60; ++trial) {
        long long d = rng.pick(2, 6);
        Poly f = rng.homogeneous(w, d, 4, /*even_parity_only=*/true);
        if (f.is_zero() || f.min_positive_odd_len() == 0) continue;
        auto section = extract_normal_section(f, spec);
        CHECK(section.k == f.min_positive_odd_len());
        CHECK(section.g == f.coefficient_of_theta(0));
        // reassembly: g + sum_I h^I theta_I recovers f up to higher orders
        Poly rebuilt = section.g;
        for (const auto& [mask, h] : section.components) {
            CHECK_FALSE(h.is_zero());
            auto deg = h.weighted_degree(w);
            CHECK(deg.is_homogeneous_of(section.d - w.odd_weight_sum(mask)));
            Poly theta_word(3, 3);
            Monomial mono;
            mono.even.assign(3, 0);
            mono.odd = mask;
            theta_word.add_term(mono, Rational(1));
            rebuilt += h * theta_word;
        }
        Poly difference = f - rebuilt;
        CHECK((difference.is_zero() || difference.min_positive_odd_len() > section.k));
        ++exercised;
    }
    CHECK(exercised >= 60);
}

TEST_CASE("jacobian_membership: solvable and unsolvable systems") {
    ModelSpec p112 = weighted(2, {1, 1, 2}, {1, 1});
    auto s1 = extract_normal_section(parse_polynomial("x1^2*x3 + x1^2*t1*t2", 3, 2), p112);
    auto w1 = jacobian_membership(s1, p112);
    REQUIRE(w1.has_value());
    const auto& per_sigma = w1->begin()->second;
    REQUIRE(per_sigma.size() == 1);
    CHECK(per_sigma.begin()->first == 3); // dg/dx3 = x1^2
    CHECK(per_sigma.begin()->second == parse_polynomial("1", 3, 2));

    auto s2 = extract_normal_section(parse_polynomial(kQuadricText, 3, 2), kQuadricSpec);
    CHECK_FALSE(jacobian_membership(s2, kQuadricSpec).has_value());

    // h^I equal to a partial of g is always expressible
    ModelSpec p1b = weighted(1, {1, 1}, {1, 0});
    NormalSection manual;
    manual.g = parse_polynomial("x1^3 + x2^3", 2, 2);
    manual.k = 2;
    manual.d = 3;
    manual.components.emplace(0b11, parse_polynomial("3*x1^2", 2, 2));
    auto w3 = jacobian_membership(manual, p1b);
    REQUIRE(w3.has_value());
    CHECK(w3->begin()->second.at(1) == parse_polynomial("1", 2, 2));
}

TEST_CASE("jacobian witnesses normalize the order in one step") {
    ModelSpec p112 = weighted(2, {1, 1, 2}, {1, 1});
    Poly f = parse_polynomial("x1^2*x3 + x1^2*t1*t2", 3, 2);
    auto section = extract_normal_section(f, p112);
    auto witnesses = jacobian_membership(section, p112);
    REQUIRE(witnesses.has_value());
    // phi: x^sigma -> x^sigma - h^{I|sigma} theta_I kills the order-k component
    std::vector<Poly> even_images, odd_images;
    for (int mu = 1; mu <= 3; ++mu) even_images.push_back(Poly::variable_even(3, 2, mu));
    for (int j = 1; j <= 2; ++j) odd_images.push_back(Poly::variable_odd(3, 2, j));
    for (const auto& [mask, per_sigma] : *witnesses) {
        for (const auto& [sigma, coeff] : per_sigma) {
            Poly theta_word(3, 2);
            Monomial mono;
            mono.even.assign(3, 0);
            mono.odd = mask;
            theta_word.add_term(mono, Rational(1));
            even_images[sigma - 1] -= coeff * theta_word;
        }
    }
    Poly pushed = apply(Subst(even_images, odd_images), f);
    CHECK(pushed.coefficient_of_theta(0b11).is_zero());
}

TEST_CASE("splitting_search: witness on the weighted model") {
    ModelSpec p112 = weighted(2, {1, 1, 2}, {1, 1});
    VarietyJob job = hypersurface(p112, "x1^2*x3 + x1^2*t1*t2");
    SearchResult r = splitting_search(job, 2);
    REQUIRE(r.kind == SearchResult::HomogeneouslySplit);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->even_image(3) == parse_polynomial("x3 - t1*t2", 3, 2));
    CHECK(r.witness->even_image(1) == parse_polynomial("x1", 3, 2));
    CHECK(apply(*r.witness, job.generators()[0]) == parse_polynomial("x1^2*x3", 3, 2));
    CHECK(check_weight_preserving(p112, *r.witness));
}

TEST_CASE("splitting_search: obstruction on the flagship quadric") {
    VarietyJob job = hypersurface(kQuadricSpec, kQuadricText);
    SearchResult r = splitting_search(job, 2);
    REQUIRE(r.kind == SearchResult::Obstructed);
    REQUIRE(r.report.has_value());
    CHECK(r.report->failed_order == 2);
    REQUIRE(r.report->residuals.size() == 1);
    CHECK(r.report->residuals[0] == parse_polynomial("t1*t2", 3, 2));
    // the prefix is the identity: nothing below order 2 needed solving
    CHECK(*r.report->solved_prefix == Subst::identity(3, 2));
}

TEST_CASE("splitting_search: reduced input yields the identity witness") {
    VarietyJob job = hypersurface(kQuadricSpec, "x1^2 + x2^2 + x3^2");
    SearchResult r = splitting_search(job, 2);
    REQUIRE(r.kind == SearchResult::HomogeneouslySplit);
    CHECK(*r.witness == Subst::identity(3, 2));
}

TEST_CASE("splitting_search: multi-order elimination with two steps") {
    // Odd weights (1,1,0,0) on P(1,1,2) keep both the order-2 and the order-4
    // systems solvable.
    ModelSpec spec = weighted(2, {1, 1, 2}, {1, 1, 0, 0});
    VarietyJob job = hypersurface(spec, "x1^2*x3 + x1^2*t1*t2 + x1^2*t1*t2*t3*t4");
    SearchResult r = splitting_search(job, 4);
    REQUIRE(r.kind == SearchResult::HomogeneouslySplit);
    Poly pushed = apply(*r.witness, job.generators()[0]);
    CHECK(pushed.max_odd_len() == 0);
    CHECK(check_weight_preserving(spec, *r.witness));
    CHECK(r.orders_processed == 2);
}

TEST_CASE("splitting_search: exhausted below the needed order") {
    ModelSpec spec = weighted(2, {1, 1, 2}, {1, 1, 0, 0});
    VarietyJob job = hypersurface(spec, "x1^2*x3 + x1^2*t1*t2*t3*t4");
    SearchResult r = splitting_search(job, 2);
    CHECK(r.kind == SearchResult::Exhausted);
}

TEST_CASE("splitting_search: obstruction above a solved prefix") {
    // Order 2 is absorbed by x3 -> x3 - t1*t2; the order-4 component x2^2
    // lies outside the span of x1^2 = dg/dx3 and obstructs.
    ModelSpec spec = weighted(2, {1, 1, 2}, {1, 1, 0, 0});
    VarietyJob job = hypersurface(spec, "x1^2*x3 + x1^2*t1*t2 + x2^2*t1*t2*t3*t4");
    SearchResult r = splitting_search(job, 4);
    REQUIRE(r.kind == SearchResult::Obstructed);
    REQUIRE(r.report.has_value());
    CHECK(r.report->failed_order == 4);
    REQUIRE(r.report->solved_prefix.has_value());
    Poly pushed = apply(*r.report->solved_prefix, job.generators()[0]);
    CHECK(pushed.min_positive_odd_len() >= 4);
    CHECK_FALSE(r.report->residuals[0].is_zero());
}

TEST_CASE("splitting_search stacks generators over shared unknowns") {
    ModelSpec spec = weighted(2, {1, 1, 2}, {1, 1});
    int ev = 3, ov = 2;
    // consistent family: both generators agree on x3 -> x3 - t1*t2
    Poly f1 = parse_polynomial("x1^2*x3 + x1^2*t1*t2", ev, ov);
    Poly f2 = parse_polynomial("x3^2 + 2*x3*t1*t2", ev, ov);
    VarietyJob consistent(spec, {f1, f2});
    SearchResult ok = splitting_search(consistent, 2);
    REQUIRE(ok.kind == SearchResult::HomogeneouslySplit);
    for (const Poly& f : consistent.generators())
        CHECK(apply(*ok.witness, f).max_odd_len() == 0);

    // inconsistent family: f1 needs u = -1 on x3, f3 needs u = +1
    Poly f3 = parse_polynomial("x3^2 - 2*x3*t1*t2", ev, ov);
    VarietyJob clash(spec, {f1, f3});
    SearchResult bad = splitting_search(clash, 2);
    REQUIRE(bad.kind == SearchResult::Obstructed);
    CHECK(bad.report->failed_order == 2);
    // each generator alone is normalizable
    CHECK(splitting_search(VarietyJob(spec, {f3}), 2).kind == SearchResult::HomogeneouslySplit);
}

TEST_CASE("verdict: multi-generator job uses the family rules only") {
    ModelSpec p22 = ModelSpec::unweighted(2, 2);
    std::vector<Poly> gens = {parse_polynomial("x1*x2", 3, 2),
                              parse_polynomial("x3^2 + t1*t2", 3, 2)};
    Verdict v = analyze(VarietyJob(p22, gens));
    CHECK(v.outcome == Outcome::HomogeneouslyNonSplit);
    CHECK(has_cite(v, "Thm 4.12"));
    CHECK_FALSE(has_cite(v, "Thm 7.2"));
}

TEST_CASE("randomized non-eq43 jobs: any witness found is a true splitting") {
    gen::Rng rng(1212);
    int found = 0, produced = 0;
    while (produced < 60) {
        // weighted even parts break eq43, so the search may go either way
        std::vector<long long> a = {1, 1, static_cast<long long>(rng.pick(2, 3))};
        int n = static_cast<int>(rng.pick(2, 3));
        std::vector<long long> b(n);
        for (auto& w : b) w = rng.pick(1, 2);
        WeightSystem w(a, b);
        ModelSpec spec(2, n, w);
        long long d = rng.pick(2, 5);
        Poly f = rng.homogeneous(w, d, 4, /*even_parity_only=*/true);
        if (f.is_zero() || f.coefficient_of_theta(0).is_zero()) continue;
        if (f.min_positive_odd_len() == 0) continue; // needs a theta component
        VarietyJob job(spec, {f});
        ++produced;
        SearchResult r = splitting_search(job, n);
        if (r.kind != SearchResult::HomogeneouslySplit) continue;
        ++found;
        Poly pushed = apply(*r.witness, f);
        CHECK(pushed.max_odd_len() == 0);
        CHECK(check_weight_preserving(spec, *r.witness));
    }
    // the corpus is tuned so both branches actually occur
    CHECK(found > 0);
}

TEST_CASE("randomized eq43 corpus: search always obstructs") {
    gen::Rng rng(909);
    int produced = 0;
    while (produced < 40) {
        int m = static_cast<int>(rng.pick(1, 3));
        int n = static_cast<int>(rng.pick(2, 4));
        long long amax = rng.pick(1, 2);
        std::vector<long long> a(m + 1);
        for (auto& w : a) w = rng.pick(1, amax);
        std::vector<long long> b(n);
        for (auto& w : b) w = rng.pick(amax, amax + 1);
        WeightSystem w(a, b);
        ModelSpec spec(m, n, w);
        // choose an odd pair and a compatible degree
        int i = static_cast<int>(rng.pick(0, n - 2));
        int j = static_cast<int>(rng.pick(i + 1, n - 1));
        long long b_pair = b[i] + b[j];
        long long d = b_pair + rng.pick(0, 2);
        auto g_basis = w.graded_piece_basis(d);
        auto h_basis = w.graded_piece_basis(d - b_pair);
        if (g_basis.empty() || h_basis.empty()) continue;
        Poly f(m + 1, n);
        f.add_term(g_basis[static_cast<size_t>(rng.pick(0, static_cast<long long>(g_basis.size()) - 1))],
                   rng.nonzero_rational());
        Monomial h = h_basis[static_cast<size_t>(rng.pick(0, static_cast<long long>(h_basis.size()) - 1))];
        h.odd = (uint64_t(1) << i) | (uint64_t(1) << j);
        f.add_term(h, rng.nonzero_rational());
        if (f.coefficient_of_theta(0).is_zero()) continue;
        VarietyJob job(spec, {f});
        SearchResult r = splitting_search(job, n);
        CHECK(r.kind == SearchResult::Obstructed);
        ++produced;
    }
}

TEST_CASE("homogeneous order is stable under admissible substitutions (eq43)") {
    // On positive eq43 models the even images of any admissible automorphism
    // are rigid and odd replacements only raise theta length, so the order of
    // the generator family is unchanged.
    ModelSpec spec = weighted(2, {1, 1, 1}, {3, 1, 1, 1});
    int ev = 3, ov = 4;
    gen::Rng rng(1010);
    for (int trial = 0; trial < 20; ++trial) {
        // theta_1 -> theta_1 + c theta_2 theta_3 theta_4 is the only freedom
        std::vector<Poly> even_images, odd_images;
        for (int mu = 1; mu <= ev; ++mu) even_images.push_back(Poly::variable_even(ev, ov, mu));
        Poly t1 = Poly::variable_odd(ev, ov, 1);
        Poly word(ev, ov);
        Monomial mono;
        mono.even.assign(ev, 0);
        mono.odd = 0b1110;
        word.add_term(mono, rng.nonzero_rational());
        odd_images.push_back(t1 + word);
        for (int j = 2; j <= ov; ++j) odd_images.push_back(Poly::variable_odd(ev, ov, j));
        Subst s(even_images, odd_images);
        REQUIRE(check_weight_preserving(spec, s));

        long long d = rng.pick(4, 6);
        Poly f = rng.homogeneous(spec.weights, d, 4, /*even_parity_only=*/true);
        if (f.is_zero() || f.parity() != Parity::Even) continue;
        VarietyJob job(spec, {f});
        auto before = homogeneous_order(job);
        Poly pushed = apply(s, f);
        if (pushed.is_zero()) continue;
        VarietyJob pushed_job(spec, {pushed});
        CHECK(homogeneous_order(pushed_job) == before);
    }
}

TEST_CASE("verdict: flagship quadric is NonSplit with the right citations") {
    Verdict v = analyze(hypersurface(kQuadricSpec, kQuadricText));
    CHECK(v.outcome == Outcome::NonSplit);
    CHECK(has_cite(v, "Thm 7.2"));
    CHECK(has_cite(v, "Thm 4.12"));
    CHECK(has_cite(v, "Thm 6.8"));
    CHECK(v.obstruction.has_value());
    CHECK_FALSE(v.witness.has_value());
}

TEST_CASE("verdict: Sethi mirror instances are NonSplit") {
    for (int big_n : {2, 3}) {
        ModelSpec spec = sethi_spec(big_n);
        Verdict v = analyze(hypersurface(spec, sethi_text(big_n)));
        CAPTURE(big_n);
        CHECK(v.outcome == Outcome::NonSplit);
        CHECK(has_cite(v, "Thm 7.2"));
    }
}

TEST_CASE("verdict: Aganagic-Vafa product quadric is NonSplit via the Segre route") {
    ModelSpec f1 = ModelSpec::unweighted(3, 3);
    ModelSpec f2 = ModelSpec::unweighted(3, 3);
    std::string text = "x1*x5 + x2*x6 + x3*x7 + x4*x8 + t1*t4 + t2*t5 + t3*t6";
    VarietyJob job(f1, f2, {parse_polynomial(text, 8, 6)});
    Verdict v = analyze(job);
    CHECK(v.outcome == Outcome::NonSplit);
    CHECK(has_cite(v, "Cor 7.6"));
    CHECK(has_cite(v, "Thm 4.12"));
}

TEST_CASE("verdict: weighted model with a witness is HomogeneouslySplit") {
    ModelSpec p112 = weighted(2, {1, 1, 2}, {1, 1});
    Verdict v = analyze(hypersurface(p112, "x1^2*x3 + x1^2*t1*t2"));
    CHECK(v.outcome == Outcome::HomogeneouslySplit);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->even_image(3) == parse_polynomial("x3 - t1*t2", 3, 2));
}

TEST_CASE("verdict: reduced generators give Split") {
    Verdict v = analyze(hypersurface(kQuadricSpec, "x1^2 + x2^2 + x3^2"));
    CHECK(v.outcome == Outcome::Split);
    CHECK(has_cite(v, "Lemma 4.8"));
}

TEST_CASE("verdict: unit-even non-positive model with a witness is Split") {
    ModelSpec spec = weighted(2, {1, 1, 1}, {1, -1});
    Verdict v = analyze(hypersurface(spec, "x1^2 + x2^2 + x3^2 + x1^2*t1*t2"));
    CHECK(v.outcome == Outcome::Split);
    REQUIRE(v.witness.has_value());
    CHECK(apply(*v.witness, parse_polynomial("x1^2 + x2^2 + x3^2 + x1^2*t1*t2", 3, 2))
              .max_odd_len() == 0);
}

TEST_CASE("verdict: obstructed non-positive model stays Inconclusive") {
    ModelSpec spec = weighted(2, {1, 1, 2}, {0, 0});
    Verdict v = analyze(hypersurface(spec, "x1^2 + x2^2*t1*t2"));
    CHECK(v.outcome == Outcome::Inconclusive);
    CHECK(v.obstruction.has_value());
}

TEST_CASE("verdict: higher-order obstruction is evidence, not a verdict") {
    ModelSpec spec = ModelSpec::unweighted(2, 4);
    Verdict v = analyze(hypersurface(spec, "x1^4 + x2^4 + x3^4 + t1*t2*t3*t4"));
    // order 4 with a nonvanishing receiving space: Thm 4.12 still applies, the
    // degree-2 non-splitting theorem does not
    CHECK(v.outcome == Outcome::HomogeneouslyNonSplit);
    CHECK(has_cite(v, "Thm 6.8"));
    CHECK(has_cite(v, "Thm 4.12"));
    CHECK_FALSE(has_cite(v, "Thm 7.2"));
}
