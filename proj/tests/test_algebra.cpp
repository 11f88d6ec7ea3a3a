#include "doctest.h"
#include "gen.hpp"
#include "wps/cohomology.hpp"
#include "wps/errors.hpp"
#include "wps/linalg.hpp"
#include "wps/parse.hpp"
#include "wps/subst.hpp"

using namespace wps;

namespace {

Poly P(const std::string& text, int ev, int ov) { return parse_polynomial(text, ev, ov); }

} // namespace

TEST_CASE("bigint arithmetic against int64 reference") {
    gen::Rng rng(11);
    for (int i = 0; i < 500; ++i) {
        long long a = rng.pick(-1000000, 1000000);
        long long b = rng.pick(-1000000, 1000000);
        CHECK((BigInt(a) + BigInt(b)).to_ll() == a + b);
        CHECK((BigInt(a) - BigInt(b)).to_ll() == a - b);
        CHECK((BigInt(a) * BigInt(b)).to_ll() == a * b);
        if (b != 0) {
            CHECK((BigInt(a) / BigInt(b)).to_ll() == a / b);
            CHECK((BigInt(a) % BigInt(b)).to_ll() == a % b);
        }
        CHECK((BigInt(a) < BigInt(b)) == (a < b));
    }
    // multi-limb round trip and string io
    BigInt big = BigInt::from_string("123456789012345678901234567890");
    CHECK(big.to_string() == "123456789012345678901234567890");
    CHECK((big * BigInt(-1)).to_string() == "-123456789012345678901234567890");
    CHECK((big / BigInt::from_string("12345678901234567890")).to_string() == "10000000000");
    CHECK(BigInt::gcd(BigInt(48), BigInt(-18)) == BigInt(6));
}

TEST_CASE("rational normalization") {
    CHECK(Rational(BigInt(2), BigInt(4)).to_string() == "1/2");
    CHECK(Rational(BigInt(-2), BigInt(-4)).to_string() == "1/2");
    CHECK(Rational(BigInt(2), BigInt(-4)).to_string() == "-1/2");
    CHECK(Rational(BigInt(0), BigInt(-7)).to_string() == "0");
    CHECK(Rational::from_string("6/4").to_string() == "3/2");
    CHECK((Rational(1) / Rational(3) + Rational(2) / Rational(3)) == Rational(1));
}

TEST_CASE("add: cancellation, identity, plain sums") {
    Poly a = P("x1^2 + t1*t2", 2, 2);
    Poly b = P("-t1*t2", 2, 2);
    CHECK((a + b) == P("x1^2", 2, 2));
    Poly zero(2, 2);
    CHECK((a + zero) == a);
    CHECK((P("x1 + t1", 1, 1) + P("x1 - t1", 1, 1)) == P("2*x1", 1, 1));
}

TEST_CASE("mul: sign rule, nilpotence, cross cancellation") {
    CHECK(P("t2*t1", 1, 2) == P("-t1*t2", 1, 2));
    CHECK(P("t2*t1", 1, 2).to_string() == "-t1*t2");
    CHECK((P("t1", 1, 2) * P("t1", 1, 2)).is_zero());
    Poly f = P("x1 + t1*t2", 1, 2);
    Poly g = P("x1 - t1*t2", 1, 2);
    CHECK((f * g) == P("x1^2", 1, 2));
}

TEST_CASE("odd and even partial derivatives") {
    CHECK(P("t1*t2", 1, 2).partial_odd(2) == P("-t1", 1, 2));
    CHECK(P("t1*t2", 1, 2).partial_odd(1) == P("t2", 1, 2));
    CHECK(P("x1^2*x2 + x2*t1*t2", 2, 2).partial_even(2) == P("x1^2 + t1*t2", 2, 2));
    CHECK_THROWS_AS(P("t1", 1, 1).partial_odd(2), input_error);
}

TEST_CASE("weighted_degree: worked examples") {
    WeightSystem w111_11({1, 1, 1}, {1, 1});
    Poly quadric = P("x1^2 + x2^2 + x3^2 + t1*t2", 3, 2);
    auto d = quadric.weighted_degree(w111_11);
    CHECK(d.is_homogeneous_of(2));

    WeightSystem w_cubic({1, 1}, {1, 2});
    auto d2 = P("x1^3 + t1*t2", 2, 2).weighted_degree(w_cubic);
    CHECK(d2.is_homogeneous_of(3));

    WeightSystem w11({1, 1}, {1, 1});
    CHECK(P("x1 + t1*t2", 2, 2).weighted_degree(w11).kind == DegreeResult::Inhomogeneous);
    CHECK(Poly(2, 2).weighted_degree(w11).kind == DegreeResult::Zero);
}

TEST_CASE("theta_components decomposition") {
    Poly f = P("x1^2 + x2*t1*t2", 2, 2);
    auto comps = f.theta_components();
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].first == 0);
    CHECK(comps[0].second == P("x1^2", 2, 2));
    CHECK(comps[1].first == 2);
    CHECK(comps[1].second == P("x2*t1*t2", 2, 2));

    Poly g = P("t1*t2*t3*t4", 1, 4);
    auto gc = g.theta_components();
    REQUIRE(gc.size() == 1);
    CHECK(gc[0].first == 4);

    CHECK(Poly(2, 2).theta_components().empty());
}

TEST_CASE("apply: worked examples") {
    // y -> y - t1*t2 on P(1,1,2|1,1) style ring, applied to x1^2*y + x1^2*t1*t2
    int ev = 3, ov = 2;
    std::vector<Poly> even_images = {Poly::variable_even(ev, ov, 1), Poly::variable_even(ev, ov, 2),
                                     P("x3 - t1*t2", ev, ov)};
    std::vector<Poly> odd_images = {Poly::variable_odd(ev, ov, 1), Poly::variable_odd(ev, ov, 2)};
    Subst s(even_images, odd_images);
    CHECK(apply(s, P("x1^2*x3 + x1^2*t1*t2", ev, ov)) == P("x1^2*x3", ev, ov));

    Subst id = Subst::identity(ev, ov);
    gen::Rng rng(7);
    for (int i = 0; i < 50; ++i) {
        Poly f = rng.poly(ev, ov);
        CHECK(apply(id, f) == f);
    }

    std::vector<Poly> swap_odd = {Poly::variable_odd(1, 2, 2), Poly::variable_odd(1, 2, 1)};
    Subst swap_sub({Poly::variable_even(1, 2, 1)}, swap_odd);
    CHECK(apply(swap_sub, P("t1*t2", 1, 2)) == P("-t1*t2", 1, 2));
}

TEST_CASE("graded_piece_basis: worked examples and binomial cardinality") {
    WeightSystem w11({1, 1}, {});
    auto basis = w11.graded_piece_basis(2);
    CHECK(basis.size() == 3); // x1^2, x1x2, x2^2

    WeightSystem w112({1, 1, 2}, {});
    CHECK(w112.graded_piece_basis(2).size() == 4); // x1^2, x1x2, x2^2, x3

    CHECK(w112.graded_piece_basis(-1).empty());

    for (int m = 0; m <= 3; ++m) {
        WeightSystem w(std::vector<long long>(m + 1, 1), {});
        for (long long d = 0; d <= 6; ++d) {
            CHECK(w.graded_piece_dim(d) == binom(m + d, m));
        }
    }
}

TEST_CASE("property: mul is associative and supercommutative") {
    gen::Rng rng(101);
    for (int i = 0; i < 200; ++i) {
        Poly f = rng.poly(2, 3, 3, 2);
        Poly g = rng.poly(2, 3, 3, 2);
        Poly h = rng.poly(2, 3, 2, 2);
        CHECK(((f * g) * h) == (f * (g * h)));
    }
    for (int i = 0; i < 200; ++i) {
        bool fp = rng.pick(0, 1) == 1;
        bool gp = rng.pick(0, 1) == 1;
        Poly f = rng.parity_poly(2, 3, fp);
        Poly g = rng.parity_poly(2, 3, gp);
        Poly fg = f * g;
        Poly gf = g * f;
        if (fp && gp) CHECK(fg == -gf);
        else CHECK(fg == gf);
    }
}

TEST_CASE("property: left odd derivation Leibniz rule") {
    gen::Rng rng(202);
    for (int i = 0; i < 200; ++i) {
        bool fp = rng.pick(0, 1) == 1;
        Poly f = rng.parity_poly(2, 3, fp);
        Poly g = rng.poly(2, 3, 3, 2);
        int idx = static_cast<int>(rng.pick(1, 3));
        Poly lhs = (f * g).partial_odd(idx);
        Poly rhs = f.partial_odd(idx) * g + (fp ? -(f * g.partial_odd(idx)) : f * g.partial_odd(idx));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("property: weighted degree is additive under mul") {
    gen::Rng rng(303);
    WeightSystem w({1, 1, 2}, {1, 2, 1});
    for (int i = 0; i < 200; ++i) {
        long long d1 = rng.pick(0, 4), d2 = rng.pick(0, 4);
        Poly f = rng.homogeneous(w, d1);
        Poly g = rng.homogeneous(w, d2);
        if (f.is_zero() || g.is_zero()) continue;
        Poly fg = f * g;
        if (fg.is_zero()) continue;
        CHECK(fg.weighted_degree(w).is_homogeneous_of(d1 + d2));
    }
}

TEST_CASE("property: theta components reassemble with pure lengths") {
    gen::Rng rng(404);
    for (int i = 0; i < 100; ++i) {
        Poly f = rng.poly(2, 4, 6, 2);
        Poly sum(2, 4);
        for (const auto& [k, comp] : f.theta_components()) {
            CHECK(comp.min_positive_odd_len() == (k == 0 ? 0 : k));
            CHECK(comp.max_odd_len() == k);
            sum += comp;
        }
        CHECK(sum == f);
    }
}

TEST_CASE("property: apply respects products") {
    gen::Rng rng(505);
    int ev = 2, ov = 2;
    for (int i = 0; i < 100; ++i) {
        std::vector<Poly> even_images, odd_images;
        for (int mu = 0; mu < ev; ++mu) even_images.push_back(rng.parity_poly(ev, ov, false, 2));
        for (int j = 0; j < ov; ++j) odd_images.push_back(rng.parity_poly(ev, ov, true, 2));
        Subst s(even_images, odd_images);
        Poly f = rng.poly(ev, ov, 3, 2);
        Poly g = rng.poly(ev, ov, 3, 2);
        CHECK(apply(s, f * g) == apply(s, f) * apply(s, g));
    }
}

TEST_CASE("property: exact linear solver against verification and rank") {
    gen::Rng rng(707);
    for (int trial = 0; trial < 200; ++trial) {
        size_t rows = static_cast<size_t>(rng.pick(1, 5));
        size_t cols = static_cast<size_t>(rng.pick(1, 5));
        Matrix a(rows, std::vector<Rational>(cols));
        for (auto& row : a)
            for (auto& e : row) e = rng.rational();
        std::vector<Rational> b(rows);
        for (auto& e : b) e = rng.rational();
        SolveOutcome out = solve_linear(a, b);
        Matrix augmented = a;
        for (size_t r = 0; r < rows; ++r) augmented[r].push_back(b[r]);
        bool rank_consistent = matrix_rank(augmented) == matrix_rank(a);
        CHECK(out.consistent == rank_consistent);
        if (out.consistent) {
            for (size_t r = 0; r < rows; ++r) {
                Rational acc(0);
                for (size_t c = 0; c < cols; ++c) acc += a[r][c] * out.x[c];
                CHECK(acc == b[r]);
            }
        }
    }
}

TEST_CASE("canonical rendering") {
    CHECK(P("x1^2 + x2*t1*t2 - 1/2*t1*t2", 2, 2).to_string() == "x1^2 + x2*t1*t2 - 1/2*t1*t2");
    CHECK(Poly(2, 2).to_string() == "0");
    CHECK(P("1 + x1", 2, 0).to_string() == "x1 + 1");
    CHECK(P("-t1*t2", 1, 2).to_string() == "-t1*t2");
}
