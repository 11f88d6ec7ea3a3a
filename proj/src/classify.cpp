#include "wps/classify.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "wps/errors.hpp"
#include "wps/linalg.hpp"
#include "wps/subst.hpp"

namespace wps {

bool is_homogeneously_nonreduced(const VarietyJob& job) {
    for (const Poly& f : job.generators()) {
        for (int k = 1; k <= f.odd_vars(); ++k) {
            if (!f.partial_odd(k).is_zero()) return true;
        }
    }
    return false;
}

std::optional<int> homogeneous_order(const VarietyJob& job) {
    int best = 0;
    for (const Poly& f : job.generators()) {
        int k = f.min_positive_odd_len();
        if (k > 0 && (best == 0 || k < best)) best = k;
    }
    if (best == 0) return std::nullopt;
    WPS_ASSERT(best >= 2, "even generator with a theta component of odd length one");
    return best;
}

QuadricDiagnostics is_quadric(const VarietyJob& job) {
    QuadricDiagnostics diag;
    diag.quadric = true;
    diag.pair_degree_constant = true;
    bool pair_degree_seen = false;
    std::pair<long long, long long> bidegree_expected{0, 0};
    for (size_t idx = 0; idx < job.generators().size(); ++idx) {
        const Poly& f = job.generators()[idx];
        if (f.max_odd_len() > 2) diag.quadric = false;
        for (const auto& [k, comp] : f.theta_components()) {
            if (k != 2) continue;
            for (const auto& [mono, c] : comp.terms()) {
                (void)c;
                diag.any_pairs = true;
                long long pw = job.odd_weight_sum(mono.odd);
                if (!job.is_product()) {
                    if (pw != job.degree(idx)) diag.pair_degree_constant = false;
                } else {
                    // per-factor pair weights must match the bidegree
                    auto bd = job.bidegree(idx);
                    uint64_t first_mask =
                        mono.odd & ((job.first().n == 64) ? ~uint64_t(0)
                                                          : ((uint64_t(1) << job.first().n) - 1));
                    uint64_t second_mask = mono.odd >> job.first().n;
                    long long w1 = job.first().weights.odd_weight_sum(first_mask);
                    long long w2 = job.second().weights.odd_weight_sum(second_mask);
                    if (w1 != bd.first || w2 != bd.second) diag.pair_degree_constant = false;
                }
                if (!pair_degree_seen) {
                    diag.pair_degree = pw;
                    pair_degree_seen = true;
                } else if (diag.pair_degree != pw) {
                    diag.pair_degree_constant = false;
                }
            }
        }
    }
    if (!diag.any_pairs) diag.pair_degree_constant = false;
    std::ostringstream os;
    os << (diag.quadric ? "theta components bounded by length 2" : "theta component of length > 2 present");
    if (diag.any_pairs && diag.pair_degree_constant)
        os << "; occurring odd pairs all have weight " << diag.pair_degree << " = d";
    diag.detail = os.str();
    return diag;
}

namespace {

using RationalRow = std::vector<Rational>;

// g as a quadratic form: symmetric Gram matrix, or nullopt when g is not
// quadratic in the even variables.
std::optional<std::vector<RationalRow>> gram_matrix(const Poly& g) {
    int n = g.even_vars();
    std::vector<RationalRow> gram(n, RationalRow(n, Rational(0)));
    Rational half(BigInt(1), BigInt(2));
    for (const auto& [m, c] : g.terms()) {
        if (m.odd != 0) return std::nullopt;
        int i = -1, j = -1;
        int total = 0;
        for (int v = 0; v < n; ++v) {
            total += m.even[v];
            if (m.even[v] == 1) {
                if (i < 0) i = v;
                else j = v;
            } else if (m.even[v] == 2) {
                i = j = v;
            } else if (m.even[v] != 0) {
                return std::nullopt;
            }
        }
        if (total != 2) return std::nullopt;
        if (i == j) {
            gram[i][i] += c;
        } else {
            gram[i][j] += c * half;
            gram[j][i] += c * half;
        }
    }
    return gram;
}

// Is g of the shape sum_i c_i x_i^d (every monomial a pure d-th power)?
// Returns the per-variable coefficients when so.
std::optional<std::vector<Rational>> diagonal_coefficients(const Poly& g, long long d) {
    std::vector<Rational> coeffs(g.even_vars(), Rational(0));
    for (const auto& [m, c] : g.terms()) {
        if (m.odd != 0) return std::nullopt;
        int nonzero_var = -1;
        for (int v = 0; v < g.even_vars(); ++v) {
            if (m.even[v] == 0) continue;
            if (nonzero_var >= 0 || m.even[v] != d) return std::nullopt;
            nonzero_var = v;
        }
        if (nonzero_var < 0) return std::nullopt;
        coeffs[nonzero_var] = c;
    }
    return coeffs;
}

} // namespace

SmoothnessReport smoothness_check(const Poly& g, const ModelSpec& spec) {
    SmoothnessReport rep;
    if (!spec.unit_even()) {
        rep.detail = "structured smoothness checks require unit even weights";
        return rep;
    }
    if (g.is_zero() || g.max_odd_len() > 0) throw input_error("smoothness_check: nonzero reduced polynomial required");
    DegreeResult deg = g.degree_under(spec.weights.a(), spec.weights.b());
    WPS_ASSERT(deg.kind == DegreeResult::Homogeneous, "smoothness_check: inhomogeneous input");
    long long d = deg.degree;
    if (d == 1) {
        rep.result = Smoothness::Smooth;
        rep.detail = "nonzero linear form";
        return rep;
    }
    if (auto gram = gram_matrix(g)) {
        size_t rank = matrix_rank(*gram);
        if (rank == static_cast<size_t>(g.even_vars())) {
            rep.result = Smoothness::Smooth;
            rep.detail = "quadratic form of full rank " + std::to_string(rank);
        } else {
            rep.result = Smoothness::Singular;
            rep.detail = "quadratic form of rank " + std::to_string(rank) + " < " +
                         std::to_string(g.even_vars());
        }
        return rep;
    }
    if (auto diag = diagonal_coefficients(g, d)) {
        bool all_present = std::all_of(diag->begin(), diag->end(),
                                       [](const Rational& c) { return !c.is_zero(); });
        if (all_present) {
            rep.result = Smoothness::Smooth;
            rep.detail = "diagonal form with all variables present";
        } else {
            rep.result = Smoothness::Singular;
            rep.detail = "diagonal form missing a variable (singular along a coordinate locus)";
        }
        return rep;
    }
    rep.detail = "outside structured classes (linear / quadratic / diagonal)";
    return rep;
}

namespace {

// Test divisibility of g by the linear form sum c_v x_v with leading
// coefficient on variable `lead`: substitute x_lead = -(1/c_lead) * rest and
// check the result is zero.
bool divisible_by_linear(const Poly& g, const std::vector<Rational>& coeffs, int lead) {
    int ev = g.even_vars(), ov = g.odd_vars();
    std::vector<Poly> even_images, odd_images;
    for (int v = 0; v < ev; ++v) {
        if (v != lead) {
            even_images.push_back(Poly::variable_even(ev, ov, v + 1));
            continue;
        }
        Poly img(ev, ov);
        Rational scale = -coeffs[lead].inverse();
        for (int u = 0; u < ev; ++u) {
            if (u == lead || coeffs[u].is_zero()) continue;
            img += Poly::variable_even(ev, ov, u + 1).scaled(coeffs[u] * scale);
        }
        even_images.push_back(std::move(img));
    }
    for (int j = 1; j <= ov; ++j) odd_images.push_back(Poly::variable_odd(ev, ov, j));
    return apply(Subst(std::move(even_images), std::move(odd_images)), g).is_zero();
}

} // namespace

IrreducibilityReport irreducibility_check(const Poly& g, const ModelSpec& spec) {
    IrreducibilityReport rep;
    if (!spec.unit_even()) {
        rep.detail = "structured irreducibility checks require unit even weights";
        return rep;
    }
    if (g.is_zero() || g.max_odd_len() > 0)
        throw input_error("irreducibility_check: nonzero reduced polynomial required");
    DegreeResult deg = g.degree_under(spec.weights.a(), spec.weights.b());
    WPS_ASSERT(deg.kind == DegreeResult::Homogeneous, "irreducibility_check: inhomogeneous input");
    long long d = deg.degree;
    if (d == 1) {
        rep.result = Irreducibility::Irreducible;
        rep.detail = "degree one";
        return rep;
    }
    if (auto gram = gram_matrix(g)) {
        size_t rank = matrix_rank(*gram);
        if (rank >= 3) {
            rep.result = Irreducibility::Irreducible;
            rep.detail = "quadratic form of rank " + std::to_string(rank) + " >= 3";
        } else {
            rep.result = Irreducibility::Reducible;
            rep.detail = "quadratic form of rank " + std::to_string(rank) + " splits over C";
        }
        return rep;
    }
    // Bounded trial division: linear forms supported on at most two variables,
    // leading coefficient 1, companion coefficient in {-2..2}.
    int ev = g.even_vars();
    for (int lead = 0; lead < ev; ++lead) {
        for (int other = -1; other < ev; ++other) {
            if (other == lead) continue;
            for (int c = -2; c <= 2; ++c) {
                if (other >= 0 && c == 0) continue;
                if (other < 0 && c != 0) continue;
                std::vector<Rational> coeffs(ev, Rational(0));
                coeffs[lead] = Rational(1);
                if (other >= 0) coeffs[other] = Rational(c);
                if (divisible_by_linear(g, coeffs, lead)) {
                    std::ostringstream os;
                    os << "divisible by x" << (lead + 1);
                    if (other >= 0) {
                        os << (c < 0 ? " - " : " + ");
                        if (std::abs(c) != 1) os << std::abs(c) << "*";
                        os << "x" << (other + 1);
                    }
                    rep.result = Irreducibility::Reducible;
                    rep.detail = os.str();
                    return rep;
                }
            }
        }
    }
    rep.detail = "no rational linear factor found in the bounded search; class undecided";
    return rep;
}

} // namespace wps
