#include "wps/jacobian_solve.hpp"

#include <map>

#include "wps/errors.hpp"
#include "wps/linalg.hpp"

namespace wps {

JacobianSolve solve_in_jacobian_pieces(const std::vector<Poly>& reduced_parts,
                                       const std::vector<Poly>& targets, const WeightSystem& w,
                                       long long b_i) {
    WPS_ASSERT(!reduced_parts.empty() && reduced_parts.size() == targets.size(),
               "jacobian solve: generator/target count mismatch");
    int ev = reduced_parts.front().even_vars();
    int ov = reduced_parts.front().odd_vars();

    // Unknown columns: (sigma, basis monomial of C[x](a^sigma - b_I)).
    struct Column {
        int sigma;
        Monomial basis;
        std::vector<Poly> contribution; // per alpha: x^basis * dg_alpha/dx^sigma
    };
    std::vector<Column> columns;
    for (int sigma = 1; sigma <= ev; ++sigma) {
        long long deg = w.a()[sigma - 1] - b_i;
        if (deg < 0) continue;
        for (const Monomial& basis : w.graded_piece_basis(deg)) {
            Column col;
            col.sigma = sigma;
            col.basis = basis;
            for (const Poly& g : reduced_parts) {
                Poly mono(ev, ov);
                mono.add_term(basis, Rational(1));
                col.contribution.push_back(mono * g.partial_even(sigma));
            }
            columns.push_back(std::move(col));
        }
    }

    // Row index: (alpha, monomial), in canonical order.
    struct RowKeyLess {
        bool operator()(const std::pair<size_t, Monomial>& a,
                        const std::pair<size_t, Monomial>& b) const {
            if (a.first != b.first) return a.first < b.first;
            return monomial_less(a.second, b.second);
        }
    };
    std::map<std::pair<size_t, Monomial>, size_t, RowKeyLess> row_of;
    auto intern_row = [&](size_t alpha, const Monomial& m) {
        return row_of.emplace(std::make_pair(alpha, m), row_of.size()).first->second;
    };
    for (size_t alpha = 0; alpha < targets.size(); ++alpha) {
        for (const auto& [m, c] : targets[alpha].terms()) {
            (void)c;
            intern_row(alpha, m);
        }
    }
    for (const Column& col : columns) {
        for (size_t alpha = 0; alpha < col.contribution.size(); ++alpha) {
            for (const auto& [m, c] : col.contribution[alpha].terms()) {
                (void)c;
                intern_row(alpha, m);
            }
        }
    }

    // Renumber rows in canonical (alpha, monomial) order.
    {
        size_t i = 0;
        for (auto& [key, idx] : row_of) {
            (void)key;
            idx = i++;
        }
    }
    Matrix a(row_of.size(), std::vector<Rational>(columns.size(), Rational(0)));
    std::vector<Rational> rhs(row_of.size(), Rational(0));
    for (size_t c = 0; c < columns.size(); ++c) {
        for (size_t alpha = 0; alpha < targets.size(); ++alpha) {
            for (const auto& [m, coeff] : columns[c].contribution[alpha].terms()) {
                a[row_of.at({alpha, m})][c] = coeff;
            }
        }
    }
    for (size_t alpha = 0; alpha < targets.size(); ++alpha) {
        for (const auto& [m, coeff] : targets[alpha].terms()) {
            rhs[row_of.at({alpha, m})] = coeff;
        }
    }

    SolveOutcome outcome = solve_linear(a, rhs);
    JacobianSolve result;
    result.consistent = outcome.consistent;
    for (size_t c = 0; c < columns.size(); ++c) {
        if (outcome.x[c].is_zero()) continue;
        auto it = result.coefficients.find(columns[c].sigma);
        if (it == result.coefficients.end())
            it = result.coefficients.emplace(columns[c].sigma, Poly(ev, ov)).first;
        it->second.add_term(columns[c].basis, outcome.x[c]);
    }
    for (size_t alpha = 0; alpha < targets.size(); ++alpha) {
        Poly res = targets[alpha];
        for (const auto& [sigma, u] : result.coefficients) {
            res -= u * reduced_parts[alpha].partial_even(sigma);
        }
        result.residuals.push_back(std::move(res));
    }
    return result;
}

} // namespace wps
