#include "wps/search.hpp"

#include <set>

#include "wps/errors.hpp"
#include "wps/jacobian_solve.hpp"

namespace wps {

SearchResult splitting_search(const VarietyJob& job, int max_order) {
    if (job.is_product())
        throw input_error("splitting_search handles single-model jobs only");
    const ModelSpec& spec = job.spec();
    const WeightSystem& w = spec.weights;
    int ev = spec.m + 1, ov = spec.n;

    std::vector<Poly> current = job.generators();
    std::vector<Poly> reduced_parts;
    reduced_parts.reserve(current.size());
    for (const Poly& f : current) reduced_parts.push_back(f.coefficient_of_theta(0));

    Subst witness = Subst::identity(ev, ov);
    SearchResult result;

    for (;;) {
        int order = 0;
        for (const Poly& f : current) {
            int k = f.min_positive_odd_len();
            if (k > 0 && (order == 0 || k < order)) order = k;
        }
        if (order == 0) {
            result.kind = SearchResult::HomogeneouslySplit;
            result.witness = std::move(witness);
            return result;
        }
        if (order > max_order) {
            result.kind = SearchResult::Exhausted;
            return result;
        }

        // Index words of the current minimal order, across all generators.
        std::set<uint64_t> masks;
        for (const Poly& f : current) {
            for (const auto& [mono, c] : f.terms()) {
                (void)c;
                if (mono.odd_len() == order) masks.insert(mono.odd);
            }
        }

        // Per index word I: demand c_I + sum_sigma u_sigma dg/dx^sigma = 0 with
        // deg u_sigma = a^sigma - b_I, unknowns shared across generators.
        std::vector<std::pair<uint64_t, std::map<int, Poly>>> step_solutions;
        std::vector<Poly> residuals(current.size(), Poly(ev, ov));
        bool obstructed = false;
        for (uint64_t mask : masks) {
            long long b_i = w.odd_weight_sum(mask);
            std::vector<Poly> targets;
            targets.reserve(current.size());
            for (const Poly& f : current) targets.push_back(-f.coefficient_of_theta(mask));
            JacobianSolve solve = solve_in_jacobian_pieces(reduced_parts, targets, w, b_i);
            if (solve.consistent) {
                step_solutions.emplace_back(mask, std::move(solve.coefficients));
            } else {
                obstructed = true;
                // residual = c_I - best-effort Jacobian combination, as a theta term
                for (size_t alpha = 0; alpha < current.size(); ++alpha) {
                    Poly theta_word(ev, ov);
                    Monomial mono;
                    mono.even.assign(ev, 0);
                    mono.odd = mask;
                    theta_word.add_term(mono, Rational(1));
                    residuals[alpha] += (-solve.residuals[alpha]) * theta_word;
                }
            }
        }
        if (obstructed) {
            ObstructionReport report;
            report.failed_order = order;
            report.residuals = std::move(residuals);
            report.solved_prefix = std::move(witness);
            result.kind = SearchResult::Obstructed;
            result.report = std::move(report);
            return result;
        }

        // Build the order-t substitution and push it through.
        std::vector<Poly> even_images, odd_images;
        for (int sigma = 1; sigma <= ev; ++sigma) {
            Poly img = Poly::variable_even(ev, ov, sigma);
            for (const auto& [mask, coeffs] : step_solutions) {
                auto it = coeffs.find(sigma);
                if (it == coeffs.end()) continue;
                Poly theta_word(ev, ov);
                Monomial mono;
                mono.even.assign(ev, 0);
                mono.odd = mask;
                theta_word.add_term(mono, Rational(1));
                img += it->second * theta_word;
            }
            even_images.push_back(std::move(img));
        }
        for (int j = 1; j <= ov; ++j) odd_images.push_back(Poly::variable_odd(ev, ov, j));
        Subst step(std::move(even_images), std::move(odd_images));

        for (Poly& f : current) f = apply(step, f);
        witness = compose_then(witness, step);
        ++result.orders_processed;
    }
}

} // namespace wps
