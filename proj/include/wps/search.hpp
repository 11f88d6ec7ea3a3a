#pragma once
#include <optional>
#include <vector>

#include "wps/job.hpp"
#include "wps/subst.hpp"

namespace wps {

// Evidence that the order-by-order elimination stalled: the order whose graded
// linear system is unsolvable, the nonzero residual theta-polynomials (one per
// generator, possibly zero for some), and the substitution normalizing all
// lower orders.
struct ObstructionReport {
    int failed_order = 0;
    std::vector<Poly> residuals;
    std::optional<Subst> solved_prefix;
};

struct SearchResult {
    enum Kind { HomogeneouslySplit, Obstructed, Exhausted } kind = Exhausted;
    std::optional<Subst> witness;            // HomogeneouslySplit
    std::optional<ObstructionReport> report; // Obstructed
    int orders_processed = 0;
};

// Constructive homogeneous-splitting search for single-model jobs. For
// ascending theta order t, assembles the weight-constrained coefficient spaces
// C[x](a^sigma - b_I), demands that the order-t components of F after the
// candidate substitution vanish, and solves the exact linear system (stacked
// over generators). Success through every order returns the composed witness;
// an unsolvable system returns the obstruction; hitting max_order first
// returns Exhausted.
SearchResult splitting_search(const VarietyJob& job, int max_order);

} // namespace wps
