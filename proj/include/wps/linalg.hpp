#pragma once
#include <optional>
#include <vector>

#include "wps/rational.hpp"

namespace wps {

// Dense exact matrix, row-major.
using Matrix = std::vector<std::vector<Rational>>;

struct SolveOutcome {
    bool consistent = false;
    // For consistent systems: one solution with free variables set to zero.
    // For inconsistent systems: the best-effort vector solving the rows that
    // did reduce (a witness for residual computation); zero-filled otherwise.
    std::vector<Rational> x;
};

// Gaussian elimination with deterministic pivoting: columns left to right,
// pivot is the first remaining row with a nonzero entry. Exact; no scaling
// heuristics.
SolveOutcome solve_linear(const Matrix& a, const std::vector<Rational>& rhs);

size_t matrix_rank(Matrix a);

} // namespace wps
