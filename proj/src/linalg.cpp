#include "wps/linalg.hpp"

#include "wps/errors.hpp"

namespace wps {

SolveOutcome solve_linear(const Matrix& a, const std::vector<Rational>& rhs) {
    size_t rows = a.size();
    WPS_ASSERT(rhs.size() == rows, "solve_linear: rhs size mismatch");
    size_t cols = rows == 0 ? 0 : a.front().size();
    for (const auto& r : a) WPS_ASSERT(r.size() == cols, "solve_linear: ragged matrix");

    Matrix m = a;
    std::vector<Rational> b = rhs;
    std::vector<std::pair<size_t, size_t>> pivots; // (row, col)
    size_t next_row = 0;
    for (size_t col = 0; col < cols && next_row < rows; ++col) {
        size_t pivot = next_row;
        while (pivot < rows && m[pivot][col].is_zero()) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[next_row]);
        std::swap(b[pivot], b[next_row]);
        Rational inv = m[next_row][col].inverse();
        for (size_t c = col; c < cols; ++c) m[next_row][c] *= inv;
        b[next_row] *= inv;
        for (size_t r = 0; r < rows; ++r) {
            if (r == next_row || m[r][col].is_zero()) continue;
            Rational factor = m[r][col];
            for (size_t c = col; c < cols; ++c) m[r][c] -= factor * m[next_row][c];
            b[r] -= factor * b[next_row];
        }
        pivots.emplace_back(next_row, col);
        ++next_row;
    }

    SolveOutcome out;
    out.consistent = true;
    for (size_t r = next_row; r < rows; ++r) {
        if (!b[r].is_zero()) out.consistent = false;
    }
    out.x.assign(cols, Rational(0));
    for (const auto& [r, c] : pivots) out.x[c] = b[r];
    return out;
}

size_t matrix_rank(Matrix a) {
    size_t rows = a.size();
    size_t cols = rows == 0 ? 0 : a.front().size();
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t pivot = rank;
        while (pivot < rows && a[pivot][col].is_zero()) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[pivot], a[rank]);
        for (size_t r = rank + 1; r < rows; ++r) {
            if (a[r][col].is_zero()) continue;
            Rational factor = a[r][col] / a[rank][col];
            for (size_t c = col; c < cols; ++c) a[r][c] -= factor * a[rank][c];
        }
        ++rank;
    }
    return rank;
}

} // namespace wps
