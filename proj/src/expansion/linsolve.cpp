#include "macjt/expansion/linsolve.hpp"

#include "macjt/error.hpp"

namespace macjt::expansion {

namespace {

std::size_t weight(const QTRational &x)
{
    std::size_t w = x.numerator().primitive().size() + x.den_factors().size() * 2;
    return x.is_constant() ? 0 : w;
}

} // namespace

std::vector<QTRational> solve_exact(std::vector<std::vector<QTRational>> A, std::vector<QTRational> b)
{
    const std::size_t rows = A.size();
    const std::size_t cols = rows ? A[0].size() : 0;
    if (b.size() != rows) throw MathError(ErrorCode::SingularSystem, "right-hand side has the wrong size");
    std::vector<std::size_t> pivot_row(cols);
    std::vector<bool> used(rows, false);
    for (std::size_t c = 0; c < cols; ++c) {
        std::size_t best = rows;
        std::size_t best_w = 0;
        for (std::size_t r = 0; r < rows; ++r) {
            if (used[r] || A[r][c].is_zero()) continue;
            const std::size_t w = weight(A[r][c]);
            if (best == rows || w < best_w) {
                best = r;
                best_w = w;
            }
        }
        if (best == rows) throw MathError(ErrorCode::SingularSystem, "column " + std::to_string(c) + " has no pivot");
        used[best] = true;
        pivot_row[c] = best;
        const QTRational inv = A[best][c].inverse();
        for (std::size_t k = c; k < cols; ++k) A[best][k] *= inv;
        b[best] *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == best || A[r][c].is_zero()) continue;
            const QTRational f = A[r][c];
            for (std::size_t k = c; k < cols; ++k)
                if (!A[best][k].is_zero()) A[r][k] -= f * A[best][k];
            b[r] -= f * b[best];
        }
    }
    for (std::size_t r = 0; r < rows; ++r)
        if (!used[r] && !b[r].is_zero()) throw MathError(ErrorCode::SingularSystem, "inconsistent linear system");
    std::vector<QTRational> x(cols);
    for (std::size_t c = 0; c < cols; ++c) x[c] = b[pivot_row[c]];
    return x;
}

} // namespace macjt::expansion
