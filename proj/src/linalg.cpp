#include "iacprob/linalg.hpp"

#include <cstddef>
#include <utility>

namespace iacprob {

namespace {

// Row echelon form in place; returns pivot column per pivot row.
std::vector<size_t> eliminate(RatMatrix& m) {
    std::vector<size_t> pivots;
    if (m.empty()) return pivots;
    size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[r], m[p]);
        for (size_t i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            Rational f = m[i][c] / m[r][c];
            m[i][c] = 0;
            for (size_t j = c + 1; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::optional<RatVector> solve_linear_system(RatMatrix a, RatVector b) {
    size_t rows = a.size();
    size_t cols = rows == 0 ? 0 : a[0].size();
    if (b.size() != rows) return std::nullopt;
    // augment
    for (size_t i = 0; i < rows; ++i) a[i].push_back(b[i]);
    std::vector<size_t> pivots = eliminate(a);
    // inconsistent: pivot in the augmented column
    if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
    if (pivots.size() < cols) return std::nullopt;  // free variables
    // check zero rows below the pivots are consistent
    for (size_t i = pivots.size(); i < rows; ++i)
        if (a[i][cols] != 0) return std::nullopt;
    RatVector x(cols, Rational(0));
    for (size_t k = cols; k-- > 0;) {
        Rational s = a[k][cols];
        for (size_t j = k + 1; j < cols; ++j) s -= a[k][j] * x[j];
        x[k] = s / a[k][k];
    }
    return x;
}

Rational determinant(RatMatrix m) {
    size_t n = m.size();
    for (auto& row : m)
        if (row.size() != n) return 0;
    Rational det = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (size_t i = c + 1; i < n; ++i) {
            if (m[i][c] == 0) continue;
            Rational f = m[i][c] / m[c][c];
            for (size_t j = c + 1; j < n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return det;
}

int matrix_rank(RatMatrix m) {
    return static_cast<int>(eliminate(m).size());
}

int affine_rank(const std::vector<RatVector>& points) {
    if (points.empty()) return -1;
    RatMatrix diffs;
    for (size_t i = 1; i < points.size(); ++i) {
        RatVector d(points[i].size());
        for (size_t j = 0; j < d.size(); ++j) d[j] = points[i][j] - points[0][j];
        diffs.push_back(std::move(d));
    }
    if (diffs.empty()) return 0;
    return matrix_rank(std::move(diffs));
}

}  // namespace iacprob
