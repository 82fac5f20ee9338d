#include "idealgb/linalg.hpp"

#include <stdexcept>

namespace idealgb {

int rank(Matrix m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t pivot = r;
        while (pivot < rows && m[pivot][col].is_zero()) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[r], m[pivot]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m[i][col].is_zero()) continue;
            Rational f = m[i][col] / m[r][col];
            for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return static_cast<int>(r);
}

bool in_span(const Matrix& rows, const std::vector<Rational>& v) {
    Matrix stacked = rows;
    stacked.push_back(v);
    Matrix base = rows;
    return rank(std::move(base)) == rank(std::move(stacked));
}

bool nonsingular(Matrix m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) return false;
    return rank(std::move(m)) == static_cast<int>(n);
}

std::optional<std::vector<Rational>> solve(Matrix a, std::vector<Rational> b) {
    const std::size_t n = a.size();
    if (b.size() != n) throw std::invalid_argument("solve: size mismatch");
    for (const auto& row : a)
        if (row.size() != n) throw std::invalid_argument("solve: not square");

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col].is_zero()) ++pivot;
        if (pivot == n) return std::nullopt;
        std::swap(a[col], a[pivot]);
        std::swap(b[col], b[pivot]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col].is_zero()) continue;
            Rational f = a[i][col] / a[col][col];
            for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
            b[i] -= f * b[col];
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

Matrix coefficient_matrix(std::span<const Polynomial> ps) {
    std::set<ExponentVector> columns = support_union(ps);
    Matrix m;
    m.reserve(ps.size());
    for (const Polynomial& p : ps) {
        std::vector<Rational> row;
        row.reserve(columns.size());
        for (const ExponentVector& alpha : columns)
            row.push_back(p.coefficient(alpha));
        m.push_back(std::move(row));
    }
    return m;
}

}  // namespace idealgb
