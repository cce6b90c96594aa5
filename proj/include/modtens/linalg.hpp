#pragma once

#include <optional>
#include <vector>

#include "modtens/rational.hpp"

namespace modtens {

using Vec = std::vector<Rational>;

/// Dense matrix of exact rationals, row major.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

    static Matrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Rational& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

    Vec apply(const Vec& x) const;          // A*x
    Matrix multiply(const Matrix& other) const;

    void set_col(int c, const Vec& v);
    Vec col(int c) const;

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

private:
    int rows_ = 0, cols_ = 0;
    Vec a_;
};

/// Exact solve of A*x = b. Pivoting is deterministic: leftmost nonzero
/// column, topmost row. When the solution space is positive-dimensional the
/// free variables are set to zero, so output is reproducible across runs.
/// Returns nullopt when the system is inconsistent.
/// Throws std::invalid_argument on a row-count mismatch.
std::optional<Vec> solve(const Matrix& A, const Vec& b);

/// True iff A is square and has full rank (exact Gaussian elimination).
bool is_invertible(const Matrix& A);

int rank(const Matrix& A);

} // namespace modtens
