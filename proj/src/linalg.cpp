#include "modtens/linalg.hpp"

#include <stdexcept>

namespace modtens {

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

Vec Matrix::apply(const Vec& x) const {
    if (static_cast<int>(x.size()) != cols_)
        throw std::invalid_argument("Matrix::apply: dimension mismatch");
    Vec out(rows_);
    for (int r = 0; r < rows_; ++r) {
        Rational acc;
        for (int c = 0; c < cols_; ++c) acc += at(r, c) * x[c];
        out[r] = acc;
    }
    return out;
}

Matrix Matrix::multiply(const Matrix& other) const {
    if (cols_ != other.rows_)
        throw std::invalid_argument("Matrix::multiply: dimension mismatch");
    Matrix out(rows_, other.cols_);
    for (int r = 0; r < rows_; ++r)
        for (int k = 0; k < cols_; ++k) {
            if (at(r, k).is_zero()) continue;
            for (int c = 0; c < other.cols_; ++c)
                out.at(r, c) += at(r, k) * other.at(k, c);
        }
    return out;
}

void Matrix::set_col(int c, const Vec& v) {
    if (static_cast<int>(v.size()) != rows_)
        throw std::invalid_argument("Matrix::set_col: dimension mismatch");
    for (int r = 0; r < rows_; ++r) at(r, c) = v[r];
}

Vec Matrix::col(int c) const {
    Vec v(rows_);
    for (int r = 0; r < rows_; ++r) v[r] = at(r, c);
    return v;
}

namespace {

// Row echelon form of [A | b] (b optional), leftmost-column / topmost-row
// pivoting. Returns pivot column per used row.
struct Echelon {
    Matrix m;
    std::vector<int> pivot_col; // per pivot row
};

Echelon echelon(Matrix m, int lead_cols) {
    Echelon e{std::move(m), {}};
    int row = 0;
    for (int col = 0; col < lead_cols && row < e.m.rows(); ++col) {
        int piv = -1;
        for (int r = row; r < e.m.rows(); ++r)
            if (!e.m.at(r, col).is_zero()) { piv = r; break; }
        if (piv < 0) continue;
        if (piv != row)
            for (int c = 0; c < e.m.cols(); ++c) std::swap(e.m.at(piv, c), e.m.at(row, c));
        Rational inv = Rational(1) / e.m.at(row, col);
        for (int c = col; c < e.m.cols(); ++c) e.m.at(row, c) *= inv;
        for (int r = 0; r < e.m.rows(); ++r) {
            if (r == row || e.m.at(r, col).is_zero()) continue;
            Rational f = e.m.at(r, col);
            for (int c = col; c < e.m.cols(); ++c) e.m.at(r, c) -= f * e.m.at(row, c);
        }
        e.pivot_col.push_back(col);
        ++row;
    }
    return e;
}

} // namespace

std::optional<Vec> solve(const Matrix& A, const Vec& b) {
    if (static_cast<int>(b.size()) != A.rows())
        throw std::invalid_argument("solve: A has " + std::to_string(A.rows()) +
                                    " rows but b has " + std::to_string(b.size()));
    const int n = A.cols();
    Matrix aug(A.rows(), n + 1);
    for (int r = 0; r < A.rows(); ++r) {
        for (int c = 0; c < n; ++c) aug.at(r, c) = A.at(r, c);
        aug.at(r, n) = b[r];
    }
    Echelon e = echelon(std::move(aug), n);
    // Inconsistent iff some row reads 0 = nonzero.
    for (int r = static_cast<int>(e.pivot_col.size()); r < e.m.rows(); ++r)
        if (!e.m.at(r, n).is_zero()) return std::nullopt;
    Vec x(n); // free variables stay zero
    for (std::size_t i = 0; i < e.pivot_col.size(); ++i)
        x[e.pivot_col[i]] = e.m.at(static_cast<int>(i), n);
    return x;
}

int rank(const Matrix& A) {
    if (A.rows() == 0 || A.cols() == 0) return 0;
    return static_cast<int>(echelon(A, A.cols()).pivot_col.size());
}

bool is_invertible(const Matrix& A) {
    if (A.rows() != A.cols()) return false;
    return rank(A) == A.rows();
}

} // namespace modtens
