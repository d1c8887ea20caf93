#pragma once

#include <span>
#include <vector>

#include "revar/rational.hpp"

namespace revar {

/// Dense rational matrix (desk-scale sizes).
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

    static RatMatrix identity(int n);
    static RatMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Rational& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    RatMatrix transpose() const;
    RatMatrix operator*(const RatMatrix& o) const;
    bool is_symmetric() const;
    bool is_zero() const;
    std::vector<Rational> row(int i) const;
    std::vector<Rational> col(int j) const;
    RatMatrix submatrix(std::span<const int> rows, std::span<const int> cols) const;
    bool operator==(const RatMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

/// Exact rank via fraction-free (Bareiss) elimination on the denominator-cleared
/// integer matrix.
int rat_rank(const RatMatrix& m);

/// Exact determinant of a square matrix (Bareiss with row pivoting).
Rational rat_det(const RatMatrix& m);

/// Reduced row echelon form; pivot column indices are appended to *pivots when given.
RatMatrix rat_rref(const RatMatrix& m, std::vector<int>* pivots = nullptr);

/// Deterministic kernel basis from the RREF (one vector per free column,
/// free columns ascending, free coordinate set to 1).
std::vector<std::vector<Rational>> rat_kernel(const RatMatrix& m);

/// v^T M v for a symmetric pairing.
Rational quadratic_form(const RatMatrix& m, std::span<const Rational> v);

}  // namespace revar
