#pragma once

#include <span>
#include <vector>

#include "revar/linalg.hpp"
#include "revar/poly.hpp"

namespace revar {

/// Rectangular matrix of polynomials sharing one ambient variable set.
class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(int rows, int cols, int nvars, NamesPtr names = nullptr);
    static PolyMatrix from_rational(const RatMatrix& m, int nvars, NamesPtr names = nullptr);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int nvars() const { return nvars_; }
    const NamesPtr& names() const { return names_; }

    MultiPoly& at(int i, int j) { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
    const MultiPoly& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * cols_ + j]; }

    PolyMatrix operator*(const PolyMatrix& o) const;
    bool is_zero() const;
    int max_entry_degree() const;

    RatMatrix evaluate(std::span<const Rational> point) const;
    /// Substitutes each variable by the given polynomial (entries recomposed).
    PolyMatrix substitute(const std::vector<MultiPoly>& images) const;

private:
    int rows_ = 0, cols_ = 0, nvars_ = 0;
    NamesPtr names_;
    std::vector<MultiPoly> e_;
};

/// Exact rank of the evaluated matrix at a rational point.
int rank_at(const PolyMatrix& m, std::span<const Rational> point);

/// Rank over the fraction field, certified by fraction-free symbolic
/// elimination (a seeded random evaluation may propose the value first, but
/// the symbolic computation decides).
int generic_rank(const PolyMatrix& m);

/// Kernel of m over the rational-function field, returned as polynomial
/// vectors (denominators cleared, integer content removed). Row operations do
/// not change the kernel, so the result is exact.
std::vector<std::vector<MultiPoly>> symbolic_kernel(const PolyMatrix& m);

}  // namespace revar
