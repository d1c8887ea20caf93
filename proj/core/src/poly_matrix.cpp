#include "revar/poly_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace revar {

PolyMatrix::PolyMatrix(int rows, int cols, int nvars, NamesPtr names)
    : rows_(rows), cols_(cols), nvars_(nvars), names_(std::move(names)) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("PolyMatrix: negative shape");
    e_.assign(static_cast<std::size_t>(rows) * cols, MultiPoly(nvars, names_));
}

PolyMatrix PolyMatrix::from_rational(const RatMatrix& m, int nvars, NamesPtr names) {
    PolyMatrix p(m.rows(), m.cols(), nvars, std::move(names));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            p.at(i, j) = MultiPoly::constant(nvars, m.at(i, j), p.names_);
    return p;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
    if (cols_ != o.rows_ || nvars_ != o.nvars_)
        throw std::invalid_argument("PolyMatrix: shape/arity mismatch in *");
    PolyMatrix m(rows_, o.cols_, nvars_, names_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) m.at(i, j) += at(i, k) * o.at(k, j);
        }
    return m;
}

bool PolyMatrix::is_zero() const {
    for (const auto& p : e_)
        if (!p.is_zero()) return false;
    return true;
}

int PolyMatrix::max_entry_degree() const {
    int d = -1;
    for (const auto& p : e_) d = std::max(d, p.total_degree());
    return d;
}

RatMatrix PolyMatrix::evaluate(std::span<const Rational> point) const {
    RatMatrix m(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, j).evaluate(point);
    return m;
}

PolyMatrix PolyMatrix::substitute(const std::vector<MultiPoly>& images) const {
    int m = images.empty() ? 0 : images[0].nvars();
    NamesPtr nm = images.empty() ? nullptr : images[0].names();
    PolyMatrix out(rows_, cols_, m, nm);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(i, j) = at(i, j).substitute(images);
    return out;
}

int rank_at(const PolyMatrix& m, std::span<const Rational> point) {
    return rat_rank(m.evaluate(point));
}

namespace {

// Pivot preference: fewest terms, then lowest degree, then position.
bool better_pivot(const MultiPoly& a, const MultiPoly& b) {
    if (a.term_count() != b.term_count()) return a.term_count() < b.term_count();
    return a.total_degree() < b.total_degree();
}

}  // namespace

int generic_rank(const PolyMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    const MonomialOrder ord = MonomialOrder::grevlex();
    // Bareiss over the polynomial ring; divisions by the previous pivot are exact.
    std::vector<std::vector<MultiPoly>> a(m.rows());
    for (int i = 0; i < m.rows(); ++i) {
        a[i].reserve(m.cols());
        for (int j = 0; j < m.cols(); ++j) a[i].push_back(m.at(i, j));
    }
    int rows = m.rows(), cols = m.cols();
    MultiPoly prev = MultiPoly::constant(m.nvars(), 1, m.names());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i) {
            if (a[i][c].is_zero()) continue;
            if (p < 0 || better_pivot(a[i][c], a[p][c])) p = i;
        }
        if (p < 0) continue;
        std::swap(a[r], a[p]);
        for (int i = r + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j) {
                MultiPoly v = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                a[i][j] = v.is_zero() ? v : exact_divide(v, prev, ord);
            }
            a[i][c] = MultiPoly(m.nvars(), m.names());
        }
        prev = a[r][c];
        ++r;
    }
    return r;
}

namespace {

// Unnormalized rational function; denominators stay small at desk scale.
struct RatFun {
    MultiPoly num, den;

    bool is_zero() const { return num.is_zero(); }
};

RatFun rf_const(int n, const NamesPtr& nm, long v) {
    return {MultiPoly::constant(n, Rational(v), nm), MultiPoly::constant(n, Rational(1), nm)};
}

RatFun rf_sub(const RatFun& a, const RatFun& b) {
    return {a.num * b.den - b.num * a.den, a.den * b.den};
}

RatFun rf_mul(const RatFun& a, const RatFun& b) { return {a.num * b.num, a.den * b.den}; }

RatFun rf_div(const RatFun& a, const RatFun& b) {
    if (b.is_zero()) throw std::domain_error("symbolic_kernel: division by zero function");
    return {a.num * b.den, a.den * b.num};
}

}  // namespace

std::vector<std::vector<MultiPoly>> symbolic_kernel(const PolyMatrix& m) {
    const int n = m.nvars();
    const NamesPtr& nm = m.names();
    const MonomialOrder ord = MonomialOrder::grevlex();
    // Gauss-Jordan over Q(t); the matrix is tiny so unreduced fractions are fine.
    std::vector<std::vector<RatFun>> a(m.rows());
    for (int i = 0; i < m.rows(); ++i) {
        a[i].reserve(m.cols());
        for (int j = 0; j < m.cols(); ++j)
            a[i].push_back({m.at(i, j), MultiPoly::constant(n, Rational(1), nm)});
    }
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int p = -1;
        for (int i = r; i < m.rows(); ++i)
            if (!a[i][c].is_zero()) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(a[r], a[p]);
        RatFun piv = a[r][c];
        for (int j = 0; j < m.cols(); ++j) a[r][j] = rf_div(a[r][j], piv);
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            RatFun f = a[i][c];
            for (int j = 0; j < m.cols(); ++j) a[i][j] = rf_sub(a[i][j], rf_mul(f, a[r][j]));
        }
        pivots.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<MultiPoly>> basis;
    for (int f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        // v[f] = 1, v[pivot_i] = -a[i][f]; clear denominators.
        std::vector<RatFun> v(m.cols(), rf_const(n, nm, 0));
        v[f] = rf_const(n, nm, 1);
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = rf_sub(rf_const(n, nm, 0), a[i][f]);
        MultiPoly den_prod = MultiPoly::constant(n, Rational(1), nm);
        for (const auto& x : v)
            if (!x.is_zero()) den_prod = den_prod * x.den;
        std::vector<MultiPoly> w;
        w.reserve(m.cols());
        for (const auto& x : v) {
            if (x.is_zero())
                w.push_back(MultiPoly(n, nm));
            else
                w.push_back(exact_divide(x.num * den_prod, x.den, ord));
        }
        basis.push_back(std::move(w));
    }
    return basis;
}

}  // namespace revar
