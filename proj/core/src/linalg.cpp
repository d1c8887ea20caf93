#include "revar/linalg.hpp"

#include <stdexcept>

namespace revar {

RatMatrix RatMatrix::identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    RatMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c)
            throw std::invalid_argument("RatMatrix::from_rows: ragged rows");
        for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix m(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("RatMatrix: shape mismatch in *");
    RatMatrix m(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) m.at(i, j) += at(i, k) * o.at(k, j);
        }
    return m;
}

bool RatMatrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

bool RatMatrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

std::vector<Rational> RatMatrix::row(int i) const {
    std::vector<Rational> r(cols_);
    for (int j = 0; j < cols_; ++j) r[j] = at(i, j);
    return r;
}

std::vector<Rational> RatMatrix::col(int j) const {
    std::vector<Rational> c(rows_);
    for (int i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
}

RatMatrix RatMatrix::submatrix(std::span<const int> rows, std::span<const int> cols) const {
    RatMatrix m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            m.at(static_cast<int>(i), static_cast<int>(j)) = at(rows[i], cols[j]);
    return m;
}

namespace {

// Clears denominators row by row; returns the integer matrix. Row scaling by
// positive units preserves rank; for determinants the scale product is
// reported through *scale.
std::vector<std::vector<mpz_class>> clear_rows(const RatMatrix& m, mpq_class* scale) {
    std::vector<std::vector<mpz_class>> z(m.rows(), std::vector<mpz_class>(m.cols()));
    if (scale) *scale = 1;
    for (int i = 0; i < m.rows(); ++i) {
        mpz_class l(1);
        for (int j = 0; j < m.cols(); ++j) {
            mpz_class d = m.at(i, j).denominator();
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
        }
        for (int j = 0; j < m.cols(); ++j) {
            const Rational& q = m.at(i, j);
            z[i][j] = q.numerator() * (l / q.denominator());
        }
        if (scale) *scale *= mpq_class(l);
    }
    return z;
}

}  // namespace

int rat_rank(const RatMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    auto z = clear_rows(m, nullptr);
    int rows = m.rows(), cols = m.cols();
    mpz_class prev(1);
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (z[i][c] != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(z[r], z[p]);
        for (int i = r + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j) {
                mpz_class v = z[r][c] * z[i][j] - z[i][c] * z[r][j];
                mpz_divexact(z[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
            z[i][c] = 0;
        }
        prev = z[r][c];
        ++r;
    }
    return r;
}

Rational rat_det(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("rat_det: matrix not square");
    int n = m.rows();
    if (n == 0) return Rational(1);
    mpq_class scale;
    auto z = clear_rows(m, &scale);
    mpz_class prev(1);
    int sign = 1;
    for (int c = 0; c < n - 1; ++c) {
        int p = -1;
        for (int i = c; i < n; ++i)
            if (z[i][c] != 0) {
                p = i;
                break;
            }
        if (p < 0) return Rational(0);
        if (p != c) {
            std::swap(z[c], z[p]);
            sign = -sign;
        }
        for (int i = c + 1; i < n; ++i) {
            for (int j = c + 1; j < n; ++j) {
                mpz_class v = z[c][c] * z[i][j] - z[i][c] * z[c][j];
                mpz_divexact(z[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
            z[i][c] = 0;
        }
        prev = z[c][c];
    }
    mpq_class det(z[n - 1][n - 1] * sign);
    det /= scale;
    det.canonicalize();
    return Rational(det);
}

RatMatrix rat_rref(const RatMatrix& m, std::vector<int>* pivots) {
    RatMatrix a = m;
    int r = 0;
    for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
        int p = -1;
        for (int i = r; i < a.rows(); ++i)
            if (!a.at(i, c).is_zero()) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < a.cols(); ++j) std::swap(a.at(r, j), a.at(p, j));
        Rational inv = a.at(r, c).inverse();
        for (int j = c; j < a.cols(); ++j) a.at(r, j) *= inv;
        for (int i = 0; i < a.rows(); ++i) {
            if (i == r || a.at(i, c).is_zero()) continue;
            Rational f = a.at(i, c);
            for (int j = c; j < a.cols(); ++j) a.at(i, j) -= f * a.at(r, j);
        }
        if (pivots) pivots->push_back(c);
        ++r;
    }
    return a;
}

std::vector<std::vector<Rational>> rat_kernel(const RatMatrix& m) {
    std::vector<int> pivots;
    RatMatrix r = rat_rref(m, &pivots);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (int f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(m.cols(), Rational(0));
        v[f] = Rational(1);
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r.at(static_cast<int>(i), f);
        basis.push_back(std::move(v));
    }
    return basis;
}

Rational quadratic_form(const RatMatrix& m, std::span<const Rational> v) {
    if (m.rows() != m.cols() || static_cast<int>(v.size()) != m.rows())
        throw std::invalid_argument("quadratic_form: shape mismatch");
    Rational s(0);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) s += v[i] * m.at(i, j) * v[j];
    return s;
}

}  // namespace revar
