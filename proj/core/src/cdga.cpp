#include "revar/cdga.hpp"

#include <sstream>
#include <stdexcept>

namespace revar {

namespace {

std::string pair_desc(const CDGA& a, int i, int ai, int j, int aj) {
    std::ostringstream os;
    os << "(" << a.label(i, ai) << " [deg " << i << "], " << a.label(j, aj) << " [deg " << j
       << "])";
    return os.str();
}

bool vec_is_zero(const std::vector<Rational>& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

}  // namespace

CDGA::CDGA(int truncation, std::vector<std::vector<std::string>> labels,
           const std::vector<MuEntry>& mu_entries, std::vector<RatMatrix> differentials,
           std::optional<std::vector<std::vector<int>>> weights)
    : N_(truncation), labels_(std::move(labels)), weights_(std::move(weights)) {
    if (N_ < 0) throw std::invalid_argument("CDGA: negative truncation degree");
    if (static_cast<int>(labels_.size()) != N_ + 1)
        throw std::invalid_argument("CDGA: expected basis labels for degrees 0..N");

    // Differentials default to zero matrices of the right shape.
    d_.reserve(N_);
    for (int i = 0; i < N_; ++i) {
        if (i < static_cast<int>(differentials.size()) && differentials[i].rows() > 0) {
            if (differentials[i].rows() != dim(i + 1) || differentials[i].cols() != dim(i))
                throw std::invalid_argument("CDGA: differential d_" + std::to_string(i) +
                                            " has wrong shape");
            d_.push_back(differentials[i]);
        } else {
            d_.push_back(RatMatrix(dim(i + 1), dim(i)));
        }
    }

    if (weights_ && static_cast<int>(weights_->size()) != N_ + 1)
        throw std::invalid_argument("CDGA: weights must cover degrees 0..N");
    if (weights_)
        for (int i = 0; i <= N_; ++i)
            if (static_cast<int>((*weights_)[i].size()) != dim(i))
                throw std::invalid_argument("CDGA: weight count mismatch in degree " +
                                            std::to_string(i));

    // Fold entries into canonical position; a pair supplied in both
    // orientations must agree up to the graded-commutativity sign.
    std::map<std::array<int, 4>, std::vector<Rational>> swapped;
    for (const auto& e : mu_entries) {
        if (e.di < 0 || e.dj < 0 || e.di + e.dj > N_ || e.ai < 0 || e.ai >= dim(e.di) ||
            e.aj < 0 || e.aj >= dim(e.dj)) {
            load_issues_.push_back("mu entry out of range: degrees (" + std::to_string(e.di) +
                                   "," + std::to_string(e.dj) + ") indices (" +
                                   std::to_string(e.ai) + "," + std::to_string(e.aj) + ")");
            continue;
        }
        if (static_cast<int>(e.value.size()) != dim(e.di + e.dj)) {
            load_issues_.push_back("mu entry value has wrong length at " +
                                   pair_desc(*this, e.di, e.ai, e.dj, e.aj));
            continue;
        }
        bool canonical = e.di < e.dj || (e.di == e.dj && e.ai <= e.aj);
        auto& target = canonical ? mu_ : swapped;
        std::array<int, 4> key = canonical ? std::array<int, 4>{e.di, e.ai, e.dj, e.aj}
                                           : std::array<int, 4>{e.dj, e.aj, e.di, e.ai};
        std::vector<Rational> value = e.value;
        if (!canonical && (e.di % 2) && (e.dj % 2))
            for (auto& c : value) c = -c;
        auto [it, inserted] = target.emplace(key, value);
        if (!inserted)
            for (std::size_t k = 0; k < value.size(); ++k) it->second[k] += value[k];
    }
    for (auto& [key, value] : swapped) {
        auto it = mu_.find(key);
        if (it == mu_.end()) {
            mu_.emplace(key, std::move(value));
        } else if (it->second != value) {
            load_issues_.push_back("graded-commutativity conflict between the two orientations of " +
                                   pair_desc(*this, key[0], key[1], key[2], key[3]));
        }
    }
}

int CDGA::dim(int degree) const {
    if (degree < 0 || degree > N_) return 0;
    return static_cast<int>(labels_[degree].size());
}

const RatMatrix& CDGA::d(int i) const {
    if (i < 0 || i >= N_) throw std::out_of_range("CDGA::d: differential index out of range");
    return d_[i];
}

std::vector<Rational> CDGA::mu(int i, int a, int j, int b) const {
    if (i + j > N_) throw std::out_of_range("CDGA::mu: product degree beyond truncation");
    std::vector<Rational> out(dim(i + j), Rational(0));
    if (i == 0) {  // unit: a_0 = 1 and the unit acts as identity
        out[b] = Rational(1);
        return out;
    }
    if (j == 0) {
        out[a] = Rational(1);
        return out;
    }
    bool canonical = i < j || (i == j && a <= b);
    std::array<int, 4> key =
        canonical ? std::array<int, 4>{i, a, j, b} : std::array<int, 4>{j, b, i, a};
    auto it = mu_.find(key);
    if (it == mu_.end()) return out;
    out = it->second;
    if (!canonical && (i % 2) && (j % 2))
        for (auto& c : out) c = -c;
    return out;
}

std::vector<Rational> CDGA::mul(int i, std::span<const Rational> u, int j,
                                std::span<const Rational> v) const {
    std::vector<Rational> out(dim(i + j), Rational(0));
    for (int a = 0; a < dim(i); ++a) {
        if (u[a].is_zero()) continue;
        for (int b = 0; b < dim(j); ++b) {
            if (v[b].is_zero()) continue;
            auto prod = mu(i, a, j, b);
            Rational f = u[a] * v[b];
            for (std::size_t k = 0; k < prod.size(); ++k) out[k] += f * prod[k];
        }
    }
    return out;
}

ValidationReport validate(const CDGA& a) {
    ValidationReport rep;
    const int N = a.truncation();
    for (const auto& issue : a.load_issues()) rep.issues.push_back({"structure", issue});

    if (a.dim(0) != 1)
        rep.issues.push_back(
            {"connectedness", "A^0 must be one-dimensional, got " + std::to_string(a.dim(0))});
    if (N >= 1 && !a.d(0).is_zero())
        rep.issues.push_back({"connectedness", "d_0 must vanish on the unit"});

    // The unit acts as the identity and squares of odd-degree elements vanish;
    // both are statements about stored entries (derived entries satisfy them
    // by construction).
    for (const auto& [key, value] : a.stored_mu()) {
        auto [i, ai, j, aj] = key;
        if (i == 0 || j == 0) {
            std::vector<Rational> expected(a.dim(i + j), Rational(0));
            expected[i == 0 ? aj : ai] = Rational(1);
            if (value != expected)
                rep.issues.push_back({"unit", "1 * a != a at " + pair_desc(a, i, ai, j, aj)});
            continue;
        }
        if (i == j && ai == aj && (i % 2) && !vec_is_zero(value))
            rep.issues.push_back({"graded-commutativity",
                                  "odd-degree square must vanish at " + pair_desc(a, i, ai, j, aj)});
    }

    for (int i = 0; i + 1 < N; ++i) {
        RatMatrix dd = a.d(i + 1) * a.d(i);
        if (!dd.is_zero())
            rep.issues.push_back({"d-squared", "d_" + std::to_string(i + 1) + " . d_" +
                                                   std::to_string(i) + " != 0"});
    }

    // Graded Leibniz on every basis pair within the truncation.
    for (int i = 0; i <= N; ++i) {
        for (int j = i; i + j + 1 <= N; ++j) {
            for (int ai = 0; ai < a.dim(i); ++ai) {
                for (int aj = (i == j ? ai : 0); aj < a.dim(j); ++aj) {
                    std::vector<Rational> lhs(a.dim(i + j + 1), Rational(0));
                    {
                        auto prod = a.mu(i, ai, j, aj);
                        const RatMatrix& dij = a.d(i + j);
                        for (int k = 0; k < a.dim(i + j); ++k) {
                            if (prod[k].is_zero()) continue;
                            for (int r = 0; r < a.dim(i + j + 1); ++r)
                                lhs[r] += prod[k] * dij.at(r, k);
                        }
                    }
                    std::vector<Rational> rhs(a.dim(i + j + 1), Rational(0));
                    if (i < N) {
                        const RatMatrix& di = a.d(i);
                        for (int k = 0; k < a.dim(i + 1); ++k) {
                            if (di.at(k, ai).is_zero()) continue;
                            auto prod = a.mu(i + 1, k, j, aj);
                            for (std::size_t r = 0; r < prod.size(); ++r)
                                rhs[r] += di.at(k, ai) * prod[r];
                        }
                    }
                    if (j < N) {
                        const RatMatrix& dj = a.d(j);
                        int sign = (i % 2) ? -1 : 1;
                        for (int k = 0; k < a.dim(j + 1); ++k) {
                            if (dj.at(k, aj).is_zero()) continue;
                            auto prod = a.mu(i, ai, j + 1, k);
                            for (std::size_t r = 0; r < prod.size(); ++r)
                                rhs[r] += Rational(sign) * dj.at(k, aj) * prod[r];
                        }
                    }
                    if (lhs != rhs)
                        rep.issues.push_back(
                            {"leibniz", "d(ab) != (da)b + (-1)^|a| a(db) at " +
                                            pair_desc(a, i, ai, j, aj)});
                }
            }
        }
    }

    if (a.has_weights()) {
        for (const auto& [key, value] : a.stored_mu()) {
            auto [i, ai, j, aj] = key;
            if (i == 0 || j == 0) continue;
            int w = a.weight(i, ai) + a.weight(j, aj);
            for (int k = 0; k < a.dim(i + j); ++k)
                if (!value[k].is_zero() && a.weight(i + j, k) != w) {
                    rep.issues.push_back({"weights", "product not weight-homogeneous at " +
                                                         pair_desc(a, i, ai, j, aj)});
                    break;
                }
        }
        for (int i = 0; i < N; ++i) {
            const RatMatrix& di = a.d(i);
            for (int c = 0; c < a.dim(i); ++c)
                for (int r = 0; r < a.dim(i + 1); ++r)
                    if (!di.at(r, c).is_zero() && a.weight(i + 1, r) != a.weight(i, c))
                        rep.issues.push_back(
                            {"weights", "differential does not preserve weight at d_" +
                                            std::to_string(i) + "(" + a.label(i, c) + ")"});
        }
        for (int k = 0; k < a.dim(1); ++k)
            if (a.weight(1, k) <= 0)
                rep.issues.push_back(
                    {"weights", "degree-one weight must be >= 1 at " + a.label(1, k)});
    }
    return rep;
}

CohomologyReport cohomology(const CDGA& a, int i) {
    if (i < 0 || i >= a.truncation())
        throw std::out_of_range("cohomology: degree out of range (need i < N)");
    CohomologyReport rep;
    rep.degree = i;
    int rank_di = rat_rank(a.d(i));
    int rank_dprev = i > 0 ? rat_rank(a.d(i - 1)) : 0;
    rep.dimension = a.dim(i) - rank_di - rank_dprev;

    auto kernel = rat_kernel(a.d(i));
    // Representatives: kernel vectors extending an echelon of im d_{i-1}.
    std::vector<std::vector<Rational>> image_rows;
    if (i > 0) {
        const RatMatrix& dp = a.d(i - 1);
        for (int c = 0; c < dp.cols(); ++c) image_rows.push_back(dp.col(c));
    }
    auto rank_of = [](const std::vector<std::vector<Rational>>& rows) {
        if (rows.empty()) return 0;
        return rat_rank(RatMatrix::from_rows(rows));
    };
    int base_rank = rank_of(image_rows);
    auto span = image_rows;
    int current = base_rank;
    for (const auto& v : kernel) {
        span.push_back(v);
        int r = rank_of(span);
        if (r > current) {
            current = r;
            rep.representatives.push_back(v);
        } else {
            span.pop_back();
        }
    }
    return rep;
}

std::vector<std::vector<Rational>> h1_cocycles(const CDGA& a) {
    if (a.truncation() < 2) throw std::out_of_range("h1_cocycles: need truncation degree >= 2");
    return rat_kernel(a.d(1));
}

CDGA formal_from_ring(int truncation, std::vector<std::vector<std::string>> labels,
                      const std::vector<MuEntry>& products) {
    std::vector<std::vector<int>> weights;
    weights.reserve(labels.size());
    for (std::size_t deg = 0; deg < labels.size(); ++deg)
        weights.emplace_back(labels[deg].size(), static_cast<int>(deg));
    return CDGA(truncation, std::move(labels), products, {}, std::move(weights));
}

CDGA truncate(const CDGA& a, int q) {
    if (q < 0 || q > a.truncation()) throw std::out_of_range("truncate: bad degree");
    std::vector<std::vector<std::string>> labels;
    for (int i = 0; i <= q; ++i) labels.push_back(a.labels(i));
    std::vector<MuEntry> entries;
    for (const auto& [key, value] : a.stored_mu()) {
        if (key[0] + key[2] > q) continue;
        entries.push_back({key[0], key[1], key[2], key[3], value});
    }
    std::vector<RatMatrix> ds;
    for (int i = 0; i < q; ++i) ds.push_back(a.d(i));
    std::optional<std::vector<std::vector<int>>> weights;
    if (a.has_weights()) {
        std::vector<std::vector<int>> w;
        for (int i = 0; i <= q; ++i) w.push_back((*a.weights())[i]);
        weights = std::move(w);
    }
    return CDGA(q, std::move(labels), entries, std::move(ds), std::move(weights));
}

}  // namespace revar
