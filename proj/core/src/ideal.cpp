#include "revar/ideal.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace revar {

Ideal::Ideal(int nvars, std::vector<MultiPoly> gens, NamesPtr names)
    : n_(nvars), names_(names ? std::move(names) : VarNames::standard(nvars)) {
    for (auto& g : gens) {
        if (g.nvars() != n_) throw std::invalid_argument("Ideal: generator arity mismatch");
        g.set_names(names_);
    }
    gens_ = normalize_generators(std::move(gens), MonomialOrder::grevlex());
}

Ideal Ideal::zero(int nvars, NamesPtr names) { return Ideal(nvars, {}, std::move(names)); }

Ideal Ideal::unit(int nvars, NamesPtr names) {
    return Ideal(nvars, {MultiPoly::constant(nvars, 1)}, std::move(names));
}

std::string Ideal::describe() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < gens_.size() && i < 6; ++i) {
        if (i) os << ", ";
        os << gens_[i].str();
    }
    if (gens_.size() > 6) os << ", ... " << gens_.size() << " generators";
    os << ")";
    return os.str();
}

const std::vector<MultiPoly>& Ideal::groebner(const MonomialOrder& ord, const GbLimits& lim) const {
    std::lock_guard<std::mutex> lock(cache_->m);
    auto key = ord.cache_key();
    auto it = cache_->bases.find(key);
    if (it != cache_->bases.end()) return it->second;
    auto basis = groebner_basis(gens_, ord, lim, describe());
    return cache_->bases.emplace(key, std::move(basis)).first->second;
}

bool Ideal::is_unit(const GbLimits& lim) const {
    const auto& g = groebner(MonomialOrder::grevlex(), lim);
    return g.size() == 1 && g[0].is_constant();
}

bool Ideal::contains(const MultiPoly& p, const GbLimits& lim) const {
    if (p.is_zero()) return true;
    const auto& g = groebner(MonomialOrder::grevlex(), lim);
    if (g.empty()) return false;
    return normal_form(p, g, MonomialOrder::grevlex()).is_zero();
}

bool Ideal::contains_ideal(const Ideal& other, const GbLimits& lim) const {
    for (const auto& g : other.generators())
        if (!contains(g, lim)) return false;
    return true;
}

bool Ideal::same_ideal(const Ideal& other, const GbLimits& lim) const {
    return contains_ideal(other, lim) && other.contains_ideal(*this, lim);
}

bool Ideal::vanishes_at(std::span<const Rational> point) const {
    for (const auto& g : gens_)
        if (!g.evaluate(point).is_zero()) return false;
    return true;
}

bool ideal_membership(const MultiPoly& p, const Ideal& ideal, const GbLimits& lim) {
    return ideal.contains(p, lim);
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
    if (a.nvars() != b.nvars()) throw std::invalid_argument("ideal_sum: arity mismatch");
    std::vector<MultiPoly> gens = a.generators();
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
    return Ideal(a.nvars(), std::move(gens), a.names());
}

namespace {

// Appends one auxiliary variable (index n) named uniquely.
NamesPtr names_with_aux(const NamesPtr& names, int n, const std::string& aux) {
    std::vector<std::string> v;
    v.reserve(n + 1);
    for (int i = 0; i < n; ++i) v.push_back(names ? names->name(i) : "t" + std::to_string(i + 1));
    std::string a = aux;
    while (std::find(v.begin(), v.end(), a) != v.end()) a += "_";
    v.push_back(a);
    return VarNames::make(std::move(v));
}

MultiPoly lift_poly(const MultiPoly& p, int extra, const NamesPtr& names) {
    MultiPoly q(p.nvars() + extra, names);
    for (const auto& [e, c] : p.terms()) {
        Exp e2 = e;
        e2.resize(e.size() + extra, 0);
        q.add_term(e2, c);
    }
    return q;
}

}  // namespace

Ideal eliminate(const Ideal& ideal, const std::vector<int>& drop, const GbLimits& lim) {
    const int n = ideal.nvars();
    std::vector<int> block = drop;
    std::sort(block.begin(), block.end());
    block.erase(std::unique(block.begin(), block.end()), block.end());
    for (int i : block)
        if (i < 0 || i >= n) throw std::invalid_argument("eliminate: variable index out of range");
    if (block.empty()) return ideal;

    MonomialOrder ord = MonomialOrder::block_elimination(block);
    const auto& gb = ideal.groebner(ord, lim);

    std::vector<char> dropped(n, 0);
    for (int i : block) dropped[i] = 1;
    std::vector<int> keep_index(n, -1);
    std::vector<std::string> kept_names;
    int m = 0;
    for (int i = 0; i < n; ++i) {
        if (dropped[i]) continue;
        keep_index[i] = m++;
        kept_names.push_back(ideal.names() ? ideal.names()->name(i) : "t" + std::to_string(i + 1));
    }
    NamesPtr out_names = VarNames::make(std::move(kept_names));

    std::vector<MultiPoly> out;
    for (const auto& g : gb) {
        bool pure = true;
        for (const auto& [e, c] : g.terms()) {
            for (int i : block)
                if (e[i]) {
                    pure = false;
                    break;
                }
            if (!pure) break;
        }
        if (!pure) continue;
        MultiPoly q(m, out_names);
        for (const auto& [e, c] : g.terms()) {
            Exp e2(m, 0);
            for (int i = 0; i < n; ++i)
                if (keep_index[i] >= 0) e2[keep_index[i]] = e[i];
            q.add_term(e2, c);
        }
        out.push_back(std::move(q));
    }
    return Ideal(m, std::move(out), out_names);
}

Ideal saturate(const Ideal& ideal, const MultiPoly& f, const GbLimits& lim) {
    if (f.is_zero()) throw std::invalid_argument("saturate: zero divisor polynomial");
    if (f.nvars() != ideal.nvars()) throw std::invalid_argument("saturate: arity mismatch");
    const int n = ideal.nvars();
    NamesPtr names = names_with_aux(ideal.names(), n, "_z");
    std::vector<MultiPoly> gens;
    gens.reserve(ideal.generators().size() + 1);
    for (const auto& g : ideal.generators()) gens.push_back(lift_poly(g, 1, names));
    MultiPoly zf = lift_poly(f, 1, names) * MultiPoly::variable(n + 1, n, names);
    gens.push_back(MultiPoly::constant(n + 1, 1, names) - zf);
    Ideal lifted(n + 1, std::move(gens), names);
    Ideal result = eliminate(lifted, {n}, lim);
    // eliminate() renumbers back onto the original n variables
    return Ideal(n, result.generators(), ideal.names());
}

Ideal intersect(const Ideal& a, const Ideal& b, const GbLimits& lim) {
    if (a.nvars() != b.nvars()) throw std::invalid_argument("intersect: arity mismatch");
    const int n = a.nvars();
    NamesPtr names = names_with_aux(a.names(), n, "_w");
    MultiPoly w = MultiPoly::variable(n + 1, n, names);
    MultiPoly one_minus_w = MultiPoly::constant(n + 1, 1, names) - w;
    std::vector<MultiPoly> gens;
    for (const auto& g : a.generators()) gens.push_back(lift_poly(g, 1, names) * w);
    for (const auto& g : b.generators()) gens.push_back(lift_poly(g, 1, names) * one_minus_w);
    Ideal lifted(n + 1, std::move(gens), names);
    Ideal result = eliminate(lifted, {n}, lim);
    return Ideal(n, result.generators(), a.names());
}

Ideal saturate_at_origin(const Ideal& ideal, const GbLimits& lim) {
    const int n = ideal.nvars();
    if (n == 0 || ideal.is_zero_ideal()) return ideal;
    Ideal acc = saturate(ideal, MultiPoly::variable(n, 0, ideal.names()), lim);
    for (int j = 1; j < n; ++j) {
        Ideal sj = saturate(ideal, MultiPoly::variable(n, j, ideal.names()), lim);
        acc = intersect(acc, sj, lim);
    }
    return acc;
}

int krull_dimension(const Ideal& ideal, const GbLimits& lim) {
    const int n = ideal.nvars();
    const auto& gb = ideal.groebner(MonomialOrder::grevlex(), lim);
    if (gb.size() == 1 && gb[0].is_constant()) return -1;
    if (gb.empty()) return n;
    if (n > 24) throw ResourceLimitError("krull_dimension variable cap", ideal.describe());
    std::vector<Exp> leads;
    leads.reserve(gb.size());
    for (const auto& g : gb) leads.push_back(g.leading_term(MonomialOrder::grevlex()).first);
    // max |S| over subsets S of variables meeting the support of no leading monomial
    int best = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        int size = __builtin_popcount(mask);
        if (size <= best) continue;
        bool independent = true;
        for (const auto& e : leads) {
            bool inside = true;
            for (int i = 0; i < n && inside; ++i)
                if (e[i] && !(mask & (1u << i))) inside = false;
            if (inside) {
                independent = false;
                break;
            }
        }
        if (independent) best = size;
    }
    return best;
}

Ideal minors_ideal(const PolyMatrix& m, int k) {
    if (k < 0) throw std::invalid_argument("minors_ideal: negative size");
    const int n = m.nvars();
    if (k == 0) return Ideal::unit(n, m.names());
    if (k > std::min(m.rows(), m.cols())) return Ideal::zero(n, m.names());

    // All k-subsets of rows and columns; per pair, Laplace expansion along the
    // first row with memoization over column subsets.
    std::vector<MultiPoly> gens;
    std::vector<int> rsel, csel;

    auto det_of = [&](const std::vector<int>& rs, const std::vector<int>& cs) {
        const int kk = static_cast<int>(rs.size());
        std::vector<MultiPoly> memo(static_cast<std::size_t>(1) << kk);
        std::vector<char> have(static_cast<std::size_t>(1) << kk, 0);
        // minor over the last popcount(mask) rows and the column subset mask
        std::function<const MultiPoly&(std::uint32_t)> rec =
            [&](std::uint32_t mask) -> const MultiPoly& {
            if (have[mask]) return memo[mask];
            int sz = __builtin_popcount(mask);
            if (sz == 0) {
                memo[mask] = MultiPoly::constant(n, 1, m.names());
                have[mask] = 1;
                return memo[mask];
            }
            int row = rs[kk - sz];
            MultiPoly acc(n, m.names());
            int sign = 1;
            for (int j = 0; j < kk; ++j) {
                if (!(mask & (1u << j))) continue;
                const MultiPoly& entry = m.at(row, cs[j]);
                if (!entry.is_zero()) {
                    const MultiPoly& sub = rec(mask & ~(1u << j));
                    MultiPoly prod = entry * sub;
                    if (sign < 0)
                        acc -= prod;
                    else
                        acc += prod;
                }
                sign = -sign;
            }
            memo[mask] = std::move(acc);
            have[mask] = 1;
            return memo[mask];
        };
        return rec((1u << kk) - 1);
    };

    std::function<void(int, int)> pick_cols = [&](int start, int need) {
        if (need == 0) {
            MultiPoly d = det_of(rsel, csel);
            if (!d.is_zero()) gens.push_back(d);
            return;
        }
        for (int c = start; c <= m.cols() - need; ++c) {
            csel.push_back(c);
            pick_cols(c + 1, need - 1);
            csel.pop_back();
        }
    };
    std::function<void(int, int)> pick_rows = [&](int start, int need) {
        if (need == 0) {
            pick_cols(0, k);
            return;
        }
        for (int r = start; r <= m.rows() - need; ++r) {
            rsel.push_back(r);
            pick_rows(r + 1, need - 1);
            rsel.pop_back();
        }
    };
    pick_rows(0, k);
    return Ideal(n, std::move(gens), m.names());
}

}  // namespace revar
