#include "revar/groebner.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <set>

namespace revar {

MultiPoly normal_form(const MultiPoly& p, std::span<const MultiPoly> basis,
                      const MonomialOrder& ord) {
    struct Lead {
        Exp e;
        Rational c;
    };
    std::vector<Lead> leads;
    leads.reserve(basis.size());
    for (const auto& g : basis) {
        if (g.is_zero()) {
            leads.push_back({});
            continue;
        }
        auto [e, c] = g.leading_term(ord);
        leads.push_back({std::move(e), std::move(c)});
    }
    MultiPoly r(p.nvars(), p.names());
    MultiPoly work = p;
    while (!work.is_zero()) {
        auto [lt, lc] = work.leading_term(ord);
        bool reduced = false;
        for (std::size_t k = 0; k < basis.size(); ++k) {
            if (basis[k].is_zero()) continue;
            if (!exp_divides(leads[k].e, lt)) continue;
            work -= basis[k].times_monomial(exp_sub(lt, leads[k].e), lc / leads[k].c);
            reduced = true;
            break;
        }
        if (!reduced) {
            r.add_term(lt, lc);
            work.add_term(lt, -lc);
        }
    }
    return r;
}

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g, const MonomialOrder& ord) {
    auto [ef, cf] = f.leading_term(ord);
    auto [eg, cg] = g.leading_term(ord);
    Exp l = exp_lcm(ef, eg);
    return f.times_monomial(exp_sub(l, ef), cf.inverse()) -
           g.times_monomial(exp_sub(l, eg), cg.inverse());
}

std::vector<MultiPoly> normalize_generators(std::vector<MultiPoly> gens, const MonomialOrder& ord) {
    std::vector<MultiPoly> out;
    out.reserve(gens.size());
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        out.push_back(g.normalized(ord));
    }
    std::sort(out.begin(), out.end(), [&](const MultiPoly& a, const MultiPoly& b) {
        auto ta = a.terms_sorted(ord), tb = b.terms_sorted(ord);
        for (std::size_t i = 0; i < std::min(ta.size(), tb.size()); ++i) {
            if (int c = ord.cmp(ta[i].first, tb[i].first)) return c > 0;
            if (ta[i].second != tb[i].second) return ta[i].second < tb[i].second;
        }
        return ta.size() < tb.size();
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<MultiPoly> linear_interreduce(const std::vector<MultiPoly>& gens,
                                          const MonomialOrder& ord) {
    std::vector<MultiPoly> in;
    for (const auto& g : gens)
        if (!g.is_zero()) in.push_back(g);
    if (in.size() <= 1) return in;
    // Column order: monomials descending.
    std::set<Exp, std::function<bool(const Exp&, const Exp&)>> monos(
        [&](const Exp& a, const Exp& b) { return ord.greater(a, b); });
    for (const auto& g : in)
        for (const auto& [e, c] : g.terms()) monos.insert(e);
    std::vector<Exp> cols(monos.begin(), monos.end());
    std::map<Exp, int> col_of;
    for (std::size_t j = 0; j < cols.size(); ++j) col_of[cols[j]] = static_cast<int>(j);
    // Gaussian elimination keeping one row per leading column.
    std::map<int, std::vector<Rational>> rows;  // pivot column -> reduced row
    auto reduce_row = [&](std::vector<Rational> row) {
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (row[j].is_zero()) continue;
            auto it = rows.find(static_cast<int>(j));
            if (it == rows.end()) {
                Rational inv = row[j].inverse();
                for (auto& x : row) x *= inv;
                rows.emplace(static_cast<int>(j), std::move(row));
                return;
            }
            Rational f = row[j];
            for (std::size_t k = j; k < cols.size(); ++k) row[k] -= f * it->second[k];
        }
    };
    for (const auto& g : in) {
        std::vector<Rational> row(cols.size(), Rational(0));
        for (const auto& [e, c] : g.terms()) row[col_of[e]] = c;
        reduce_row(std::move(row));
    }
    std::vector<MultiPoly> out;
    out.reserve(rows.size());
    int n = in[0].nvars();
    for (const auto& [pivot, row] : rows) {
        MultiPoly p(n, in[0].names());
        for (std::size_t j = 0; j < cols.size(); ++j)
            if (!row[j].is_zero()) p.add_term(cols[j], row[j]);
        out.push_back(p.normalized(ord));
    }
    return out;
}

namespace {

struct PairKey {
    int degree;  // total degree of the lcm
    Exp lcm;
    int i, j;
};

struct PairLess {
    const MonomialOrder* ord;
    bool operator()(const PairKey& a, const PairKey& b) const {
        if (a.degree != b.degree) return a.degree < b.degree;
        if (int c = ord->cmp(a.lcm, b.lcm)) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }
};

}  // namespace

std::vector<MultiPoly> groebner_basis(std::vector<MultiPoly> gens, const MonomialOrder& ord,
                                      const GbLimits& lim, const std::string& label) {
    auto deadline_start = std::chrono::steady_clock::now();
    auto check_time = [&]() {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - deadline_start)
                      .count();
        if (ms > lim.max_millis) throw ResourceLimitError("wall time", label);
    };

    std::vector<MultiPoly> basis = normalize_generators(std::move(gens), ord);
    if (basis.empty()) return basis;  // the zero ideal
    if (basis.size() > 8) basis = linear_interreduce(basis, ord);
    for (const auto& g : basis)
        if (g.is_constant()) return {MultiPoly::constant(g.nvars(), 1, g.names())};

    std::vector<Exp> lead;
    lead.reserve(basis.size());
    for (const auto& g : basis) lead.push_back(g.leading_term(ord).first);

    std::set<PairKey, PairLess> pending{PairLess{&ord}};
    std::set<std::pair<int, int>> in_queue;
    auto push_pair = [&](int i, int j) {
        Exp l = exp_lcm(lead[i], lead[j]);
        pending.insert({exp_total_degree(l), l, i, j});
        in_queue.insert({i, j});
    };
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j)
            push_pair(static_cast<int>(i), static_cast<int>(j));

    while (!pending.empty()) {
        check_time();
        PairKey pk = *pending.begin();
        pending.erase(pending.begin());
        in_queue.erase({pk.i, pk.j});

        // Buchberger 1: coprime leading terms.
        if (pk.lcm == exp_add(lead[pk.i], lead[pk.j])) continue;
        // Buchberger 2 (chain): some k divides the lcm and both mixed pairs
        // are no longer pending. Every index pair enters the queue exactly
        // once, so "not pending" means already treated.
        bool chained = false;
        for (std::size_t k = 0; k < basis.size() && !chained; ++k) {
            if (static_cast<int>(k) == pk.i || static_cast<int>(k) == pk.j) continue;
            if (!exp_divides(lead[k], pk.lcm)) continue;
            auto p1 = std::minmax(pk.i, static_cast<int>(k));
            auto p2 = std::minmax(pk.j, static_cast<int>(k));
            if (!in_queue.count({p1.first, p1.second}) && !in_queue.count({p2.first, p2.second}))
                chained = true;
        }
        if (chained) continue;

        MultiPoly h = normal_form(s_polynomial(basis[pk.i], basis[pk.j], ord), basis, ord);
        if (h.is_zero()) continue;
        h = h.normalized(ord);
        if (h.is_constant()) return {MultiPoly::constant(h.nvars(), 1, h.names())};
        if (h.total_degree() > lim.max_degree) throw ResourceLimitError("degree cap", label);
        basis.push_back(h);
        lead.push_back(h.leading_term(ord).first);
        if (basis.size() > lim.max_basis) throw ResourceLimitError("basis size", label);
        int newi = static_cast<int>(basis.size()) - 1;
        for (int i = 0; i < newi; ++i) push_pair(i, newi);
    }

    // Minimalize: drop elements whose lead is divisible by another kept lead.
    std::vector<char> keep(basis.size(), 1);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = 0; j < basis.size() && keep[i]; ++j) {
            if (i == j || !keep[j]) continue;
            if (exp_divides(lead[j], lead[i]) && lead[j] != lead[i]) keep[i] = 0;
            if (lead[j] == lead[i] && j < i) keep[i] = 0;
        }
    }
    std::vector<MultiPoly> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (keep[i]) minimal.push_back(basis[i]);

    // Tail-reduce each element against the others and make leads monic.
    std::vector<MultiPoly> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<MultiPoly> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        MultiPoly g = normal_form(minimal[i], others, ord);
        if (g.is_zero()) continue;
        reduced.push_back(g.scaled(g.leading_term(ord).second.inverse()));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const MultiPoly& a, const MultiPoly& b) {
        return ord.less(a.leading_term(ord).first, b.leading_term(ord).first);
    });
    return reduced;
}

bool is_groebner_basis(std::span<const MultiPoly> basis, const MonomialOrder& ord) {
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            if (basis[i].is_zero() || basis[j].is_zero()) continue;
            MultiPoly s = s_polynomial(basis[i], basis[j], ord);
            if (!normal_form(s, basis, ord).is_zero()) return false;
        }
    return true;
}

}  // namespace revar
