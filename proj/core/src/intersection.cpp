#include "revar/intersection.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "revar/rng.hpp"

namespace revar {

IntersectionData make_intersection_data(const CompactificationData& data,
                                        const RatMatrix& pairing) {
    const int n = static_cast<int>(data.divisors.size());
    if (pairing.rows() != n || pairing.cols() != n)
        throw std::invalid_argument("intersection matrix must be indexed by the divisors");
    if (!pairing.is_symmetric())
        throw std::invalid_argument("intersection matrix must be symmetric");
    IntersectionData out;
    out.size = n;
    out.pairing = pairing;

    std::vector<std::vector<int>> adj(n);
    for (const auto& [key, h0] : data.pair_h0) {
        if (h0 <= 0) continue;
        adj[key.first].push_back(key.second);
        adj[key.second].push_back(key.first);
    }
    std::vector<char> seen(n, 0);
    for (int start = 0; start < n; ++start) {
        if (seen[start]) continue;
        std::vector<int> comp;
        std::queue<int> q;
        q.push(start);
        seen[start] = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            comp.push_back(v);
            for (int w : adj[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    q.push(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        out.blocks.push_back(std::move(comp));
    }
    return out;
}

std::string definiteness_name(Definiteness d) {
    switch (d) {
        case Definiteness::PositiveDefinite:
            return "positive-definite";
        case Definiteness::NegativeDefinite:
            return "negative-definite";
        case Definiteness::Indefinite:
            return "indefinite";
        case Definiteness::Degenerate:
            return "degenerate";
    }
    return "?";
}

DefinitenessVerdict is_definite(const RatMatrix& block) {
    if (!block.is_symmetric()) throw std::invalid_argument("is_definite: matrix not symmetric");
    DefinitenessVerdict v;
    const int n = block.rows();
    std::vector<int> idx;
    bool pos = true, neg = true, degenerate = false;
    for (int k = 1; k <= n; ++k) {
        idx.push_back(k - 1);
        Rational minor = rat_det(block.submatrix(idx, idx));
        v.leading_minors.push_back(minor);
        if (minor.is_zero()) degenerate = true;
        if (minor.sign() <= 0) pos = false;
        if ((k % 2 == 1 && minor.sign() >= 0) || (k % 2 == 0 && minor.sign() <= 0)) neg = false;
    }
    if (degenerate)
        v.kind = Definiteness::Degenerate;
    else if (pos)
        v.kind = Definiteness::PositiveDefinite;
    else if (neg)
        v.kind = Definiteness::NegativeDefinite;
    else
        v.kind = Definiteness::Indefinite;
    return v;
}

std::vector<std::pair<std::vector<int>, RatMatrix>> blocks(const IntersectionData& data) {
    std::vector<std::pair<std::vector<int>, RatMatrix>> out;
    for (const auto& comp : data.blocks)
        out.push_back({comp, data.pairing.submatrix(comp, comp)});
    return out;
}

IsoUnderBlocksResult check_h1_iso_under_invertible_blocks(const CompactificationData& data,
                                                          const RatMatrix& pairing) {
    IsoUnderBlocksResult res;
    IntersectionData idata = make_intersection_data(data, pairing);
    for (const auto& [indices, block] : blocks(idata)) {
        if (rat_det(block).is_zero()) {
            res.status = CheckStatus::HypothesisUnmet;
            std::ostringstream os;
            os << "block {";
            for (std::size_t i = 0; i < indices.size(); ++i)
                os << (i ? "," : "") << data.divisors[indices[i]].label;
            os << "} is not invertible";
            res.note = os.str();
            return res;
        }
    }
    bool iso = h1_iso_check(data);
    GysinCDGA model = build_gysin(data);
    int z1 = static_cast<int>(h1_cocycles(model.algebra).size());
    res.value = iso && z1 == data.b1;
    if (!res.value)
        res.note = "hypothesis met but the model contradicts it: inconsistent input data";
    return res;
}

namespace {

// D_1 of the model with w restricted to the ambient H^1 span (parameters
// u1..u_b1 over the eta basis vectors only).
PolyMatrix ambient_restricted_d1(const GysinCDGA& model) {
    const CDGA& a = model.algebra;
    const int b1 = model.b1;
    NamesPtr names = VarNames::make([&] {
        std::vector<std::string> v;
        for (int i = 1; i <= b1; ++i) v.push_back("u" + std::to_string(i));
        return v;
    }());
    PolyMatrix D(a.dim(2), a.dim(1), b1, names);
    const RatMatrix& d1 = a.d(1);
    for (int c = 0; c < a.dim(1); ++c) {
        for (int r = 0; r < a.dim(2); ++r)
            if (!d1.at(r, c).is_zero())
                D.at(r, c) += MultiPoly::constant(b1, d1.at(r, c), names);
        for (int j = 0; j < b1; ++j) {
            std::vector<Rational> eta(a.dim(1), Rational(0)), unit(a.dim(1), Rational(0));
            eta[j] = Rational(1);
            unit[c] = Rational(1);
            auto prod = a.mul(1, eta, 1, unit);
            for (int r = 0; r < a.dim(2); ++r)
                if (!prod[r].is_zero()) {
                    Exp e(b1, 0);
                    e[j] = 1;
                    D.at(r, c) += MultiPoly::monomial(b1, e, prod[r], names);
                }
        }
    }
    return D;
}

}  // namespace

BVanishingReport verify_b_vanishing(const GysinCDGA& model, const RunConfig& cfg) {
    BVanishingReport rep;
    const int b1 = model.b1;
    const int nd = model.num_divisors();
    PolyMatrix D = ambient_restricted_d1(model);

    rep.symbolic_pass = true;
    for (const auto& v : symbolic_kernel(D))
        for (int j = 0; j < nd; ++j)
            if (!v[b1 + j].is_zero()) {
                rep.symbolic_pass = false;
                rep.witnesses.push_back("generic kernel vector with nonzero coordinate at " +
                                        model.algebra.label(1, b1 + j));
            }

    SeededRng rng(cfg.seed);
    rep.samples = cfg.samples;
    rep.sampled_pass = true;
    for (int s = 0; s < cfg.samples; ++s) {
        std::vector<Rational> w;
        w.reserve(b1);
        // alternate general small rationals and dyadic points near 0
        for (int i = 0; i < b1; ++i)
            w.push_back(s % 2 == 0 ? rng.rational(8, 8) : rng.small_dyadic(4, 8));
        RatMatrix M = D.evaluate(w);
        for (const auto& v : rat_kernel(M)) {
            for (int j = 0; j < nd; ++j) {
                if (!v[b1 + j].is_zero()) {
                    rep.sampled_pass = false;
                    std::ostringstream os;
                    os << "sample " << s << ": kernel vector with nonzero "
                       << model.algebra.label(1, b1 + j) << " coordinate at w = (";
                    for (int i = 0; i < b1; ++i) os << (i ? "," : "") << w[i].str();
                    os << ")";
                    rep.witnesses.push_back(os.str());
                    break;
                }
            }
        }
    }
    return rep;
}

CDGA ambient_formal_ring(const CompactificationData& data) {
    std::vector<std::string> deg1, deg2;
    for (int a = 0; a < data.b1; ++a) deg1.push_back("x" + std::to_string(a + 1));
    for (int k = 0; k < data.b2; ++k) deg2.push_back("f" + std::to_string(k + 1));
    std::vector<MuEntry> mu;
    for (const auto& [key, value] : data.cup) {
        bool nonzero = false;
        for (const auto& c : value) nonzero = nonzero || !c.is_zero();
        if (nonzero) mu.push_back({1, key.first, 1, key.second, value});
    }
    return formal_from_ring(2, {{"1"}, deg1, deg2}, mu);
}

namespace {

// Indices of the model's cocycle basis expressed over that basis, for each
// ambient eta_a (always solvable: every eta is closed).
RatMatrix ambient_identification(const GysinCDGA& model) {
    auto kernel = h1_cocycles(model.algebra);
    const int k = static_cast<int>(kernel.size());
    const int a1 = model.algebra.dim(1);
    // Solve K c = e_a for each a < b1 where K's columns are the kernel basis.
    RatMatrix K(a1, k);
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < a1; ++i) K.at(i, j) = kernel[j][i];
    RatMatrix aug(a1, k + model.b1);
    for (int i = 0; i < a1; ++i) {
        for (int j = 0; j < k; ++j) aug.at(i, j) = K.at(i, j);
        for (int a = 0; a < model.b1; ++a) aug.at(i, k + a) = Rational(i == a ? 1 : 0);
    }
    std::vector<int> pivots;
    RatMatrix r = rat_rref(aug, &pivots);
    RatMatrix B(k, model.b1);
    for (int a = 0; a < model.b1; ++a) {
        for (std::size_t p = 0; p < pivots.size(); ++p) {
            if (pivots[p] >= k)
                throw std::logic_error("ambient identification: eta not in the cocycle span");
            B.at(pivots[p], a) = r.at(static_cast<int>(p), k + a);
        }
    }
    return B;
}

Ideal union_saturated_ideal(const ResonanceLocus& locus, const GbLimits& lim) {
    std::vector<Ideal> sats;
    for (const auto& c : locus.components) {
        if (c.ideal.is_unit(lim)) continue;
        sats.push_back(saturate_at_origin(c.ideal, lim));
    }
    if (sats.empty()) return Ideal::unit(locus.ambient, locus.names);
    Ideal acc = sats[0];
    for (std::size_t i = 1; i < sats.size(); ++i) acc = intersect(acc, sats[i], lim);
    return acc;
}

}  // namespace

Thm12Report thm12_pipeline(const CompactificationData& data, const RatMatrix& pairing, int rmax,
                           bool ignore_hypothesis, const RunConfig& cfg) {
    if (rmax < 1) throw std::invalid_argument("thm12_pipeline: rmax must be >= 1");
    Thm12Report rep;
    IntersectionData idata = make_intersection_data(data, pairing);
    rep.hypothesis_met = true;
    for (const auto& [indices, block] : blocks(idata)) {
        DefinitenessVerdict v = is_definite(block);
        if (v.kind != Definiteness::PositiveDefinite && v.kind != Definiteness::NegativeDefinite)
            rep.hypothesis_met = false;
        rep.block_verdicts.push_back({indices, std::move(v)});
    }
    if (!rep.hypothesis_met && !ignore_hypothesis) return rep;
    rep.forced = !rep.hypothesis_met;
    rep.ran = true;

    GysinCDGA model = build_gysin(data);
    CDGA formal = ambient_formal_ring(data);
    OmegaComplex ocA = omega_complex(model.algebra);
    OmegaComplex ocF = omega_complex(formal);
    RatMatrix B = ambient_identification(model);

    rep.overall_match = true;
    std::vector<Rational> originF(data.b1, Rational(0));
    for (int r = 1; r <= rmax; ++r) {
        Thm12PerDepth row;
        row.r = r;
        ResonanceLocus locA = restrict_to_subspace(resonance_locus(ocA, 1, r, cfg), B);
        ResonanceLocus locF = resonance_locus(ocF, 1, r, cfg);
        row.contains_zero_model = member(locA, originF);
        row.contains_zero_formal = member(locF, originF);

        Ideal satA = union_saturated_ideal(locA, cfg.limits);
        Ideal satF = union_saturated_ideal(locF, cfg.limits);
        row.strong_match =
            row.contains_zero_model == row.contains_zero_formal && satA.same_ideal(satF, cfg.limits);

        SeededRng rng(cfg.seed + static_cast<std::uint64_t>(r));
        row.sampled_match = row.contains_zero_model == row.contains_zero_formal;
        for (int s = 0; s < cfg.samples && row.sampled_match; ++s) {
            std::vector<Rational> p;
            p.reserve(data.b1);
            for (int i = 0; i < data.b1; ++i) p.push_back(rng.small_dyadic(4, 10));
            if (member(locA, p) != member(locF, p)) row.sampled_match = false;
        }
        row.match = row.strong_match || row.sampled_match;
        if (!row.match) {
            rep.overall_match = false;
            if (row.contains_zero_model)
                row.local_dim_model = local_dimension_at_zero(locA, cfg).dimension;
            if (row.contains_zero_formal)
                row.local_dim_formal = local_dimension_at_zero(locF, cfg).dimension;
        }
        rep.per_depth.push_back(std::move(row));
    }
    return rep;
}

}  // namespace revar
