#include "revar/resonance.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "revar/rng.hpp"

namespace revar {

OmegaComplex omega_complex(const CDGA& a) {
    const int N = a.truncation();
    if (N < 2) throw std::invalid_argument("omega_complex: need truncation degree >= 2");
    OmegaComplex oc;
    oc.h1_basis = h1_cocycles(a);
    oc.b1 = static_cast<int>(oc.h1_basis.size());
    oc.names = VarNames::standard(oc.b1);
    for (int i = 0; i <= N; ++i) oc.dims.push_back(a.dim(i));

    for (int i = 0; i < N; ++i) {
        PolyMatrix D(a.dim(i + 1), a.dim(i), oc.b1, oc.names);
        const RatMatrix& di = a.d(i);
        for (int c = 0; c < a.dim(i); ++c) {
            for (int r = 0; r < a.dim(i + 1); ++r)
                if (!di.at(r, c).is_zero())
                    D.at(r, c) += MultiPoly::constant(oc.b1, di.at(r, c), oc.names);
            // t_j * (e_j . basis_c), the left multiplication part of d_w
            for (int j = 0; j < oc.b1; ++j) {
                std::vector<Rational> unit(a.dim(i), Rational(0));
                unit[c] = Rational(1);
                auto prod = a.mul(1, oc.h1_basis[j], i, unit);
                for (int r = 0; r < a.dim(i + 1); ++r)
                    if (!prod[r].is_zero())
                        D.at(r, c) += MultiPoly::monomial(
                            oc.b1, [&] { Exp e(oc.b1, 0); e[j] = 1; return e; }(), prod[r],
                            oc.names);
            }
        }
        oc.D.push_back(std::move(D));
    }
    for (int i = 0; i + 1 < N; ++i)
        if (!(oc.D[i + 1] * oc.D[i]).is_zero())
            throw std::domain_error(
                "omega_complex: D_{i+1} D_i != 0; the CDGA data is inconsistent (run validate)");
    return oc;
}

int betti_at(const OmegaComplex& oc, int i, std::span<const Rational> point) {
    if (i < 0 || i + 1 > static_cast<int>(oc.D.size()))
        throw std::out_of_range("betti_at: degree out of range (need i+1 <= N)");
    if (static_cast<int>(point.size()) != oc.b1)
        throw std::invalid_argument("betti_at: point arity mismatch");
    int rank_i = rank_at(oc.D[i], point);
    int rank_prev = i > 0 ? rank_at(oc.D[i - 1], point) : 0;
    return oc.dims[i] - rank_i - rank_prev;
}

namespace {

// Keeps one representative of equal ideals, then removes any component whose
// ideal contains a surviving one (smaller variety inside the union).
void prune_components(std::vector<LocusComponent>& comps, const GbLimits& lim) {
    std::vector<LocusComponent> kept;
    for (auto& c : comps) {
        if (c.ideal.is_unit(lim)) continue;
        bool dup = false;
        for (const auto& k : kept)
            if (k.ideal.same_ideal(c.ideal, lim)) {
                dup = true;
                break;
            }
        if (!dup) kept.push_back(std::move(c));
    }
    std::vector<char> drop(kept.size(), 0);
    for (std::size_t i = 0; i < kept.size(); ++i)
        for (std::size_t j = 0; j < kept.size(); ++j) {
            if (i == j || drop[j]) continue;
            if (kept[i].ideal.contains_ideal(kept[j].ideal, lim)) {
                drop[i] = 1;
                break;
            }
        }
    comps.clear();
    for (std::size_t i = 0; i < kept.size(); ++i)
        if (!drop[i]) comps.push_back(std::move(kept[i]));
}

}  // namespace

ResonanceLocus resonance_locus(const OmegaComplex& oc, int i, int r, const RunConfig& cfg) {
    if (i < 0 || i + 1 > static_cast<int>(oc.D.size()))
        throw std::out_of_range("resonance_locus: degree out of range (need i+1 <= N)");
    if (r < 0) throw std::out_of_range("resonance_locus: negative depth");
    ResonanceLocus locus;
    locus.degree = i;
    locus.depth = r;
    locus.ambient = oc.b1;
    locus.names = oc.names;

    const int ai = oc.dims[i];
    if (r == 0) {
        locus.components.push_back({Ideal::zero(oc.b1, oc.names), -1, -1});
        return locus;
    }
    if (r > ai) {
        locus.components.push_back({Ideal::unit(oc.b1, oc.names), -1, -1});
        return locus;
    }

    // D_{i-1} is the empty matrix in degree 0 (rank identically zero).
    PolyMatrix Dprev = i > 0 ? oc.D[i - 1] : PolyMatrix(ai, 0, oc.b1, oc.names);
    const PolyMatrix& Di = oc.D[i];
    for (int s = 0; s + r <= ai; ++s) {
        int u = ai - r - s;
        Ideal comp = ideal_sum(minors_ideal(Dprev, s + 1), minors_ideal(Di, u + 1));
        Ideal reduced(oc.b1, linear_interreduce(comp.generators(), MonomialOrder::grevlex()),
                      oc.names);
        locus.components.push_back({std::move(reduced), s, u});
    }
    prune_components(locus.components, cfg.limits);
    if (locus.components.empty())
        locus.components.push_back({Ideal::unit(oc.b1, oc.names), -1, -1});
    return locus;
}

bool member(const ResonanceLocus& locus, std::span<const Rational> point) {
    if (static_cast<int>(point.size()) != locus.ambient)
        throw std::invalid_argument("member: point arity mismatch");
    for (const auto& c : locus.components)
        if (c.ideal.vanishes_at(point)) return true;
    return false;
}

ResonanceLocus restrict_to_subspace(const ResonanceLocus& locus, const RatMatrix& B) {
    if (B.rows() != locus.ambient)
        throw std::invalid_argument("restrict_to_subspace: B must have b1 rows");
    const int k = B.cols();
    if (rat_rank(B) != k)
        throw std::invalid_argument("restrict_to_subspace: B must have full column rank");
    std::vector<std::string> names;
    for (int j = 1; j <= k; ++j) names.push_back("s" + std::to_string(j));
    NamesPtr nm = VarNames::make(std::move(names));
    std::vector<MultiPoly> images;
    images.reserve(locus.ambient);
    for (int i = 0; i < locus.ambient; ++i) {
        MultiPoly img(k, nm);
        for (int j = 0; j < k; ++j)
            if (!B.at(i, j).is_zero()) img += MultiPoly::variable(k, j, nm).scaled(B.at(i, j));
        images.push_back(std::move(img));
    }
    ResonanceLocus out;
    out.degree = locus.degree;
    out.depth = locus.depth;
    out.ambient = k;
    out.names = nm;
    for (const auto& c : locus.components) {
        std::vector<MultiPoly> gens;
        gens.reserve(c.ideal.generators().size());
        for (const auto& g : c.ideal.generators()) gens.push_back(g.substitute(images));
        Ideal ideal(k, std::move(gens), nm);
        if (ideal.is_unit()) continue;
        out.components.push_back({std::move(ideal), c.rank_d_prev, c.rank_d_i});
    }
    if (out.components.empty()) out.components.push_back({Ideal::unit(k, nm), -1, -1});
    return out;
}

IsolationVerdict is_zero_isolated(const std::vector<ResonanceLocus>& loci, const GbLimits& lim) {
    std::vector<Ideal> components;
    for (const auto& l : loci)
        for (const auto& c : l.components) components.push_back(c.ideal);
    return zero_isolation(components, lim);
}

FinitenessResult decide_finiteness(const CDGA& a, int q, const std::optional<RatMatrix>& subspace,
                                   const RunConfig& cfg) {
    if (q < 0 || q + 1 > a.truncation())
        throw std::out_of_range("decide_finiteness: need q+1 <= truncation degree");
    OmegaComplex oc = omega_complex(a);
    FinitenessResult res;
    for (int i = 0; i <= q; ++i) {
        ResonanceLocus l = resonance_locus(oc, i, 1, cfg);
        if (subspace) l = restrict_to_subspace(l, *subspace);
        res.loci.push_back(std::move(l));
    }
    res.verdict = is_zero_isolated(res.loci, cfg.limits);
    res.finite = res.verdict.isolated;
    return res;
}

namespace {

// c independent random linear forms through 0, coefficients in [-9, 9].
std::vector<MultiPoly> random_slice(SeededRng& rng, int c, int n, const NamesPtr& names) {
    std::vector<std::vector<Rational>> rows;
    int attempts = 0;
    while (static_cast<int>(rows.size()) < c) {
        if (++attempts > 1000)
            throw std::runtime_error("local_dimension_at_zero: could not draw independent forms");
        std::vector<Rational> row;
        row.reserve(n);
        for (int i = 0; i < n; ++i) row.push_back(Rational(rng.int_in(-9, 9)));
        rows.push_back(row);
        if (rat_rank(RatMatrix::from_rows(rows)) < static_cast<int>(rows.size())) rows.pop_back();
    }
    std::vector<MultiPoly> forms;
    for (const auto& row : rows) {
        MultiPoly f(n, names);
        for (int i = 0; i < n; ++i)
            if (!row[i].is_zero()) f += MultiPoly::variable(n, i, names).scaled(row[i]);
        forms.push_back(std::move(f));
    }
    return forms;
}

}  // namespace

LocalDimension local_dimension_at_zero(const ResonanceLocus& locus, const RunConfig& cfg) {
    std::vector<Rational> origin(locus.ambient, Rational(0));
    if (!member(locus, origin))
        throw std::invalid_argument("local_dimension_at_zero: 0 is not in the locus");
    LocalDimension out;
    const int n = locus.ambient;
    for (int trial = 0; trial < 3; ++trial) {
        SeededRng rng(cfg.seed + static_cast<std::uint64_t>(trial) * 0x9e3779b97f4a7c15ULL);
        int answer = n;
        for (int c = 0; c <= n; ++c) {
            std::vector<Ideal> sliced;
            if (c == 0) {
                for (const auto& comp : locus.components) sliced.push_back(comp.ideal);
            } else {
                auto forms = random_slice(rng, c, n, locus.names);
                Ideal cut(n, forms, locus.names);
                for (const auto& comp : locus.components)
                    sliced.push_back(ideal_sum(comp.ideal, cut));
            }
            if (zero_isolation(sliced, cfg.limits).isolated) {
                answer = c;
                break;
            }
        }
        out.per_seed[trial] = answer;
    }
    out.dimension = std::max({out.per_seed[0], out.per_seed[1], out.per_seed[2]});
    out.seeds_disagree =
        !(out.per_seed[0] == out.per_seed[1] && out.per_seed[1] == out.per_seed[2]);
    return out;
}

bool weight_equivariance_check(const CDGA& a, const ResonanceLocus& locus, const Rational& s,
                               const GbLimits& lim) {
    if (s.is_zero()) throw std::invalid_argument("weight_equivariance_check: s must be nonzero");
    if (!a.has_weights())
        throw std::invalid_argument("weight_equivariance_check: CDGA carries no weights");
    auto basis = h1_cocycles(a);
    if (static_cast<int>(basis.size()) != locus.ambient)
        throw std::invalid_argument("weight_equivariance_check: locus/CDGA mismatch");
    std::vector<Rational> factors;
    factors.reserve(basis.size());
    for (const auto& v : basis) {
        int w = 0;
        bool found = false;
        for (std::size_t k = 0; k < v.size(); ++k) {
            if (v[k].is_zero()) continue;
            int wk = a.weight(1, static_cast<int>(k));
            if (!found) {
                w = wk;
                found = true;
            } else if (wk != w) {
                throw std::domain_error(
                    "weight_equivariance_check: inhomogeneous cocycle basis vector");
            }
        }
        factors.push_back(s.pow(found ? w : 1));
    }
    for (const auto& comp : locus.components)
        for (const auto& g : comp.ideal.generators())
            if (!comp.ideal.contains(g.scale_vars(factors), lim)) return false;
    return true;
}

namespace {

MultiPoly univariate_gcd(std::vector<MultiPoly> polys, const MonomialOrder& ord) {
    MultiPoly g;
    bool first = true;
    for (auto& p : polys) {
        if (p.is_zero()) continue;
        if (first) {
            g = p;
            first = false;
            continue;
        }
        MultiPoly a = g, b = p;
        while (!b.is_zero()) {
            MultiPoly r = divide_single(a, b, ord).second;
            a = b;
            b = r;
        }
        g = a;
    }
    if (!g.is_zero()) g = g.scaled(g.leading_term(ord).second.inverse());
    return g;
}

}  // namespace

std::vector<LineProbeEntry> line_probe(const ResonanceLocus& locus, std::span<const Rational> v) {
    if (static_cast<int>(v.size()) != locus.ambient)
        throw std::invalid_argument("line_probe: direction arity mismatch");
    bool nonzero = false;
    for (const auto& x : v) nonzero = nonzero || !x.is_zero();
    if (!nonzero) throw std::invalid_argument("line_probe: zero direction");

    NamesPtr nm = VarNames::make({"s"});
    std::vector<MultiPoly> images;
    images.reserve(locus.ambient);
    for (int i = 0; i < locus.ambient; ++i)
        images.push_back(MultiPoly::variable(1, 0, nm).scaled(v[i]));

    const MonomialOrder ord = MonomialOrder::grevlex();
    std::vector<LineProbeEntry> out;
    for (const auto& comp : locus.components) {
        std::vector<MultiPoly> restricted;
        bool all_zero = true;
        for (const auto& g : comp.ideal.generators()) {
            MultiPoly r = g.substitute(images);
            all_zero = all_zero && r.is_zero();
            restricted.push_back(std::move(r));
        }
        LineProbeEntry entry;
        if (all_zero && !comp.ideal.is_zero_ideal()) {
            entry.line_contained = true;
        } else if (comp.ideal.is_zero_ideal()) {
            entry.line_contained = true;  // whole-space component
        } else {
            MultiPoly g = univariate_gcd(std::move(restricted), ord);
            int order = 0;
            if (!g.is_zero()) {
                order = std::numeric_limits<int>::max();
                for (const auto& [e, c] : g.terms()) order = std::min(order, static_cast<int>(e[0]));
            }
            entry.vanishing_order = order;
        }
        out.push_back(entry);
    }
    return out;
}

}  // namespace revar
