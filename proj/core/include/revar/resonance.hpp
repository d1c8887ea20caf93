#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "revar/cdga.hpp"
#include "revar/config.hpp"
#include "revar/ideal.hpp"
#include "revar/isolation.hpp"
#include "revar/poly_matrix.hpp"

namespace revar {

/// The family of twisted differentials d_w(a) = d a + w.a over w = sum t_j e_j,
/// with e_1..e_b1 the canonical Z^1 basis. Entries of each D_i are affine
/// linear in t; D_{i+1} D_i = 0 holds identically (verified on construction).
struct OmegaComplex {
    int b1 = 0;
    NamesPtr names;                                // t1..t_b1
    std::vector<std::vector<Rational>> h1_basis;   // cocycle vectors in A^1 coordinates
    std::vector<PolyMatrix> D;                     // D[i]: dim(i+1) x dim(i), 0 <= i < N
    std::vector<int> dims;                         // a_0..a_N
};

OmegaComplex omega_complex(const CDGA& a);

/// dim H^i(A, d_w) at a rational point w.
int betti_at(const OmegaComplex& oc, int i, std::span<const Rational> point);

struct LocusComponent {
    Ideal ideal;
    int rank_d_prev = -1;  // s in the producing splitting s + u = a_i - r
    int rank_d_i = -1;     // u; (-1, -1) marks the degenerate whole-space/empty cases
};

/// R^i_r(A) as a finite union of determinantal component ideals.
struct ResonanceLocus {
    int degree = 0;
    int depth = 0;
    int ambient = 0;  // b1
    NamesPtr names;
    std::vector<LocusComponent> components;
};

/// Union over splittings s+u = a_i - r of minors(D_{i-1}, s+1) + minors(D_i, u+1),
/// pruned: unit components are dropped, as is any component whose ideal
/// contains another's (its variety is swallowed by the union).
ResonanceLocus resonance_locus(const OmegaComplex& oc, int i, int r, const RunConfig& cfg = {});

bool member(const ResonanceLocus& locus, std::span<const Rational> point);

/// Pulls the locus back through t = B s for a full-column-rank b1 x k matrix B.
ResonanceLocus restrict_to_subspace(const ResonanceLocus& locus, const RatMatrix& B);

IsolationVerdict is_zero_isolated(const std::vector<ResonanceLocus>& loci,
                                  const GbLimits& lim = {});

struct FinitenessResult {
    bool finite = false;
    IsolationVerdict verdict;
    std::vector<ResonanceLocus> loci;  // restricted when a subspace was given
};

/// Decides whether 0 is isolated in the union of R^i_1 for i <= q (restricted
/// to im(B) when B is given); true is the finite-dimensionality verdict for
/// the completed Alexander-type invariants of any space modeled by A to level q.
FinitenessResult decide_finiteness(const CDGA& a, int q, const std::optional<RatMatrix>& subspace,
                                   const RunConfig& cfg = {});

struct LocalDimension {
    int dimension = 0;
    bool seeds_disagree = false;
    std::array<int, 3> per_seed{0, 0, 0};
};

/// Smallest c such that c seeded generic hyperplanes through 0 isolate it;
/// repeated with 3 seeds (max reported, disagreement flagged). Monte Carlo
/// with one-sided genericity failure.
LocalDimension local_dimension_at_zero(const ResonanceLocus& locus, const RunConfig& cfg = {});

/// Checks that t_j -> s^{w_j} t_j maps every component ideal into itself,
/// w_j the weight of the j-th cocycle basis vector. Exact for rational s != 0.
bool weight_equivariance_check(const CDGA& a, const ResonanceLocus& locus, const Rational& s,
                               const GbLimits& lim = {});

struct LineProbeEntry {
    bool line_contained = false;
    int vanishing_order = -1;  // order of the generator gcd at s = 0; -1 when contained
};

/// Restricts each component to the line {s v}; a directional diagnostic only.
std::vector<LineProbeEntry> line_probe(const ResonanceLocus& locus,
                                       std::span<const Rational> v);

}  // namespace revar
