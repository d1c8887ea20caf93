#pragma once

#include <string>
#include <vector>

#include "revar/config.hpp"
#include "revar/gysin.hpp"
#include "revar/resonance.hpp"

namespace revar {

/// Intersection matrix of the divisor components together with the partition
/// of the index set into connected components of the adjacency graph
/// (nonempty pairwise intersection).
struct IntersectionData {
    int size = 0;
    RatMatrix pairing;                       // symmetric (D_i . D_j)
    std::vector<std::vector<int>> blocks;    // connected components, ordered by least index
};

IntersectionData make_intersection_data(const CompactificationData& data,
                                        const RatMatrix& pairing);

enum class Definiteness { PositiveDefinite, NegativeDefinite, Indefinite, Degenerate };
std::string definiteness_name(Definiteness d);

struct DefinitenessVerdict {
    Definiteness kind = Definiteness::Degenerate;
    std::vector<Rational> leading_minors;
};

/// Sylvester's criterion on exact leading principal minors. Any zero leading
/// minor yields Degenerate (no permutation repair is attempted).
DefinitenessVerdict is_definite(const RatMatrix& block);

std::vector<std::pair<std::vector<int>, RatMatrix>> blocks(const IntersectionData& data);

enum class CheckStatus { Ok, HypothesisUnmet };

struct IsoUnderBlocksResult {
    CheckStatus status = CheckStatus::Ok;
    bool value = false;  // meaningful for status Ok
    std::string note;
};

/// Under invertible blocks (nonzero determinants), asserts that the divisor
/// classes are independent and dim Z^1 of the built model equals b1. A false
/// value under the hypothesis indicates inconsistent input data.
IsoUnderBlocksResult check_h1_iso_under_invertible_blocks(const CompactificationData& data,
                                                          const RatMatrix& pairing);

struct BVanishingReport {
    bool symbolic_pass = false;  // generic kernel has zero divisor coordinates
    bool sampled_pass = false;
    int samples = 0;
    std::vector<std::string> witnesses;  // failing points / kernel vectors
};

/// Both checks behind the vanishing lemma for the divisor coordinates of
/// d_w-cocycles, with w restricted to the ambient H^1 span. The caller is
/// responsible for recording whether the definite-blocks hypothesis holds.
BVanishingReport verify_b_vanishing(const GysinCDGA& model, const RunConfig& cfg = {});

struct Thm12PerDepth {
    int r = 0;
    bool contains_zero_model = false;
    bool contains_zero_formal = false;
    bool strong_match = false;   // origin-saturated ideals agree (and 0-membership)
    bool sampled_match = false;  // membership agreement near 0
    bool match = false;          // strong or sampled
    int local_dim_model = -1;    // filled when the depths mismatch, -1 otherwise
    int local_dim_formal = -1;
};

struct Thm12Report {
    std::vector<std::pair<std::vector<int>, DefinitenessVerdict>> block_verdicts;
    bool hypothesis_met = false;
    bool forced = false;  // ran despite an unmet hypothesis
    bool ran = false;
    std::vector<Thm12PerDepth> per_depth;
    bool overall_match = false;
};

/// Germ comparison of the degree-one resonance loci of the built model and of
/// the ambient cohomology ring with zero differential, identified through the
/// inclusion of the ambient H^1 into Z^1 of the model.
Thm12Report thm12_pipeline(const CompactificationData& data, const RatMatrix& pairing, int rmax,
                           bool ignore_hypothesis, const RunConfig& cfg = {});

/// The ambient cohomology ring (degrees 0..2) with zero differential.
CDGA ambient_formal_ring(const CompactificationData& data);

}  // namespace revar
