#pragma once

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "revar/linalg.hpp"
#include "revar/rational.hpp"

namespace revar {

/// One sparse product entry: (degree i, index a) * (degree j, index b) has the
/// given coefficient vector over the basis of degree i + j.
struct MuEntry {
    int di = 0, ai = 0, dj = 0, aj = 0;
    std::vector<Rational> value;
};

/// Finite commutative differential graded algebra, truncated at degree N.
/// Products are input on ordered basis pairs (i <= j positions); the
/// graded-commutativity completion is derived, never input. Immutable after
/// construction; validate() reports axiom violations instead of throwing.
class CDGA {
public:
    CDGA(int truncation, std::vector<std::vector<std::string>> labels,
         const std::vector<MuEntry>& mu_entries, std::vector<RatMatrix> differentials,
         std::optional<std::vector<std::vector<int>>> weights);

    int truncation() const { return N_; }
    int dim(int degree) const;
    const std::vector<std::string>& labels(int degree) const { return labels_[degree]; }
    const std::string& label(int degree, int idx) const { return labels_[degree][idx]; }

    /// d_i: degree i -> degree i+1, for 0 <= i < N.
    const RatMatrix& d(int i) const;

    bool has_weights() const { return weights_.has_value(); }
    int weight(int degree, int idx) const { return (*weights_)[degree][idx]; }
    const std::optional<std::vector<std::vector<int>>>& weights() const { return weights_; }

    /// Product of basis elements as a coefficient vector in degree i+j
    /// (requires i + j <= N). Unitality and graded commutativity are applied.
    std::vector<Rational> mu(int i, int a, int j, int b) const;

    /// Product of arbitrary vectors u in degree i and v in degree j.
    std::vector<Rational> mul(int i, std::span<const Rational> u, int j,
                              std::span<const Rational> v) const;

    /// Structural problems found while ingesting the input (bad indices,
    /// conflicting duplicate entries, ...). Surfaced through validate().
    const std::vector<std::string>& load_issues() const { return load_issues_; }

    const std::map<std::array<int, 4>, std::vector<Rational>>& stored_mu() const { return mu_; }

private:
    int N_;
    std::vector<std::vector<std::string>> labels_;
    std::map<std::array<int, 4>, std::vector<Rational>> mu_;  // canonical (i<j) or (i==j, a<=b)
    std::vector<RatMatrix> d_;
    std::optional<std::vector<std::vector<int>>> weights_;
    std::vector<std::string> load_issues_;
};

struct ValidationIssue {
    std::string axiom;   // connectedness | structure | unit | graded-commutativity |
                         // d-squared | leibniz | weights
    std::string detail;  // witnessing basis pair / entry
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    bool ok() const { return issues.empty(); }
};

ValidationReport validate(const CDGA& a);

struct CohomologyReport {
    int degree = 0;
    int dimension = 0;
    std::vector<std::vector<Rational>> representatives;  // cocycle vectors in degree-i coords
};

/// Exact kernel/image computation; requires i < N (d_i must exist).
CohomologyReport cohomology(const CDGA& a, int i);

/// Ordered rational basis of Z^1 = ker d_1 (reduced echelon form over the
/// fixed degree-one basis). On a connected CDGA this is canonically H^1.
std::vector<std::vector<Rational>> h1_cocycles(const CDGA& a);

/// Graded ring with zero differential; weights are set to the degree.
CDGA formal_from_ring(int truncation, std::vector<std::vector<std::string>> labels,
                      const std::vector<MuEntry>& products);

/// Discards all data above degree q (q <= N).
CDGA truncate(const CDGA& a, int q);

}  // namespace revar
