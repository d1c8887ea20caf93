#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "revar/poly.hpp"

namespace revar {

/// Caps on basis growth; exceeding one raises ResourceLimitError instead of
/// ever returning a partial or wrong answer.
struct GbLimits {
    std::size_t max_basis = 4000;
    int max_degree = 64;
    std::int64_t max_millis = 120000;
};

class ResourceLimitError : public std::runtime_error {
public:
    ResourceLimitError(const std::string& what, const std::string& ideal_label)
        : std::runtime_error("resource limit exceeded (" + what + ") while processing " +
                             (ideal_label.empty() ? "ideal" : ideal_label)),
          ideal_label_(ideal_label) {}
    const std::string& ideal_label() const { return ideal_label_; }

private:
    std::string ideal_label_;
};

/// Remainder of multivariate division of p by the given (not necessarily
/// Groebner) family; zero iff p lies in the ideal when the family is a GB.
MultiPoly normal_form(const MultiPoly& p, std::span<const MultiPoly> basis,
                      const MonomialOrder& ord);

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g, const MonomialOrder& ord);

/// Buchberger with product/chain criteria. The result is the reduced Groebner
/// basis: monic leading terms, tails in normal form, sorted ascending by
/// leading monomial. Deterministic for fixed inputs.
std::vector<MultiPoly> groebner_basis(std::vector<MultiPoly> gens, const MonomialOrder& ord,
                                      const GbLimits& lim = {}, const std::string& label = {});

/// Buchberger criterion: every S-polynomial of the family reduces to zero.
bool is_groebner_basis(std::span<const MultiPoly> basis, const MonomialOrder& ord);

/// Drops zeros, normalizes (content-free, positive leading coefficient),
/// dedupes and sorts descending by leading monomial.
std::vector<MultiPoly> normalize_generators(std::vector<MultiPoly> gens, const MonomialOrder& ord);

/// Reduces a spanning family linearly (exact row reduction on the coefficient
/// matrix of the monomials present). Cuts large redundant generator sets, e.g.
/// minor ideals, down to a basis of their linear span.
std::vector<MultiPoly> linear_interreduce(const std::vector<MultiPoly>& gens,
                                          const MonomialOrder& ord);

}  // namespace revar
