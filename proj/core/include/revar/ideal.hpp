#pragma once

#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <vector>

#include "revar/groebner.hpp"
#include "revar/poly.hpp"
#include "revar/poly_matrix.hpp"

namespace revar {

/// Polynomial ideal with normalized generators and a cache of reduced
/// Groebner bases keyed by monomial order. Immutable after construction;
/// the cache is internally locked so shared reads are thread-safe.
class Ideal {
public:
    Ideal() : n_(0) {}
    Ideal(int nvars, std::vector<MultiPoly> gens, NamesPtr names = nullptr);

    static Ideal zero(int nvars, NamesPtr names = nullptr);
    static Ideal unit(int nvars, NamesPtr names = nullptr);

    int nvars() const { return n_; }
    const NamesPtr& names() const { return names_; }
    const std::vector<MultiPoly>& generators() const { return gens_; }
    std::string describe() const;

    const std::vector<MultiPoly>& groebner(const MonomialOrder& ord = MonomialOrder::grevlex(),
                                           const GbLimits& lim = {}) const;

    bool is_zero_ideal() const { return gens_.empty(); }
    bool is_unit(const GbLimits& lim = {}) const;
    bool contains(const MultiPoly& p, const GbLimits& lim = {}) const;
    bool contains_ideal(const Ideal& other, const GbLimits& lim = {}) const;
    bool same_ideal(const Ideal& other, const GbLimits& lim = {}) const;
    /// All generators vanish at the point.
    bool vanishes_at(std::span<const Rational> point) const;

private:
    int n_;
    NamesPtr names_;
    std::vector<MultiPoly> gens_;
    struct Cache {
        std::mutex m;
        std::map<std::string, std::vector<MultiPoly>> bases;
    };
    std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

bool ideal_membership(const MultiPoly& p, const Ideal& ideal, const GbLimits& lim = {});

Ideal ideal_sum(const Ideal& a, const Ideal& b);

/// Generators of I ∩ Q[remaining variables], computed with a block
/// elimination order; the result lives in the remaining variables.
Ideal eliminate(const Ideal& ideal, const std::vector<int>& drop, const GbLimits& lim = {});

/// I : f^infinity via the extra-variable trick I + (1 - z f), eliminating z.
Ideal saturate(const Ideal& ideal, const MultiPoly& f, const GbLimits& lim = {});

Ideal intersect(const Ideal& a, const Ideal& b, const GbLimits& lim = {});

/// I : m^infinity with m = (t_1, ..., t_n), as the intersection of the
/// variable-wise saturations.
Ideal saturate_at_origin(const Ideal& ideal, const GbLimits& lim = {});

/// Dimension of V(I) in affine n-space; unit ideal gives -1.
int krull_dimension(const Ideal& ideal, const GbLimits& lim = {});

/// Ideal of all k x k minors; k = 0 gives the unit ideal, k > min(shape) the
/// zero ideal (the rank condition is vacuous).
Ideal minors_ideal(const PolyMatrix& m, int k);

}  // namespace revar
