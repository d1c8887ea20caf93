#pragma once

#include <optional>
#include <vector>

#include "revar/ideal.hpp"

namespace revar {

/// Certificate for one component ideal I of a locus: the generators of
/// I : m^infinity and, when the origin is isolated relative to I, a witness
/// element of the saturation with nonzero constant term (so 1 lies in
/// I : m^infinity + m).
struct ComponentCertificate {
    int component = 0;
    bool contains_zero = false;
    bool isolated = true;
    std::vector<MultiPoly> saturation_gb;
    std::optional<MultiPoly> unit_witness;
};

struct IsolationVerdict {
    bool contains_zero = false;
    bool isolated = true;  // vacuously true when the origin is not in the union
    std::vector<ComponentCertificate> certificates;
};

/// Decides whether 0 is an isolated point of the union of the component
/// varieties. A component through 0 passes iff its origin saturation
/// J = I : m^infinity satisfies 1 in J + m, witnessed by a Groebner-basis
/// element of J with nonzero constant term.
IsolationVerdict zero_isolation(const std::vector<Ideal>& components, const GbLimits& lim = {});

}  // namespace revar
