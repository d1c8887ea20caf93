#include "revar/isolation.hpp"

namespace revar {

IsolationVerdict zero_isolation(const std::vector<Ideal>& components, const GbLimits& lim) {
    IsolationVerdict verdict;
    int index = 0;
    for (const auto& ideal : components) {
        ComponentCertificate cert;
        cert.component = index++;
        if (ideal.is_unit(lim)) {  // empty component
            cert.contains_zero = false;
            cert.isolated = true;
            verdict.certificates.push_back(std::move(cert));
            continue;
        }
        std::vector<Rational> origin(ideal.nvars(), Rational(0));
        cert.contains_zero = ideal.vanishes_at(origin);
        if (!cert.contains_zero) {
            cert.isolated = true;  // vacuous for this component
            verdict.certificates.push_back(std::move(cert));
            continue;
        }
        verdict.contains_zero = true;
        if (ideal.nvars() == 0) {
            // V(I) is at most the single point of affine 0-space.
            cert.isolated = true;
            verdict.certificates.push_back(std::move(cert));
            continue;
        }
        Ideal saturated = saturate_at_origin(ideal, lim);
        cert.saturation_gb = saturated.groebner(MonomialOrder::grevlex(), lim);
        cert.isolated = false;
        for (const auto& g : cert.saturation_gb) {
            if (!g.constant_term().is_zero()) {
                cert.unit_witness = g;
                cert.isolated = true;
                break;
            }
        }
        if (!cert.isolated) verdict.isolated = false;
        verdict.certificates.push_back(std::move(cert));
    }
    return verdict;
}

}  // namespace revar
