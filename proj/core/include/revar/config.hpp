#pragma once

#include <cstdint>

#include "revar/groebner.hpp"

namespace revar {

/// Run-wide knobs. Identical config and inputs give bit-identical outputs.
struct RunConfig {
    std::uint64_t seed = 0x5EED;
    int samples = 200;
    GbLimits limits;

    /// Applies REVAR_SEED, REVAR_SAMPLES, REVAR_MAX_BASIS, REVAR_MAX_DEGREE,
    /// REVAR_MAX_MILLIS when set in the environment.
    static RunConfig from_env();
};

}  // namespace revar
