#include "revar/config.hpp"

#include <cstdlib>
#include <string>

namespace revar {

namespace {

long read_env_long(const char* name, long fallback) {
    const char* v = std::getenv(name);
    if (!v || !*v) return fallback;
    try {
        return std::stol(v);
    } catch (...) {
        return fallback;
    }
}

}  // namespace

RunConfig RunConfig::from_env() {
    RunConfig cfg;
    cfg.seed = static_cast<std::uint64_t>(read_env_long("REVAR_SEED", static_cast<long>(cfg.seed)));
    cfg.samples = static_cast<int>(read_env_long("REVAR_SAMPLES", cfg.samples));
    cfg.limits.max_basis =
        static_cast<std::size_t>(read_env_long("REVAR_MAX_BASIS", static_cast<long>(cfg.limits.max_basis)));
    cfg.limits.max_degree = static_cast<int>(read_env_long("REVAR_MAX_DEGREE", cfg.limits.max_degree));
    cfg.limits.max_millis = read_env_long("REVAR_MAX_MILLIS", cfg.limits.max_millis);
    return cfg;
}

}  // namespace revar
