#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "revar/cdga.hpp"

namespace revar {

using Json = nlohmann::ordered_json;

/// CDGA document schema (see schemas/cdga.schema.json):
///   truncation: int
///   basis:      array per degree of label arrays
///   mu:         array of [deg_i, idx_i, deg_j, idx_j, deg_k, idx_k, coeff]
///   d:          array of [deg, from_idx, to_idx, coeff]        (absent => 0)
///   weights:    array per degree of integer arrays             (optional)
///   formal:     bool; true builds the zero-differential ring with
///               weights set to the degree (d/weights must be absent)
/// Rationals are strings.
CDGA cdga_from_json(const Json& doc);
CDGA load_cdga_file(const std::string& path);
Json cdga_to_json(const CDGA& a);

}  // namespace revar
