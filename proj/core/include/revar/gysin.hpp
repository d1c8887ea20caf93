#pragma once

#include <array>
#include <map>
#include <nlohmann/json.hpp>
#include <stdexcept>
#include <string>
#include <vector>

#include "revar/cdga.hpp"

namespace revar {

struct DivisorData {
    std::string label;
    int h1 = 0;                                     // dim H^1(D_j)
    std::vector<Rational> gysin;                    // class of D_j in H^2 of the ambient, length b2
    std::vector<std::vector<Rational>> restriction; // b1 rows x h1 cols: H^1(ambient) -> H^1(D_j)
};

/// Cohomological input for the degree-<=2 model of the complement of a
/// normal-crossings divisor: ambient H^1/H^2 with cup products, one block of
/// data per irreducible divisor component, and H^0 dimensions of the pairwise
/// intersections (0 when disjoint).
struct CompactificationData {
    int b1 = 0, b2 = 0;
    // cup[{a,b}] for a < b: coefficients of x_a x_b over the H^2 basis
    std::map<std::pair<int, int>, std::vector<Rational>> cup;
    std::vector<DivisorData> divisors;
    std::map<std::pair<int, int>, int> pair_h0;  // key {i < j}, value dim H^0(D_i cap D_j)
};

/// Degree-2 truncated model with the bigraded layout recorded:
/// degree 1 = [ambient H^1 | one coordinate per divisor],
/// degree 2 = [ambient H^2 | H^1(D_j) blocks | H^0(D_i cap D_j) blocks].
struct GysinCDGA {
    CDGA algebra;
    int b1 = 0, b2 = 0;
    std::vector<int> divisor_h1;
    std::vector<std::pair<std::pair<int, int>, int>> pairs;  // ordered {i<j} with h0 > 0
    int deg1_divisor_offset() const { return b1; }
    int num_divisors() const { return static_cast<int>(divisor_h1.size()); }
};

class GysinBuildError : public std::runtime_error {
public:
    explicit GysinBuildError(const std::string& what) : std::runtime_error(what) {}
};

/// Assembles and validates the truncated model. Throws GysinBuildError with
/// the violating pair when the assembled algebra fails validation.
GysinCDGA build_gysin(const CompactificationData& data);

/// True iff the divisor classes are linearly independent in H^2 of the
/// ambient; equivalently H^1 of the ambient maps isomorphically onto H^1 of
/// the complement.
bool h1_iso_check(const CompactificationData& data);

/// (dim A^0, dim A^1, dim A^2).
std::array<int, 3> hilbert_coeffs(const GysinCDGA& a);

using Json = nlohmann::ordered_json;
CompactificationData compactification_from_json(const Json& doc);
CompactificationData load_compactification_file(const std::string& path);
Json compactification_to_json(const CompactificationData& data);

}  // namespace revar
