#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "revar/config.hpp"
#include "revar/isolation.hpp"
#include "revar/poly_matrix.hpp"

namespace revar {

/// Presentation matrix of a module over Q[t_1^{+-1}, ..., t_n^{+-1}]:
/// rows are relations, columns are generators (the module is the cokernel of
/// the row span acting on R^cols). Monomial denominators are cleared row by
/// row on ingestion, which rescales relations by units and leaves the module
/// unchanged.
struct LaurentPresentation {
    int nvars = 0;
    PolyMatrix matrix;
    int generators() const { return matrix.cols(); }
    int relations() const { return matrix.rows(); }
};

LaurentPresentation make_presentation(int nvars,
                                      const std::vector<std::vector<LaurentPoly>>& entries);

/// Zero set of a Fitting-type ideal inside the torus (t_i != 0); the ideal is
/// saturated with respect to t_1...t_n on construction.
struct SupportVariety {
    Ideal ideal;
};

/// Fitt_0 of the cokernel: the ideal of (#generators)-minors, saturated.
SupportVariety support_ideal(const LaurentPresentation& p, const RunConfig& cfg = {});

/// E_k: ideal of (#generators - k)-minors, saturated; E_0 recovers
/// support_ideal. k at or above the generator count gives the zero ideal
/// (whole space).
SupportVariety elementary_ideal(const LaurentPresentation& p, int k, const RunConfig& cfg = {});

/// Shifts coordinates to the trivial character (t = 1 + s) and runs the
/// origin-isolation test there. contains_zero reports whether the trivial
/// character lies in the support.
IsolationVerdict is_trivial_char_isolated(const SupportVariety& s, const GbLimits& lim = {});

/// True iff the trivial character is absent from, or isolated in, supp:
/// exactly the finite-dimensional-completion criterion.
bool decide_completion_finiteness(const LaurentPresentation& p, const RunConfig& cfg = {});

struct GroupPresentation {
    std::vector<std::string> generators;
    // relator words: letters +-(g+1), negative for inverses; freely reduced
    std::vector<std::vector<int>> relators;
};

GroupPresentation parse_group_presentation(const std::vector<std::string>& generators,
                                           const std::vector<std::string>& relator_words);

struct FoxResult {
    LaurentPresentation presentation;  // rows = relators, cols = generators, abelianized
    int rank = 0;                      // rank of the free abelianization
    /// This presents the Alexander module of the presentation (relative H_1 of
    /// the abelian cover), not H_1 of the cover itself.
    std::string note;
};

/// Fox free-derivative Jacobian, abelianized. Throws std::invalid_argument on
/// torsion in the abelianization or on unreduced relators.
FoxResult fox_alexander_matrix(const GroupPresentation& g);

using Json = nlohmann::ordered_json;
LaurentPresentation presentation_from_json(const Json& doc);
LaurentPresentation load_presentation_file(const std::string& path);
GroupPresentation group_from_json(const Json& doc);
GroupPresentation load_group_file(const std::string& path);
Json presentation_to_json(const LaurentPresentation& p);

}  // namespace revar
