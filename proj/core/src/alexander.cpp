#include "revar/alexander.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace revar {

LaurentPresentation make_presentation(int nvars,
                                      const std::vector<std::vector<LaurentPoly>>& entries) {
    if (nvars < 0) throw std::invalid_argument("presentation: negative variable count");
    const int rows = static_cast<int>(entries.size());
    const int cols = rows == 0 ? 0 : static_cast<int>(entries[0].size());
    for (const auto& row : entries)
        if (static_cast<int>(row.size()) != cols)
            throw std::invalid_argument("presentation: ragged matrix");
    if (rows > 0 && cols == 0) throw std::invalid_argument("presentation: empty rows");

    NamesPtr names = VarNames::standard(nvars);
    PolyMatrix m(rows, cols, nvars, names);
    for (int i = 0; i < rows; ++i) {
        // shift the whole row by the most negative exponent per variable
        std::vector<long> shift(nvars, 0);
        for (const auto& e : entries[i])
            for (const auto& [exp, c] : e.terms)
                for (int v = 0; v < nvars; ++v) shift[v] = std::min(shift[v], exp[v]);
        for (int j = 0; j < cols; ++j) {
            MultiPoly p(nvars, names);
            for (const auto& [exp, c] : entries[i][j].terms) {
                Exp e(nvars);
                for (int v = 0; v < nvars; ++v) e[v] = static_cast<std::uint32_t>(exp[v] - shift[v]);
                p.add_term(e, c);
            }
            m.at(i, j) = std::move(p);
        }
    }
    return {nvars, std::move(m)};
}

namespace {

MultiPoly coordinate_product(int nvars, const NamesPtr& names) {
    Exp e(nvars, 1);
    return MultiPoly::monomial(nvars, std::move(e), Rational(1), names);
}

SupportVariety saturated(const Ideal& raw, const RunConfig& cfg) {
    if (raw.nvars() == 0 || raw.is_zero_ideal()) return {raw};
    Ideal sat = saturate(raw, coordinate_product(raw.nvars(), raw.names()), cfg.limits);
    return {std::move(sat)};
}

}  // namespace

SupportVariety support_ideal(const LaurentPresentation& p, const RunConfig& cfg) {
    return elementary_ideal(p, 0, cfg);
}

SupportVariety elementary_ideal(const LaurentPresentation& p, int k, const RunConfig& cfg) {
    if (k < 0) throw std::out_of_range("elementary_ideal: negative index");
    const int size = p.generators() - k;
    NamesPtr names = p.matrix.names() ? p.matrix.names() : VarNames::standard(p.nvars);
    if (size <= 0) return {Ideal::zero(p.nvars, names)};
    Ideal raw = minors_ideal(p.matrix, size);
    Ideal reduced(p.nvars, linear_interreduce(raw.generators(), MonomialOrder::grevlex()), names);
    return saturated(reduced, cfg);
}

IsolationVerdict is_trivial_char_isolated(const SupportVariety& s, const GbLimits& lim) {
    const int n = s.ideal.nvars();
    NamesPtr names = VarNames::make([&] {
        std::vector<std::string> v;
        for (int i = 1; i <= n; ++i) v.push_back("s" + std::to_string(i));
        return v;
    }());
    std::vector<MultiPoly> images;
    images.reserve(n);
    for (int i = 0; i < n; ++i)
        images.push_back(MultiPoly::variable(n, i, names) +
                         MultiPoly::constant(n, Rational(1), names));
    std::vector<MultiPoly> shifted;
    shifted.reserve(s.ideal.generators().size());
    for (const auto& g : s.ideal.generators()) shifted.push_back(g.substitute(images));
    Ideal at_one(n, std::move(shifted), names);
    return zero_isolation({at_one}, lim);
}

bool decide_completion_finiteness(const LaurentPresentation& p, const RunConfig& cfg) {
    SupportVariety s = support_ideal(p, cfg);
    IsolationVerdict v = is_trivial_char_isolated(s, cfg.limits);
    return !v.contains_zero || v.isolated;
}

GroupPresentation parse_group_presentation(const std::vector<std::string>& generators,
                                           const std::vector<std::string>& relator_words) {
    GroupPresentation g;
    g.generators = generators;
    auto index_of = [&](const std::string& name) {
        for (std::size_t i = 0; i < generators.size(); ++i)
            if (generators[i] == name) return static_cast<int>(i);
        throw std::invalid_argument("group presentation: unknown generator '" + name + "'");
    };
    for (const auto& word : relator_words) {
        std::vector<int> letters;
        std::istringstream is(word);
        std::string token;
        while (is >> token) {
            bool inverse = false;
            auto caret = token.find('^');
            std::string name = token;
            if (caret != std::string::npos) {
                std::string e = token.substr(caret + 1);
                if (e != "-1")
                    throw std::invalid_argument("group presentation: only ^-1 suffixes, got '" +
                                                token + "'");
                inverse = true;
                name = token.substr(0, caret);
            }
            int idx = index_of(name) + 1;
            letters.push_back(inverse ? -idx : idx);
        }
        if (letters.empty())
            throw std::invalid_argument("group presentation: empty relator word");
        for (std::size_t i = 0; i + 1 < letters.size(); ++i)
            if (letters[i] == -letters[i + 1])
                throw std::invalid_argument("group presentation: relator '" + word +
                                            "' is not freely reduced");
        g.relators.push_back(std::move(letters));
    }
    return g;
}

namespace {

// Diagonalization by row and column operations. Column operations re-mix the
// relator lattice generators and leave the quotient untouched, so only the
// left transform U is tracked (invariant: quotient of Z^g by the current
// column span equals the original quotient carried through U).
struct SmithLeft {
    std::vector<std::vector<long long>> d;  // working matrix, g x r, diagonal on return
    std::vector<std::vector<long long>> u;  // g x g unimodular
};

SmithLeft smith_left(std::vector<std::vector<long long>> m) {
    const int rows = static_cast<int>(m.size());
    const int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
    SmithLeft s;
    s.u.assign(rows, std::vector<long long>(rows, 0));
    for (int i = 0; i < rows; ++i) s.u[i][i] = 1;
    s.d = std::move(m);

    auto swap_cols = [&](int a, int b) {
        if (a == b) return;
        for (int i = 0; i < rows; ++i) std::swap(s.d[i][a], s.d[i][b]);
    };

    for (int t = 0; t < std::min(rows, cols); ++t) {
        while (true) {
            int pi = -1, pj = -1;
            for (int i = t; i < rows; ++i)
                for (int j = t; j < cols; ++j)
                    if (s.d[i][j] != 0 &&
                        (pi < 0 || std::abs(s.d[i][j]) < std::abs(s.d[pi][pj]))) {
                        pi = i;
                        pj = j;
                    }
            if (pi < 0) return s;  // remaining block is zero
            std::swap(s.d[pi], s.d[t]);
            std::swap(s.u[pi], s.u[t]);
            swap_cols(pj, t);
            bool clean = true;
            for (int i = t + 1; i < rows; ++i) {
                if (s.d[i][t] == 0) continue;
                long long q = s.d[i][t] / s.d[t][t];
                for (int j = 0; j < cols; ++j) s.d[i][j] -= q * s.d[t][j];
                for (int j = 0; j < rows; ++j) s.u[i][j] -= q * s.u[t][j];
                if (s.d[i][t] != 0) clean = false;
            }
            for (int j = t + 1; j < cols; ++j) {
                if (s.d[t][j] == 0) continue;
                long long q = s.d[t][j] / s.d[t][t];
                for (int i = 0; i < rows; ++i) s.d[i][j] -= q * s.d[i][t];
                if (s.d[t][j] != 0) clean = false;
            }
            if (clean) break;
        }
    }
    return s;
}

std::string word_str(const GroupPresentation& g, const std::vector<int>& word) {
    std::string out;
    for (int l : word) {
        if (!out.empty()) out += " ";
        out += g.generators[std::abs(l) - 1];
        if (l < 0) out += "^-1";
    }
    return out;
}

}  // namespace

FoxResult fox_alexander_matrix(const GroupPresentation& g) {
    const int ng = static_cast<int>(g.generators.size());
    for (const auto& w : g.relators)
        for (std::size_t i = 0; i + 1 < w.size(); ++i)
            if (w[i] == -w[i + 1])
                throw std::invalid_argument("fox_alexander_matrix: relator '" + word_str(g, w) +
                                            "' is not freely reduced");

    // Abelianization Z^ng / column span of the exponent matrix.
    std::vector<std::vector<long long>> expos(ng,
                                              std::vector<long long>(g.relators.size(), 0));
    for (std::size_t r = 0; r < g.relators.size(); ++r)
        for (int l : g.relators[r]) expos[std::abs(l) - 1][r] += l > 0 ? 1 : -1;
    SmithLeft snf = smith_left(std::move(expos));
    // After diagonalization the quotient is sum of Z/|d_ii| plus a free part;
    // torsion-freeness needs every nonzero diagonal entry to be a unit.
    int rank_rel = 0;
    {
        const int cols = static_cast<int>(g.relators.size());
        for (int i = 0; i < std::min(ng, cols); ++i) {
            if (snf.d[i][i] == 0) continue;
            ++rank_rel;
            if (std::abs(snf.d[i][i]) != 1)
                throw std::invalid_argument(
                    "fox_alexander_matrix: abelianization has torsion (invariant factor " +
                    std::to_string(std::abs(snf.d[i][i])) + "); torsion-free covers only");
        }
    }
    const int rank = ng - rank_rel;

    // Generator images in Z^rank: the non-pivot coordinates of U e_j.
    std::vector<int> free_rows;
    for (int i = 0; i < ng; ++i) {
        bool nonzero = false;
        for (std::size_t j = 0; j < g.relators.size(); ++j) nonzero = nonzero || snf.d[i][j] != 0;
        if (!nonzero) free_rows.push_back(i);
    }
    if (static_cast<int>(free_rows.size()) != rank)
        throw std::logic_error("fox_alexander_matrix: rank bookkeeping failed");
    auto abelianize = [&](const std::vector<long long>& expo) {
        std::vector<long> image(rank, 0);
        for (int k = 0; k < rank; ++k) {
            long long v = 0;
            for (int j = 0; j < ng; ++j) v += snf.u[free_rows[k]][j] * expo[j];
            image[k] = static_cast<long>(v);
        }
        return image;
    };

    // Fox derivatives, abelianized on the fly.
    std::vector<std::vector<LaurentPoly>> entries;
    for (const auto& word : g.relators) {
        std::vector<LaurentPoly> row(ng);
        for (auto& p : row) p.nvars = rank;
        std::vector<long long> prefix(ng, 0);
        for (int l : word) {
            int gen = std::abs(l) - 1;
            if (l > 0) {
                auto mono = abelianize(prefix);
                auto [it, inserted] = row[gen].terms.emplace(mono, Rational(1));
                if (!inserted) {
                    it->second += Rational(1);
                    if (it->second.is_zero()) row[gen].terms.erase(it);
                }
                prefix[gen] += 1;
            } else {
                prefix[gen] -= 1;
                auto mono = abelianize(prefix);
                auto [it, inserted] = row[gen].terms.emplace(mono, Rational(-1));
                if (!inserted) {
                    it->second += Rational(-1);
                    if (it->second.is_zero()) row[gen].terms.erase(it);
                }
            }
        }
        entries.push_back(std::move(row));
    }

    FoxResult res;
    res.rank = rank;
    res.presentation = make_presentation(rank, entries);
    res.note =
        "presents the Alexander module of the presentation (relative H_1 of the abelian cover), "
        "not H_1 of the cover itself";
    return res;
}

namespace {

[[noreturn]] void bad(const std::string& msg) {
    throw std::invalid_argument("presentation document: " + msg);
}

}  // namespace

LaurentPresentation presentation_from_json(const Json& doc) {
    if (!doc.is_object()) bad("document must be an object");
    if (!doc.contains("nvars") || !doc["nvars"].is_number_integer())
        bad("missing integer 'nvars'");
    int n = doc["nvars"].get<int>();
    if (!doc.contains("matrix") || !doc["matrix"].is_array()) bad("missing 'matrix' array");
    std::vector<std::vector<LaurentPoly>> entries;
    NamesPtr names = VarNames::standard(n);
    for (const auto& row : doc["matrix"]) {
        if (!row.is_array()) bad("'matrix' rows must be arrays");
        std::vector<LaurentPoly> r;
        for (const auto& e : row) {
            if (!e.is_string()) bad("'matrix' entries must be polynomial strings");
            r.push_back(parse_laurent(n, e.get<std::string>(), names));
        }
        entries.push_back(std::move(r));
    }
    return make_presentation(n, entries);
}

LaurentPresentation load_presentation_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open module presentation file: " + path);
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const std::exception& e) {
        throw std::invalid_argument("presentation document: invalid JSON in " + path + ": " +
                                    e.what());
    }
    return presentation_from_json(doc);
}

GroupPresentation group_from_json(const Json& doc) {
    if (!doc.is_object() || !doc.contains("generators") || !doc.contains("relators"))
        throw std::invalid_argument("group document: need 'generators' and 'relators' arrays");
    std::vector<std::string> gens, words;
    for (const auto& x : doc["generators"]) gens.push_back(x.get<std::string>());
    for (const auto& x : doc["relators"]) words.push_back(x.get<std::string>());
    return parse_group_presentation(gens, words);
}

GroupPresentation load_group_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open group presentation file: " + path);
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const std::exception& e) {
        throw std::invalid_argument("group document: invalid JSON in " + path + ": " + e.what());
    }
    return group_from_json(doc);
}

Json presentation_to_json(const LaurentPresentation& p) {
    Json doc;
    doc["nvars"] = p.nvars;
    Json rows = Json::array();
    for (int i = 0; i < p.matrix.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < p.matrix.cols(); ++j) row.push_back(p.matrix.at(i, j).str());
        rows.push_back(std::move(row));
    }
    doc["matrix"] = std::move(rows);
    return doc;
}

}  // namespace revar
