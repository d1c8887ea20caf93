#include "revar/gysin.hpp"

#include <fstream>

#include "revar/linalg.hpp"

namespace revar {

namespace {

void check_data(const CompactificationData& d) {
    if (d.b1 < 0 || d.b2 < 0) throw GysinBuildError("negative ambient dimension");
    for (const auto& [key, value] : d.cup) {
        auto [a, b] = key;
        if (a < 0 || b < 0 || a >= d.b1 || b >= d.b1)
            throw GysinBuildError("cup product index out of range");
        if (static_cast<int>(value.size()) != d.b2)
            throw GysinBuildError("cup product value must have length b2");
        if (a == b) {
            for (const auto& c : value)
                if (!c.is_zero())
                    throw GysinBuildError("violating pair (x" + std::to_string(a + 1) + ", x" +
                                          std::to_string(a + 1) +
                                          "): odd-degree square must vanish");
        }
    }
    int nd = static_cast<int>(d.divisors.size());
    for (int j = 0; j < nd; ++j) {
        const auto& dv = d.divisors[j];
        if (dv.h1 < 0) throw GysinBuildError("divisor '" + dv.label + "': negative h1");
        if (static_cast<int>(dv.gysin.size()) != d.b2)
            throw GysinBuildError("divisor '" + dv.label + "': class must have length b2");
        if (static_cast<int>(dv.restriction.size()) != d.b1)
            throw GysinBuildError("divisor '" + dv.label + "': restriction needs b1 rows");
        for (const auto& row : dv.restriction)
            if (static_cast<int>(row.size()) != dv.h1)
                throw GysinBuildError("divisor '" + dv.label + "': restriction rows need h1 cols");
    }
    for (const auto& [key, h0] : d.pair_h0) {
        auto [i, j] = key;
        if (i < 0 || j < 0 || i >= nd || j >= nd || i >= j)
            throw GysinBuildError("pair index must satisfy 0 <= i < j < #divisors");
        if (h0 < 0) throw GysinBuildError("pair h0 must be >= 0");
    }
}

}  // namespace

GysinCDGA build_gysin(const CompactificationData& data) {
    check_data(data);
    const int b1 = data.b1, b2 = data.b2;
    const int nd = static_cast<int>(data.divisors.size());

    std::vector<int> divisor_h1;
    std::vector<std::pair<std::pair<int, int>, int>> live_pairs;
    for (const auto& dv : data.divisors) divisor_h1.push_back(dv.h1);
    for (const auto& [key, h0] : data.pair_h0)
        if (h0 > 0) live_pairs.push_back({key, h0});

    // Degree-1 layout: ambient H^1 then one coordinate per divisor.
    std::vector<std::string> deg0{"1"}, deg1, deg2;
    std::vector<int> w0{0}, w1, w2;
    for (int a = 0; a < b1; ++a) {
        deg1.push_back("x" + std::to_string(a + 1));
        w1.push_back(1);
    }
    for (const auto& dv : data.divisors) {
        deg1.push_back(dv.label);
        w1.push_back(2);
    }
    // Degree-2 layout: ambient H^2, then H^1(D_j) blocks, then pair blocks.
    for (int k = 0; k < b2; ++k) {
        deg2.push_back("f" + std::to_string(k + 1));
        w2.push_back(2);
    }
    std::vector<int> div_block(nd, -1);
    for (int j = 0; j < nd; ++j) {
        div_block[j] = static_cast<int>(deg2.size());
        for (int k = 0; k < data.divisors[j].h1; ++k) {
            deg2.push_back(data.divisors[j].label + ".h1." + std::to_string(k + 1));
            w2.push_back(3);
        }
    }
    std::map<std::pair<int, int>, int> pair_block;
    for (const auto& [key, h0] : live_pairs) {
        pair_block[key] = static_cast<int>(deg2.size());
        for (int k = 0; k < h0; ++k) {
            deg2.push_back(data.divisors[key.first].label + "&" + data.divisors[key.second].label +
                           "." + std::to_string(k + 1));
            w2.push_back(4);
        }
    }
    const int a2 = static_cast<int>(deg2.size());

    std::vector<MuEntry> mu;
    // eta_a . eta_b = cup(a, b) in the ambient H^2 block.
    for (int a = 0; a < b1; ++a)
        for (int b = a + 1; b < b1; ++b) {
            auto it = data.cup.find({a, b});
            if (it == data.cup.end()) continue;
            std::vector<Rational> v(a2, Rational(0));
            bool nonzero = false;
            for (int k = 0; k < b2; ++k) {
                v[k] = it->second[k];
                nonzero = nonzero || !v[k].is_zero();
            }
            if (nonzero) mu.push_back({1, a, 1, b, std::move(v)});
        }
    // eta_a . b_j = restriction of eta_a into the H^1(D_j) block.
    for (int a = 0; a < b1; ++a)
        for (int j = 0; j < nd; ++j) {
            const auto& row = data.divisors[j].restriction[a];
            std::vector<Rational> v(a2, Rational(0));
            bool nonzero = false;
            for (int k = 0; k < data.divisors[j].h1; ++k) {
                v[div_block[j] + k] = row[k];
                nonzero = nonzero || !row[k].is_zero();
            }
            if (nonzero) mu.push_back({1, a, 1, b1 + j, std::move(v)});
        }
    // b_i . b_j lands diagonally in H^0(D_i cap D_j) (1 on each connected piece).
    for (const auto& [key, h0] : live_pairs) {
        std::vector<Rational> v(a2, Rational(0));
        for (int k = 0; k < h0; ++k) v[pair_block[key] + k] = Rational(1);
        mu.push_back({1, b1 + key.first, 1, b1 + key.second, std::move(v)});
    }

    // d_1: ambient classes are closed; each divisor coordinate maps to its class.
    RatMatrix d1(a2, b1 + nd);
    for (int j = 0; j < nd; ++j)
        for (int k = 0; k < b2; ++k) d1.at(k, b1 + j) = data.divisors[j].gysin[k];

    std::vector<std::vector<std::string>> labels{deg0, deg1, deg2};
    std::vector<std::vector<int>> weights{w0, w1, w2};
    CDGA algebra(2, std::move(labels), mu, {RatMatrix(static_cast<int>(deg1.size()), 1), d1},
                 std::move(weights));
    auto report = validate(algebra);
    if (!report.ok()) {
        std::string msg = "assembled Gysin model fails validation:";
        for (const auto& issue : report.issues) msg += " [" + issue.axiom + "] " + issue.detail + ";";
        throw GysinBuildError(msg);
    }
    return GysinCDGA{std::move(algebra), b1, b2, std::move(divisor_h1), std::move(live_pairs)};
}

bool h1_iso_check(const CompactificationData& data) {
    const int nd = static_cast<int>(data.divisors.size());
    if (nd == 0) return true;
    RatMatrix m(data.b2, nd);
    for (int j = 0; j < nd; ++j) {
        if (static_cast<int>(data.divisors[j].gysin.size()) != data.b2)
            throw GysinBuildError("divisor '" + data.divisors[j].label +
                                  "': class must have length b2");
        for (int k = 0; k < data.b2; ++k) m.at(k, j) = data.divisors[j].gysin[k];
    }
    return rat_rank(m) == nd;
}

std::array<int, 3> hilbert_coeffs(const GysinCDGA& a) {
    return {a.algebra.dim(0), a.algebra.dim(1), a.algebra.dim(2)};
}

namespace {

[[noreturn]] void bad(const std::string& msg) {
    throw std::invalid_argument("compactification document: " + msg);
}

std::vector<Rational> read_rational_array(const Json& j, const std::string& what) {
    if (!j.is_array()) bad(what + " must be an array of rational strings");
    std::vector<Rational> out;
    for (const auto& x : j) out.push_back(Rational::parse(x.get<std::string>()));
    return out;
}

}  // namespace

CompactificationData compactification_from_json(const Json& doc) {
    if (!doc.is_object()) bad("document must be an object");
    if (!doc.contains("ambient") || !doc["ambient"].is_object()) bad("missing 'ambient' object");
    CompactificationData data;
    const auto& amb = doc["ambient"];
    if (!amb.contains("b1") || !amb.contains("b2")) bad("'ambient' needs b1 and b2");
    data.b1 = amb["b1"].get<int>();
    data.b2 = amb["b2"].get<int>();
    if (amb.contains("cup")) {
        if (!amb["cup"].is_array()) bad("'ambient.cup' must be an array");
        for (const auto& t : amb["cup"]) {
            if (!t.is_array() || t.size() != 4) bad("cup entries are [i, j, k, coeff]");
            int i = t[0].get<int>(), j = t[1].get<int>(), k = t[2].get<int>();
            if (i < 0 || j < 0 || i >= data.b1 || j >= data.b1) bad("cup index out of range");
            if (k < 0 || k >= data.b2) bad("cup target index out of range");
            Rational c = Rational::parse(t[3].get<std::string>());
            // fold onto the ordered pair with the graded-commutativity sign
            int a = std::min(i, j), b = std::max(i, j);
            if (i > j) c = -c;
            auto it = data.cup.emplace(std::pair<int, int>{a, b}, std::vector<Rational>(data.b2))
                          .first;
            it->second[k] += c;
        }
    }
    if (doc.contains("divisors")) {
        if (!doc["divisors"].is_array()) bad("'divisors' must be an array");
        for (const auto& dj : doc["divisors"]) {
            DivisorData dv;
            if (!dj.contains("label") || !dj["label"].is_string()) bad("divisor needs a label");
            dv.label = dj["label"].get<std::string>();
            dv.h1 = dj.value("h1", 0);
            dv.gysin = read_rational_array(dj.at("gysin"), "divisor gysin class");
            if (!dj.contains("restriction") || !dj["restriction"].is_array())
                bad("divisor needs a restriction matrix");
            for (const auto& row : dj["restriction"])
                dv.restriction.push_back(read_rational_array(row, "restriction row"));
            data.divisors.push_back(std::move(dv));
        }
    }
    if (doc.contains("pairs")) {
        if (!doc["pairs"].is_array()) bad("'pairs' must be an array");
        for (const auto& p : doc["pairs"]) {
            if (!p.contains("i") || !p.contains("j") || !p.contains("h0"))
                bad("pair entries need i, j, h0");
            int i = p["i"].get<int>(), j = p["j"].get<int>(), h0 = p["h0"].get<int>();
            if (i == j) bad("pair indices must differ (divisors are irreducible)");
            auto key = std::pair<int, int>{std::min(i, j), std::max(i, j)};
            auto [it, inserted] = data.pair_h0.emplace(key, h0);
            if (!inserted && it->second != h0) bad("conflicting h0 for one pair");
        }
    }
    return data;
}

CompactificationData load_compactification_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open compactification file: " + path);
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const std::exception& e) {
        throw std::invalid_argument("compactification document: invalid JSON in " + path + ": " +
                                    e.what());
    }
    return compactification_from_json(doc);
}

Json compactification_to_json(const CompactificationData& data) {
    Json doc;
    Json amb;
    amb["b1"] = data.b1;
    amb["b2"] = data.b2;
    Json cup = Json::array();
    for (const auto& [key, value] : data.cup)
        for (int k = 0; k < data.b2; ++k)
            if (!value[k].is_zero())
                cup.push_back(Json::array({key.first, key.second, k, value[k].str()}));
    amb["cup"] = std::move(cup);
    doc["ambient"] = std::move(amb);
    Json divisors = Json::array();
    for (const auto& dv : data.divisors) {
        Json d;
        d["label"] = dv.label;
        d["h1"] = dv.h1;
        Json gy = Json::array();
        for (const auto& c : dv.gysin) gy.push_back(c.str());
        d["gysin"] = std::move(gy);
        Json rows = Json::array();
        for (const auto& row : dv.restriction) {
            Json r = Json::array();
            for (const auto& c : row) r.push_back(c.str());
            rows.push_back(std::move(r));
        }
        d["restriction"] = std::move(rows);
        divisors.push_back(std::move(d));
    }
    doc["divisors"] = std::move(divisors);
    Json pairs = Json::array();
    for (const auto& [key, h0] : data.pair_h0)
        pairs.push_back(Json{{"i", key.first}, {"j", key.second}, {"h0", h0}});
    doc["pairs"] = std::move(pairs);
    return doc;
}

}  // namespace revar
