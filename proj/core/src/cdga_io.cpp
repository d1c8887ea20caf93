#include "revar/cdga_io.hpp"

#include <fstream>
#include <stdexcept>

namespace revar {

namespace {

[[noreturn]] void bad(const std::string& msg) {
    throw std::invalid_argument("cdga document: " + msg);
}

std::vector<std::vector<std::string>> read_labels(const Json& doc) {
    if (!doc.contains("basis") || !doc["basis"].is_array()) bad("missing 'basis' array");
    std::vector<std::vector<std::string>> labels;
    for (const auto& deg : doc["basis"]) {
        if (!deg.is_array()) bad("'basis' entries must be arrays of labels");
        std::vector<std::string> row;
        for (const auto& l : deg) {
            if (!l.is_string()) bad("basis labels must be strings");
            row.push_back(l.get<std::string>());
        }
        labels.push_back(std::move(row));
    }
    return labels;
}

std::vector<MuEntry> read_mu(const Json& doc, const std::vector<std::vector<std::string>>& labels) {
    std::vector<MuEntry> entries;
    if (!doc.contains("mu")) return entries;
    if (!doc["mu"].is_array()) bad("'mu' must be an array");
    std::map<std::array<int, 4>, std::size_t> where;
    for (const auto& t : doc["mu"]) {
        if (!t.is_array() || t.size() != 7) bad("'mu' entries are [di, ai, dj, aj, dk, ak, coeff]");
        int di = t[0].get<int>(), ai = t[1].get<int>(), dj = t[2].get<int>(), aj = t[3].get<int>();
        int dk = t[4].get<int>(), ak = t[5].get<int>();
        if (dk != di + dj) bad("'mu' target degree must be deg_i + deg_j");
        if (dk < 0 || dk >= static_cast<int>(labels.size())) bad("'mu' target degree out of range");
        int target_dim = static_cast<int>(labels[dk].size());
        if (ak < 0 || ak >= target_dim) bad("'mu' target index out of range");
        Rational c = Rational::parse(t[6].get<std::string>());
        std::array<int, 4> key{di, ai, dj, aj};
        auto it = where.find(key);
        if (it == where.end()) {
            MuEntry e{di, ai, dj, aj, std::vector<Rational>(target_dim, Rational(0))};
            e.value[ak] = c;
            where.emplace(key, entries.size());
            entries.push_back(std::move(e));
        } else {
            entries[it->second].value[ak] += c;
        }
    }
    return entries;
}

std::vector<RatMatrix> read_d(const Json& doc, const std::vector<std::vector<std::string>>& labels,
                              int truncation) {
    std::vector<RatMatrix> ds;
    for (int i = 0; i < truncation; ++i)
        ds.emplace_back(static_cast<int>(labels[i + 1].size()), static_cast<int>(labels[i].size()));
    if (!doc.contains("d")) return ds;
    if (!doc["d"].is_array()) bad("'d' must be an array");
    for (const auto& t : doc["d"]) {
        if (!t.is_array() || t.size() != 4) bad("'d' entries are [deg, from_idx, to_idx, coeff]");
        int deg = t[0].get<int>(), from = t[1].get<int>(), to = t[2].get<int>();
        if (deg < 0 || deg >= truncation) bad("'d' degree out of range");
        if (from < 0 || from >= static_cast<int>(labels[deg].size())) bad("'d' source index out of range");
        if (to < 0 || to >= static_cast<int>(labels[deg + 1].size())) bad("'d' target index out of range");
        ds[deg].at(to, from) += Rational::parse(t[3].get<std::string>());
    }
    return ds;
}

}  // namespace

CDGA cdga_from_json(const Json& doc) {
    if (!doc.is_object()) bad("document must be an object");
    if (!doc.contains("truncation") || !doc["truncation"].is_number_integer())
        bad("missing integer 'truncation'");
    int N = doc["truncation"].get<int>();
    auto labels = read_labels(doc);
    if (static_cast<int>(labels.size()) != N + 1) bad("'basis' must list degrees 0..truncation");
    auto mu = read_mu(doc, labels);

    bool formal = doc.value("formal", false);
    if (formal) {
        if (doc.contains("d")) bad("'formal' documents must not carry a differential");
        if (doc.contains("weights")) bad("'formal' documents must not carry explicit weights");
        return formal_from_ring(N, std::move(labels), mu);
    }

    auto ds = read_d(doc, labels, N);
    std::optional<std::vector<std::vector<int>>> weights;
    if (doc.contains("weights")) {
        if (!doc["weights"].is_array()) bad("'weights' must be an array per degree");
        std::vector<std::vector<int>> w;
        for (const auto& deg : doc["weights"]) {
            if (!deg.is_array()) bad("'weights' entries must be integer arrays");
            std::vector<int> row;
            for (const auto& x : deg) row.push_back(x.get<int>());
            w.push_back(std::move(row));
        }
        weights = std::move(w);
    }
    return CDGA(N, std::move(labels), mu, std::move(ds), std::move(weights));
}

CDGA load_cdga_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open CDGA file: " + path);
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const std::exception& e) {
        throw std::invalid_argument("cdga document: invalid JSON in " + path + ": " + e.what());
    }
    return cdga_from_json(doc);
}

Json cdga_to_json(const CDGA& a) {
    Json doc;
    doc["truncation"] = a.truncation();
    Json basis = Json::array();
    for (int i = 0; i <= a.truncation(); ++i) basis.push_back(a.labels(i));
    doc["basis"] = std::move(basis);
    Json mu = Json::array();
    for (const auto& [key, value] : a.stored_mu()) {
        for (std::size_t k = 0; k < value.size(); ++k) {
            if (value[k].is_zero()) continue;
            mu.push_back(Json::array({key[0], key[1], key[2], key[3], key[0] + key[2],
                                      static_cast<int>(k), value[k].str()}));
        }
    }
    doc["mu"] = std::move(mu);
    Json d = Json::array();
    for (int i = 0; i < a.truncation(); ++i) {
        const RatMatrix& di = a.d(i);
        for (int c = 0; c < di.cols(); ++c)
            for (int r = 0; r < di.rows(); ++r)
                if (!di.at(r, c).is_zero()) d.push_back(Json::array({i, c, r, di.at(r, c).str()}));
    }
    doc["d"] = std::move(d);
    if (a.has_weights()) {
        Json w = Json::array();
        for (int i = 0; i <= a.truncation(); ++i) w.push_back((*a.weights())[i]);
        doc["weights"] = std::move(w);
    }
    return doc;
}

}  // namespace revar
