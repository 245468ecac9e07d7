#include "latcode/json_io.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>

namespace latcode::io {

Json subspace_to_json(const gf::Field& f, const gf::SubspaceRepr& s) {
    Json j;
    j["q"] = f.q();
    j["modulus"] = f.modulus().empty() ? Json(nullptr) : Json(f.modulus());
    j["n"] = s.n;
    j["rows"] = s.basis;
    return j;
}

std::pair<gf::Field, gf::SubspaceRepr> subspace_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("q") || !j.contains("n") || !j.contains("rows"))
        throw std::invalid_argument("subspace JSON needs keys q, n, rows");
    int q = j.at("q").get<int>();
    gf::Field f = (j.contains("modulus") && !j.at("modulus").is_null())
                      ? gf::Field(q, j.at("modulus").get<std::vector<int>>())
                      : gf::Field(q);
    int n = j.at("n").get<int>();
    auto rows = j.at("rows").get<std::vector<gf::VectorGF>>();
    gf::SubspaceRepr canonical = gf::rref(f, rows, n);
    gf::SubspaceRepr claimed;
    claimed.n = n;
    claimed.basis = rows;
    if (claimed != canonical)
        throw std::invalid_argument("subspace rows are not in reduced row echelon form");
    return {f, canonical};
}

Json lattice_to_json(const lattice::FiniteLattice& L) {
    Json j;
    j["n"] = L.size();
    Json covers = Json::array();
    for (auto [lo, hi] : L.covers()) covers.push_back(Json::array({lo, hi}));
    j["covers"] = covers;
    j["labels"] = L.labels() ? Json(*L.labels()) : Json(nullptr);
    return j;
}

lattice::FiniteLattice lattice_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("covers"))
        throw std::invalid_argument("lattice JSON needs keys n and covers");
    int n = j.at("n").get<int>();
    std::vector<std::pair<int, int>> covers;
    for (const auto& pair : j.at("covers")) {
        if (!pair.is_array() || pair.size() != 2)
            throw std::invalid_argument("cover entries must be [lo, hi] pairs");
        covers.emplace_back(pair[0].get<int>(), pair[1].get<int>());
    }
    std::optional<std::vector<std::string>> labels;
    if (j.contains("labels") && !j.at("labels").is_null())
        labels = j.at("labels").get<std::vector<std::string>>();
    return lattice::FiniteLattice::from_covers(n, covers, std::move(labels));
}

Json witness_to_json(const props::Witness& w) {
    Json j;
    j["kind"] = props::to_string(w.kind);
    j["elements"] = w.elements;
    j["detail"] = w.detail;
    return j;
}

Json property_report_to_json(const props::PropertyReport& r) {
    Json j;
    j["property"] = props::to_string(r.property);
    j["holds"] = r.holds;
    j["witness"] = r.witness ? witness_to_json(*r.witness) : Json(nullptr);
    return j;
}

Json axiom_report_to_json(const codes::AxiomReport& r) {
    Json j;
    Json axioms = Json::array();
    for (const auto& a : r.axioms) {
        Json entry;
        entry["axiom"] = a.axiom;
        entry["pass"] = a.pass;
        axioms.push_back(entry);
    }
    j["axioms"] = axioms;
    if (r.witness) {
        Json w;
        w["axiom"] = r.witness->axiom;
        w["codewords"] = r.witness->codewords;
        w["detail"] = r.witness->detail;
        j["witness"] = w;
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

Json code_to_json(const codes::SubspaceCode& c) {
    Json j;
    j["q"] = c.field.q();
    j["n"] = c.n;
    Json words = Json::array();
    for (const auto& w : c.codewords) words.push_back(subspace_to_json(c.field, w));
    j["codewords"] = words;
    j["boxplus"] = c.boxplus ? Json(*c.boxplus) : Json(nullptr);
    j["complement"] = c.complement ? Json(*c.complement) : Json(nullptr);
    j["blocks"] = c.blocks ? Json(*c.blocks) : Json(nullptr);
    return j;
}

codes::SubspaceCode code_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("q") || !j.contains("n") || !j.contains("codewords"))
        throw std::invalid_argument("code JSON needs keys q, n, codewords");
    int q = j.at("q").get<int>();
    int n = j.at("n").get<int>();
    const auto& words = j.at("codewords");
    if (!words.is_array() || words.empty())
        throw std::invalid_argument("code JSON needs a nonempty codeword array");

    std::optional<gf::Field> field;
    std::vector<gf::SubspaceRepr> parsed;
    for (const auto& wj : words) {
        auto [f, s] = subspace_from_json(wj);
        if (f.q() != q || s.n != n)
            throw std::invalid_argument("codeword field or ambient dimension differs from the code header");
        if (field && !(f == *field)) throw std::invalid_argument("codewords use inconsistent moduli");
        if (!field) field = f;
        parsed.push_back(std::move(s));
    }
    codes::SubspaceCode c(*field, n);
    c.codewords = std::move(parsed);
    std::vector<gf::SubspaceRepr> sorted = c.codewords;
    std::sort(sorted.begin(), sorted.end(), gf::subspace_less);
    if (sorted != c.codewords) throw std::invalid_argument("codewords must be in canonical order");
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("duplicate codewords");
    if (!c.find(gf::zero_subspace(n))) throw std::invalid_argument("the zero subspace must be a codeword");

    const int N = c.size();
    if (j.contains("boxplus") && !j.at("boxplus").is_null()) {
        auto t = j.at("boxplus").get<std::vector<std::vector<int>>>();
        if (static_cast<int>(t.size()) != N) throw std::invalid_argument("boxplus table has wrong size");
        for (const auto& row : t) {
            if (static_cast<int>(row.size()) != N) throw std::invalid_argument("boxplus table has wrong size");
            for (int v : row)
                if (v < 0 || v >= N) throw std::invalid_argument("boxplus table does not close over the code");
        }
        c.boxplus = std::move(t);
    }
    if (j.contains("complement") && !j.at("complement").is_null()) {
        auto f = j.at("complement").get<std::vector<int>>();
        if (static_cast<int>(f.size()) != N) throw std::invalid_argument("complement map has wrong size");
        for (int v : f)
            if (v < 0 || v >= N) throw std::invalid_argument("complement map escapes the code");
        c.complement = std::move(f);
    }
    if (j.contains("blocks") && !j.at("blocks").is_null())
        c.blocks = j.at("blocks").get<std::vector<std::vector<int>>>();
    return c;
}

Json suite_report_to_json(const lab::SuiteReport& r) {
    Json j;
    j["suite"] = r.suite;
    j["seed"] = r.seed ? Json(*r.seed) : Json(nullptr);
    j["instances"] = r.instances;
    Json failures = Json::array();
    for (const auto& f : r.failures) {
        Json entry;
        entry["instance"] = f.instance;
        if (f.witness) {
            entry["witness"] = witness_to_json(*f.witness);
            entry["witness"]["detail"] = f.detail;
        } else {
            Json w;
            w["detail"] = f.detail;
            entry["witness"] = w;
        }
        failures.push_back(entry);
    }
    j["failures"] = failures;
    return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
    }
    return j;
}

void write_file_atomic(const std::string& path, const std::string& contents) {
    std::filesystem::path target(path);
    std::filesystem::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out << contents;
        if (!out.good()) {
            std::filesystem::remove(tmp);
            throw std::runtime_error("failed writing " + tmp.string());
        }
    }
    std::filesystem::rename(tmp, target);
}

}  // namespace latcode::io
