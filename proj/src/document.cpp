#include "eulerint/document.hpp"

#include <json.hpp>

namespace eulerint {

using nlohmann::json;

namespace {

Rat parse_rat_field(const json& j, const char* what) {
    if (!j.is_string()) fail(Err::ParseError, std::string(what) + " must be a \"p/q\" string");
    return rat_parse(j.get<std::string>());
}

std::vector<int> parse_cell_list(const json& j) {
    if (!j.is_array() || j.empty()) fail(Err::ParseError, "cell must be a vertex id array");
    std::vector<int> verts;
    for (const auto& v : j) {
        if (!v.is_number_integer()) fail(Err::ParseError, "vertex ids must be integers");
        verts.push_back(v.get<int>());
    }
    return verts;
}

}  // namespace

Document parse_document(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        fail(Err::ParseError, e.what());
    }
    try {
        if (!j.is_object() || !j.contains("complex"))
            fail(Err::ParseError, "document needs a complex section");
        if (j.contains("format") && j["format"].get<int>() != 1)
            fail(Err::ParseError, "unsupported format version");

        const json& jc = j["complex"];
        std::vector<RatVec> coords;
        for (const auto& jv : jc.at("vertices")) {
            RatVec p;
            for (const auto& x : jv) p.push_back(parse_rat_field(x, "coordinate"));
            coords.push_back(std::move(p));
        }
        std::vector<std::vector<int>> maximal;
        for (const auto& jcell : jc.at("maximal_cells")) maximal.push_back(parse_cell_list(jcell));

        Document doc;
        doc.K = build_complex(std::move(coords), maximal);

        if (!j.contains("function")) return doc;
        const json& jf = j["function"];
        const std::string kind = jf.at("kind").get<std::string>();
        if (kind == "vertex_values") {
            doc.kind = Document::Kind::VertexValues;
            for (const auto& v : jf.at("values"))
                doc.vertex_values.push_back(parse_rat_field(v, "vertex value"));
            if (static_cast<int>(doc.vertex_values.size()) != doc.K->vertex_count())
                fail(Err::ParseError, "vertex_values length must equal the vertex count");
        } else if (kind == "cell_values") {
            doc.kind = Document::Kind::CellValues;
            doc.cell_values.assign(doc.K->cell_count(), 0);
            for (const auto& entry : jf.at("values")) {
                const int c = doc.K->cell_id(parse_cell_list(entry.at("cell")));
                if (c < 0) fail(Err::ParseError, "cell_values entry names a missing cell");
                if (!entry.at("value").is_number_integer())
                    fail(Err::ParseError, "cell_values entries must be integers");
                doc.cell_values[c] = entry.at("value").get<long long>();
            }
        } else if (kind == "cell_affine") {
            doc.kind = Document::Kind::CellAffine;
            doc.cell_affine.resize(doc.K->cell_count());
            for (int c = 0; c < doc.K->cell_count(); ++c)
                doc.cell_affine[c].assign(doc.K->dim(c) + 1, Rat(0));
            for (const auto& entry : jf.at("values")) {
                const int c = doc.K->cell_id(parse_cell_list(entry.at("cell")));
                if (c < 0) fail(Err::ParseError, "cell_affine entry names a missing cell");
                RatVec vals;
                for (const auto& v : entry.at("values"))
                    vals.push_back(parse_rat_field(v, "affine value"));
                if (static_cast<int>(vals.size()) != doc.K->dim(c) + 1)
                    fail(Err::ParseError, "cell_affine data length must be dim+1");
                doc.cell_affine[c] = std::move(vals);
            }
        } else {
            fail(Err::ParseError, "unknown function kind '" + kind + "'");
        }
        return doc;
    } catch (const json::exception& e) {
        fail(Err::ParseError, e.what());
    }
}

std::string serialize_document(const Document& doc) {
    json j;
    j["format"] = 1;
    json jverts = json::array();
    for (int v = 0; v < doc.K->vertex_count(); ++v) {
        json p = json::array();
        for (const Rat& x : doc.K->vertex(v)) p.push_back(rat_str(x));
        jverts.push_back(std::move(p));
    }
    json jcells = json::array();
    for (int c : doc.K->maximal_cells()) jcells.push_back(doc.K->cell_verts(c));
    j["complex"] = {{"vertices", std::move(jverts)}, {"maximal_cells", std::move(jcells)}};

    if (doc.kind == Document::Kind::VertexValues) {
        json vals = json::array();
        for (const Rat& v : doc.vertex_values) vals.push_back(rat_str(v));
        j["function"] = {{"kind", "vertex_values"}, {"values", std::move(vals)}};
    } else if (doc.kind == Document::Kind::CellValues) {
        json vals = json::array();
        for (int c = 0; c < doc.K->cell_count(); ++c) {
            if (doc.cell_values[c] == 0) continue;
            vals.push_back({{"cell", doc.K->cell_verts(c)}, {"value", doc.cell_values[c]}});
        }
        j["function"] = {{"kind", "cell_values"}, {"values", std::move(vals)}};
    } else if (doc.kind == Document::Kind::CellAffine) {
        json vals = json::array();
        for (int c = 0; c < doc.K->cell_count(); ++c) {
            bool all_zero = true;
            for (const Rat& v : doc.cell_affine[c]) all_zero = all_zero && v == 0;
            if (all_zero) continue;
            json data = json::array();
            for (const Rat& v : doc.cell_affine[c]) data.push_back(rat_str(v));
            vals.push_back({{"cell", doc.K->cell_verts(c)}, {"values", std::move(data)}});
        }
        j["function"] = {{"kind", "cell_affine"}, {"values", std::move(vals)}};
    }
    return j.dump(2) + "\n";
}

CFun Document::as_cfun() const {
    require(kind == Kind::CellValues, Err::IncompatibleMethod,
            "function is not constructible (cell_values)");
    return CFun(K, cell_values);
}

DefFun Document::as_deffun() const {
    switch (kind) {
        case Kind::VertexValues: return deffun_from_vertex_values(K, vertex_values);
        case Kind::CellValues: return deffun_from_cfun(CFun(K, cell_values));
        case Kind::CellAffine: return DefFun(K, cell_affine);
        case Kind::None: break;
    }
    fail(Err::IncompatibleMethod, "document carries no function");
}

Document document_from_deffun(const DefFun& h) {
    Document doc;
    doc.K = h.K;
    doc.kind = Document::Kind::CellAffine;
    doc.cell_affine = h.data;
    return doc;
}

Document document_from_cfun(const CFun& h) {
    Document doc;
    doc.K = h.K;
    doc.kind = Document::Kind::CellValues;
    doc.cell_values = h.values;
    return doc;
}

Document document_from_vertex_values(ComplexPtr K, RatVec values) {
    Document doc;
    doc.K = std::move(K);
    doc.kind = Document::Kind::VertexValues;
    doc.vertex_values = std::move(values);
    return doc;
}

bool document_equal(const Document& a, const Document& b) {
    if (a.kind != b.kind) return false;
    if (a.K->vertex_count() != b.K->vertex_count() || a.K->cell_count() != b.K->cell_count())
        return false;
    for (int v = 0; v < a.K->vertex_count(); ++v)
        if (a.K->vertex(v) != b.K->vertex(v)) return false;
    for (int c = 0; c < a.K->cell_count(); ++c)
        if (a.K->cell_verts(c) != b.K->cell_verts(c)) return false;
    return a.vertex_values == b.vertex_values && a.cell_values == b.cell_values &&
           a.cell_affine == b.cell_affine;
}

}  // namespace eulerint
