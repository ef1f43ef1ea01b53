#include "nullcone/json_io.hpp"

#include <json.hpp>

namespace nullcone {

namespace {

using nlohmann::json;

Scalar scalar_from_json(const json& j, Field f) {
    if (j.is_number_integer()) return f.from_int(j.get<long>());
    if (j.is_string()) return f.parse(j.get<std::string>());
    throw parse_error("matrix entries must be integers or fraction strings", 0);
}

json scalar_to_json(const Scalar& s) {
    if (s.field().is_rational()) {
        const mpq_class& q = s.rational();
        if (q.get_den() == 1 && q.get_num().fits_slong_p()) return json(q.get_num().get_si());
        return json(q.get_str());
    }
    return json(static_cast<long>(s.residue()));
}

}  // namespace

MatrixTuple parse_tuple_document(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw parse_error(std::string("invalid JSON: ") + e.what(), e.byte);
    }
    try {
        std::string field_name = doc.at("field").get<std::string>();
        Field f = Field::rationals();
        if (field_name == "gfp") {
            f = Field::gfp(doc.at("p").get<std::uint64_t>());
        } else if (field_name != "rational") {
            throw parse_error("field must be \"rational\" or \"gfp\"", 0);
        }
        std::size_t n = doc.at("n").get<std::size_t>();
        std::size_t m = doc.at("m").get<std::size_t>();
        const json& mats = doc.at("matrices");
        if (!mats.is_array() || mats.size() != m)
            throw parse_error("expected " + std::to_string(m) + " matrices", 0);
        std::vector<Mat> comps;
        for (const json& jm : mats) {
            if (!jm.is_array() || jm.size() != n)
                throw parse_error("each matrix needs " + std::to_string(n) + " rows", 0);
            Mat c(f, n, n);
            for (std::size_t i = 0; i < n; ++i) {
                if (!jm[i].is_array() || jm[i].size() != n)
                    throw parse_error("each row needs " + std::to_string(n) + " entries", 0);
                for (std::size_t k = 0; k < n; ++k) c.at(i, k) = scalar_from_json(jm[i][k], f);
            }
            comps.push_back(std::move(c));
        }
        return MatrixTuple(n, std::move(comps));
    } catch (const json::exception& e) {
        throw parse_error(std::string("bad tuple document: ") + e.what(), 0);
    }
}

std::string emit_tuple_document(const MatrixTuple& t, int indent) {
    json doc;
    Field f = t.field();
    if (f.is_rational()) {
        doc["field"] = "rational";
    } else {
        doc["field"] = "gfp";
        doc["p"] = f.prime();
    }
    doc["n"] = t.n();
    doc["m"] = t.m();
    json mats = json::array();
    for (std::size_t c = 0; c < t.m(); ++c) {
        json jm = json::array();
        for (std::size_t i = 0; i < t.n(); ++i) {
            json row = json::array();
            for (std::size_t k = 0; k < t.n(); ++k)
                row.push_back(scalar_to_json(t.component(c).at(i, k)));
            jm.push_back(row);
        }
        mats.push_back(jm);
    }
    doc["matrices"] = mats;
    return doc.dump(indent);
}

Mat parse_inline_matrix(const std::string& text, Field f) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw parse_error(std::string("invalid matrix literal: ") + e.what(), e.byte);
    }
    if (!j.is_array() || j.empty()) throw parse_error("matrix literal must be a nested array", 0);
    std::size_t rows = j.size();
    if (!j[0].is_array()) throw parse_error("matrix literal must be a nested array", 0);
    std::size_t cols = j[0].size();
    Mat m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols)
            throw parse_error("ragged matrix literal", 0);
        for (std::size_t k = 0; k < cols; ++k) m.at(i, k) = scalar_from_json(j[i][k], f);
    }
    return m;
}

}  // namespace nullcone
