#include "confhom/chainio.hpp"

#include <istream>
#include <sstream>

#include <json.hpp>

namespace confhom {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

FieldMatrix matrix_from_json(const FieldTag& tag, const json& rows) {
    if (!rows.is_array() || rows.empty()) throw ParseError("matrix must be a non-empty array");
    const std::size_t r = rows.size();
    const std::size_t c = rows[0].is_array() ? rows[0].size() : 0;
    if (c == 0) throw ParseError("matrix rows must be non-empty arrays");
    FieldMatrix m(tag, r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (!rows[i].is_array() || rows[i].size() != c) throw ParseError("ragged matrix rows");
        for (std::size_t j = 0; j < c; ++j) {
            if (!rows[i][j].is_string())
                throw ParseError("matrix entries must be field element strings");
            m.at(i, j) = parse_field_element(tag, rows[i][j].get<std::string>());
        }
    }
    return m;
}

json parse_json(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw ParseError("invalid JSON");
    return doc;
}

} // namespace

Chain parse_chain(const std::string& text) {
    json doc = parse_json(text);
    if (!doc.is_object()) throw ParseError("chain document must be an object");
    for (const char* key : {"field", "r", "n", "terms"})
        if (!doc.contains(key)) throw ParseError(std::string("missing key '") + key + "'");
    if (!doc["field"].is_string() || !doc["r"].is_number_integer() ||
        !doc["n"].is_number_integer() || !doc["terms"].is_array())
        throw ParseError("bad chain document field types");

    const FieldTag tag = FieldTag::parse(doc["field"].get<std::string>());
    const long long r = doc["r"].get<long long>();
    const long long n = doc["n"].get<long long>();
    if (r < 1 || n < r) throw ParseError("need 1 <= r <= n");

    Chain chain(tag, static_cast<std::size_t>(r), static_cast<std::size_t>(n));
    for (const auto& term : doc["terms"]) {
        if (!term.is_object() || !term.contains("coeff") || !term.contains("matrix") ||
            !term["coeff"].is_number_integer())
            throw ParseError("each term needs an integer 'coeff' and a 'matrix'");
        FieldMatrix m = matrix_from_json(tag, term["matrix"]);
        if (m.rows() != static_cast<std::size_t>(r) || m.cols() != static_cast<std::size_t>(n) + 1)
            throw ParseError("term matrix must be r x (n+1)");
        if (m.rank() != m.rows())
            throw AdmissibilityError("rank-deficient generator " + m.encode());
        Configuration v(m);
        std::vector<std::size_t> bad;
        if (!is_admissible(v, &bad)) {
            std::ostringstream os;
            os << "non-admissible generator " << m.encode() << ": vanishing minor on columns {";
            for (std::size_t k = 0; k < bad.size(); ++k) os << (k ? "," : "") << bad[k];
            os << "}";
            throw AdmissibilityError(os.str());
        }
        chain.add_term(canonicalize(v), term["coeff"].get<long long>());
    }
    return chain;
}

Chain parse_chain_stream(std::istream& in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_chain(buf.str());
}

std::string emit_chain(const Chain& c) {
    ordered_json doc;
    doc["field"] = c.tag().to_string();
    doc["r"] = c.r();
    doc["n"] = c.n();
    doc["terms"] = ordered_json::array();
    for (const auto& [g, coeff] : c.terms()) { // map order = canonical order
        ordered_json term;
        term["coeff"] = coeff;
        ordered_json rows = ordered_json::array();
        for (std::size_t i = 0; i < g.r(); ++i) {
            ordered_json row = ordered_json::array();
            for (std::size_t j = 0; j <= g.n(); ++j) row.push_back(g.matrix().at(i, j).encode());
            rows.push_back(std::move(row));
        }
        term["matrix"] = std::move(rows);
        doc["terms"].push_back(std::move(term));
    }
    return doc.dump(2) + "\n";
}

FieldMatrix parse_matrix_document(const std::string& text) {
    json doc = parse_json(text);
    if (!doc.is_object() || !doc.contains("field") || !doc.contains("matrix") ||
        !doc["field"].is_string())
        throw ParseError("matrix document needs 'field' and 'matrix'");
    const FieldTag tag = FieldTag::parse(doc["field"].get<std::string>());
    return matrix_from_json(tag, doc["matrix"]);
}

} // namespace confhom
