#include "hypertel/relation_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace hypertel {

namespace {

using nlohmann::json;

Int int_field(const json& v, const char* what) {
    if (v.is_string()) return int_from_string(v.get<std::string>());
    if (v.is_number_integer()) return int_from_string(v.dump());
    fail(ErrorCode::IoError, std::string("expected integer (decimal string) for ") + what);
}

long long_field(const json& v, const char* what) {
    return to_long_checked(int_field(v, what), what);
}

} // namespace

CTRelation relation_from_json_text(const ProperTerm& term, const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        fail(ErrorCode::IoError, std::string("relation JSON parse error: ") + e.what());
    }
    if (!j.is_object() || !j.contains("ell") || !j["ell"].is_array())
        fail(ErrorCode::IoError, "relation JSON needs an \"ell\" array of coefficient lists");

    RelationKind kind = RelationKind::Minimal;
    if (j.contains("kind")) {
        std::string k = j["kind"].get<std::string>();
        if (k == "minimal")
            kind = RelationKind::Minimal;
        else if (k == "nonminimal")
            kind = RelationKind::Nonminimal;
        else
            fail(ErrorCode::IoError, "unknown relation kind: " + k);
    }

    std::vector<UniPoly> ell;
    for (const auto& entry : j["ell"]) {
        if (!entry.is_array()) fail(ErrorCode::IoError, "each \"ell\" entry must be an array");
        std::vector<Int> coeffs;
        for (const auto& c : entry) coeffs.push_back(int_field(c, "ell coefficient"));
        ell.emplace_back(std::move(coeffs));
    }
    if (ell.empty()) fail(ErrorCode::IoError, "relation needs at least one ell entry");
    long r = j.contains("r") ? long_field(j["r"], "r") : static_cast<long>(ell.size()) - 1;
    if (r + 1 != static_cast<long>(ell.size()))
        fail(ErrorCode::IoError, "r does not match the number of ell entries");

    long s = j.contains("s") ? long_field(j["s"], "s") : -1;
    std::vector<std::vector<Int>> y_cols;
    if (j.contains("Y")) {
        if (!j["Y"].is_array()) fail(ErrorCode::IoError, "\"Y\" must be an array of triples");
        for (const auto& mono : j["Y"]) {
            if (!mono.is_array() || mono.size() != 3)
                fail(ErrorCode::IoError, "each \"Y\" entry must be a [coef,i,j] triple");
            Int coef = int_field(mono[0], "Y coefficient");
            long i = long_field(mono[1], "Y n exponent");
            long jj = long_field(mono[2], "Y k index");
            if (i < 0 || jj < 0) fail(ErrorCode::IoError, "negative exponent in Y");
            if (static_cast<size_t>(jj) >= y_cols.size()) y_cols.resize(jj + 1);
            auto& col = y_cols[static_cast<size_t>(jj)];
            if (static_cast<size_t>(i) >= col.size()) col.resize(i + 1, Int(0));
            col[static_cast<size_t>(i)] += coef;
        }
    }
    if (s < 0) s = y_cols.empty() ? 0 : static_cast<long>(y_cols.size()) - 1;
    if (static_cast<long>(y_cols.size()) > s + 1)
        fail(ErrorCode::IoError, "Y has k-index entries past s");
    std::vector<UniPoly> ys;
    for (long jj = 0; jj <= s; ++jj)
        ys.emplace_back(static_cast<size_t>(jj) < y_cols.size()
                            ? UniPoly(std::move(y_cols[static_cast<size_t>(jj)]))
                            : UniPoly());

    return assemble_relation(term, std::move(ell), std::move(ys), r, s, kind);
}

CTRelation relation_from_file(const ProperTerm& term, const std::string& path) {
    std::ifstream is(path);
    if (!is) fail(ErrorCode::IoError, "cannot open relation file: " + path);
    std::stringstream ss;
    ss << is.rdbuf();
    return relation_from_json_text(term, ss.str());
}

std::string relation_to_json_text(const CTRelation& rel) {
    json j;
    j["kind"] = rel.kind == RelationKind::Minimal ? "minimal" : "nonminimal";
    j["r"] = rel.r;
    j["s"] = rel.s;
    j["order"] = effective_order(rel);
    j["degree"] = rel.degree;
    j["ell"] = json::array();
    for (const auto& l : rel.ell) {
        json coeffs = json::array();
        for (const auto& c : l.coeffs()) coeffs.push_back(int_to_string(c));
        j["ell"].push_back(coeffs);
    }
    j["Y"] = json::array();
    for (long i = 0; i <= rel.Y.deg_n(); ++i)
        for (long k = 0; k <= rel.Y.deg_k(); ++k) {
            const Int& c = rel.Y.coeff(i, k);
            if (c != 0)
                j["Y"].push_back(
                    json::array({int_to_string(c), std::to_string(i), std::to_string(k)}));
        }
    return j.dump(2);
}

std::string operator_str(const CTRelation& rel) {
    long order = effective_order(rel);
    std::string out;
    for (long i = order; i >= 0; --i) {
        const UniPoly& c = rel.ell[static_cast<size_t>(i)];
        if (c.is_zero()) continue;
        bool negate = false;
        std::string cs;
        if (c.degree() == 0) {
            Int a = c.coeff(0);
            negate = a < 0;
            Int mag = abs_int(a);
            if (mag != 1 || i == 0) cs = mag.get_str();
        } else if (c.coeffs().back() < 0) {
            negate = true;
            cs = "(" + (-c).str("n") + ")";
        } else {
            cs = "(" + c.str("n") + ")";
        }
        if (out.empty())
            out += negate ? "-" : "";
        else
            out += negate ? " - " : " + ";
        out += cs;
        if (i > 0) {
            if (!cs.empty()) out += "*";
            out += "S_n";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

} // namespace hypertel
