#include "hypertel/term_io.hpp"

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

size_t index_field(const json& v, const char* what) {
    Int i = int_field(v, what);
    if (i < 0) fail(ErrorCode::IoError, std::string("negative exponent for ") + what);
    return static_cast<size_t>(to_long_checked(i, what));
}

Role role_from_string(const std::string& s) {
    if (s == "A") return Role::A;
    if (s == "B") return Role::B;
    if (s == "U") return Role::U;
    if (s == "V") return Role::V;
    fail(ErrorCode::IoError, "unknown factor role: " + s);
}

} // namespace

ProperTerm term_from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        fail(ErrorCode::IoError, std::string("term JSON parse error: ") + e.what());
    }
    if (!j.is_object()) fail(ErrorCode::IoError, "term JSON must be an object");
    TermInput in;
    if (!j.contains("p") || !j["p"].is_array())
        fail(ErrorCode::IoError, "term JSON needs a \"p\" array of [coef,i,j] triples");
    std::vector<std::vector<Int>> grid;
    for (const auto& mono : j["p"]) {
        if (!mono.is_array() || mono.size() != 3)
            fail(ErrorCode::IoError, "each \"p\" entry must be a [coef,i,j] triple");
        Int coef = int_field(mono[0], "p coefficient");
        size_t i = index_field(mono[1], "n exponent");
        size_t jj = index_field(mono[2], "k exponent");
        if (grid.size() <= i) grid.resize(i + 1);
        for (auto& row : grid)
            if (row.size() <= jj) row.resize(jj + 1, Int(0));
        if (grid[i].size() <= jj) grid[i].resize(jj + 1, Int(0));
        grid[i][jj] += coef;
    }
    in.p = BiPoly(KBasis::Standard, std::move(grid));
    if (j.contains("x")) in.x = int_field(j["x"], "x");
    if (j.contains("y")) in.y = int_field(j["y"], "y");
    if (j.contains("factors")) {
        if (!j["factors"].is_array())
            fail(ErrorCode::IoError, "\"factors\" must be an array");
        for (const auto& f : j["factors"]) {
            if (!f.is_object() || !f.contains("role"))
                fail(ErrorCode::IoError, "each factor needs a \"role\"");
            GammaFactor g;
            g.role = role_from_string(f["role"].get<std::string>());
            g.n_coef = f.contains("n") ? int_field(f["n"], "factor n") : Int(0);
            g.k_coef = f.contains("k") ? int_field(f["k"], "factor k") : Int(0);
            g.const_coef = f.contains("c") ? int_field(f["c"], "factor c") : Int(0);
            in.factors.push_back(g);
        }
    }
    return normalize(in);
}

ProperTerm term_from_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) fail(ErrorCode::IoError, "cannot open term file: " + path);
    std::stringstream ss;
    ss << is.rdbuf();
    return term_from_json_text(ss.str());
}

std::string term_to_json_text(const ProperTerm& t) {
    json j;
    j["p"] = json::array();
    for (long i = 0; i <= t.p.deg_n(); ++i)
        for (long k = 0; k <= t.p.deg_k(); ++k) {
            const Int& c = t.p.coeff(i, k);
            if (c != 0)
                j["p"].push_back(json::array({int_to_string(c), std::to_string(i), std::to_string(k)}));
        }
    j["x"] = int_to_string(t.x);
    j["y"] = int_to_string(t.y);
    j["factors"] = json::array();
    for (const auto& f : t.factors) {
        json g;
        g["role"] = role_name(f.role);
        g["n"] = int_to_string(f.n_coef);
        g["k"] = int_to_string(f.k_coef);
        g["c"] = int_to_string(f.const_coef);
        j["factors"].push_back(g);
    }
    return j.dump(2);
}

} // namespace hypertel
