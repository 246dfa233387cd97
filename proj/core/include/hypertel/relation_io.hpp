#pragma once

#include <string>

#include "hypertel/solver.hpp"

namespace hypertel {

// Wire format (integers as decimal strings; plain JSON numbers accepted on
// input):
//   {
//     "kind": "minimal" | "nonminimal",
//     "r": 1, "s": 0,
//     "ell": [["-2"], ["1"]],       // coefficient lists, constant term first
//     "Y": [["coef", i, j], ...]    // coef * n^i * C(k,j)
//   }
// Loading re-derives the certificate from the term and re-verifies the
// defining identity; solver diagnostics (escalations, system sizes) are not
// serialized.
CTRelation relation_from_json_text(const ProperTerm& term, const std::string& text);
CTRelation relation_from_file(const ProperTerm& term, const std::string& path);
std::string relation_to_json_text(const CTRelation& rel);

// "S_n^2 - 3*S_n + (n + 1)" style rendering of the operator
std::string operator_str(const CTRelation& rel);

} // namespace hypertel
