#pragma once

#include <string>

#include "hypertel/term.hpp"

namespace hypertel {

// Wire format (all integers as decimal strings; plain JSON numbers accepted
// on input):
//   {
//     "p": [["coef", i, j], ...],          // coef * n^i * k^j, standard basis
//     "x": "1", "y": "1",
//     "factors": [{"role": "A|B|U|V", "n": ".", "k": ".", "c": "."}, ...]
//   }
ProperTerm term_from_json_text(const std::string& text);
ProperTerm term_from_file(const std::string& path);
std::string term_to_json_text(const ProperTerm& t);

} // namespace hypertel
