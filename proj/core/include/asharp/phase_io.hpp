#pragma once

#include <string>

#include "asharp/phase.hpp"

namespace asharp {

// Phase file grammar: one monomial per line as four integers
//   i j numerator denominator
// meaning (num/den) * x1^i * x2^j. Blank lines and '#' comments allowed.
// Repeated (i,j) entries accumulate.
Poly2 parse_phase_text(const std::string& text);     // PhaseLoadError on bad syntax
Poly2 load_phase_file(const std::string& path);      // PhaseLoadError on missing file
std::string phase_to_text(const Poly2& poly);        // round-trips through the parser

}  // namespace asharp
