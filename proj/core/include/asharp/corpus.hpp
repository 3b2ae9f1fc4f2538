#pragma once

#include <string>
#include <vector>

#include "asharp/phase.hpp"

namespace asharp {

// Built-in polynomial phase corpus. Names describe the formula:
//   tailN        x2^2 + x1^N
//   foldM        (x2 - x1^M)^2
//   foldM_tailN  (x2 - x1^M)^2 + x1^N
//   crossM_tailN x2^2 + x1^M*x2 + x1^N
std::vector<std::string> corpus_names();
bool corpus_has(const std::string& name);
PolynomialPhase corpus_phase(const std::string& name);  // DomainError on unknown name

}  // namespace asharp
