#include "asharp/phase_io.hpp"

#include <fstream>
#include <sstream>

#include "asharp/errors.hpp"

namespace asharp {

Poly2 parse_phase_text(const std::string& text) {
  Poly2 p;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    long long i, j, num, den;
    if (!(ls >> i)) continue;  // blank/comment line
    if (!(ls >> j >> num >> den))
      throw PhaseLoadError("phase file line " + std::to_string(lineno) +
                           ": expected 'i j numerator denominator'");
    std::string trailing;
    if (ls >> trailing)
      throw PhaseLoadError("phase file line " + std::to_string(lineno) + ": trailing tokens");
    if (i < 0 || j < 0)
      throw PhaseLoadError("phase file line " + std::to_string(lineno) + ": negative exponent");
    if (den == 0)
      throw PhaseLoadError("phase file line " + std::to_string(lineno) + ": zero denominator");
    p.set(static_cast<int>(i), static_cast<int>(j),
          p.coeff(static_cast<int>(i), static_cast<int>(j)) + Rational(num, den));
  }
  return p;
}

Poly2 load_phase_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw PhaseLoadError("cannot open phase file: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_phase_text(ss.str());
}

std::string phase_to_text(const Poly2& poly) {
  std::ostringstream os;
  os << "# monomials: i j numerator denominator  ((num/den) * x1^i * x2^j)\n";
  for (const auto& [ij, c] : poly.terms())
    os << ij.first << " " << ij.second << " " << c.num() << " " << c.den() << "\n";
  return os.str();
}

}  // namespace asharp
