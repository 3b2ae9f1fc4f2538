#include "asharp/corpus.hpp"

#include <map>

#include "asharp/errors.hpp"

namespace asharp {

namespace {

Poly2 tail(int n) { return mono(0, 2) + mono(n, 0); }

Poly2 fold(int m) {
  // (x2 - x1^m)^2
  Poly2 d = mono(0, 1) - mono(m, 0);
  return d * d;
}

Poly2 fold_tail(int m, int n) { return fold(m) + mono(n, 0); }

Poly2 cross_tail(int m, int n) { return mono(0, 2) + mono(m, 1) + mono(n, 0); }

const std::map<std::string, Poly2>& table() {
  static const std::map<std::string, Poly2> t = {
      {"tail2", tail(2)},
      {"tail3", tail(3)},
      {"tail4", tail(4)},
      {"tail6", tail(6)},
      {"fold2", fold(2)},
      {"fold3", fold(3)},
      {"fold4", fold(4)},
      {"fold2_tail8", fold_tail(2, 8)},
      {"fold3_tail7", fold_tail(3, 7)},
      {"fold3_tail8", fold_tail(3, 8)},
      {"cross2_tail5", cross_tail(2, 5)},
      {"cross3_tail4", cross_tail(3, 4)},
  };
  return t;
}

}  // namespace

std::vector<std::string> corpus_names() {
  std::vector<std::string> names;
  for (const auto& [k, v] : table()) names.push_back(k);
  return names;
}

bool corpus_has(const std::string& name) { return table().count(name) > 0; }

PolynomialPhase corpus_phase(const std::string& name) {
  auto it = table().find(name);
  if (it == table().end()) throw DomainError("unknown corpus phase: " + name);
  return PolynomialPhase(it->second);
}

}  // namespace asharp
