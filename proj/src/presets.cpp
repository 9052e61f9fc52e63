#include "bdk2/presets.hpp"

#include <stdexcept>

namespace bdk2 {

namespace {

IntVec vec(std::initializer_list<Int> xs) {
  IntVec v(static_cast<int>(xs.size()));
  int i = 0;
  for (Int x : xs) v(i++) = x;
  return v;
}

void with_negatives(std::vector<IntVec>& roots, std::vector<IntVec>& coroots) {
  const size_t n = roots.size();
  for (size_t i = 0; i < n; ++i) {
    roots.push_back(-roots[i]);
    coroots.push_back(-coroots[i]);
  }
}

RootDatum gl_n(int n) {
  std::vector<IntVec> roots, coroots;
  // Simple roots e_i - e_{i+1} first, then the remaining positive roots.
  for (int gap = 1; gap < n; ++gap)
    for (int i = 0; i + gap < n; ++i) {
      IntVec r = IntVec::Zero(n);
      r(i) = 1;
      r(i + gap) = -1;
      roots.push_back(r);
      coroots.push_back(r);
    }
  with_negatives(roots, coroots);
  return RootDatum(n, roots, coroots, "GL" + std::to_string(n));
}

RootDatum torus(int n) { return RootDatum(n, {}, {}, "Gm" + std::to_string(n)); }

}  // namespace

std::vector<std::string> preset_names() {
  return {"SL2", "PGL2", "GL2", "GL3", "GL4", "SL3", "Sp4", "Gm1", "Gm2", "Gm3", "Gm4"};
}

RootDatum preset_root_datum(const std::string& name) {
  if (name == "SL2") {
    std::vector<IntVec> r{vec({2})}, c{vec({1})};
    with_negatives(r, c);
    return RootDatum(1, r, c, "SL2");
  }
  if (name == "PGL2") {
    std::vector<IntVec> r{vec({1})}, c{vec({2})};
    with_negatives(r, c);
    return RootDatum(1, r, c, "PGL2");
  }
  if (name == "GL2") return gl_n(2);
  if (name == "GL3") return gl_n(3);
  if (name == "GL4") return gl_n(4);
  if (name == "SL3") {
    // Weight coordinates: coroots are the standard basis, roots the Cartan rows.
    std::vector<IntVec> r{vec({2, -1}), vec({-1, 2}), vec({1, 1})};
    std::vector<IntVec> c{vec({1, 0}), vec({0, 1}), vec({1, 1})};
    with_negatives(r, c);
    return RootDatum(2, r, c, "SL3");
  }
  if (name == "Sp4") {
    // C2: short root e1 - e2 and long root 2 e2 first.
    std::vector<IntVec> r{vec({1, -1}), vec({0, 2}), vec({1, 1}), vec({2, 0})};
    std::vector<IntVec> c{vec({1, -1}), vec({0, 1}), vec({1, 1}), vec({1, 0})};
    with_negatives(r, c);
    return RootDatum(2, r, c, "Sp4");
  }
  if (name.rfind("Gm", 0) == 0 && name.size() == 3 && name[2] >= '1' && name[2] <= '4')
    return torus(name[2] - '0');
  throw std::invalid_argument("preset_root_datum: unknown preset '" + name + "'");
}

}  // namespace bdk2
