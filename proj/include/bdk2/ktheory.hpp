#pragma once

#include <map>
#include <set>
#include <vector>

#include "bdk2/fields.hpp"

namespace bdk2 {

// A product of Steinberg symbols Pi {u,v}^e in K2(F).
struct SymbolFactor {
  FieldElement u, v;
  Int e = 1;
};

struct SymbolExpression {
  FieldConfig field;
  std::vector<SymbolFactor> factors;  // empty = identity class

  static SymbolExpression identity(const FieldConfig& cfg) { return {cfg, {}}; }
  SymbolExpression operator*(const SymbolExpression& o) const;
  SymbolExpression inverse() const;
};

// Tame coordinates of a K2 class; faithful for the configured fields.
struct K2Coordinates {
  FieldConfig field;
  std::map<Place, ResidueElement> coords;  // normalized: no identity entries
  Int sign2 = 1;     // 2-adic Hilbert symbol (rational kind only)
  Int signReal = 1;  // real Hilbert symbol (rational kind only)

  bool is_trivial() const;
  void normalize();
  friend bool operator==(const K2Coordinates&, const K2Coordinates&) = default;
};

// (-1)^{val(u) val(v)} residue(u^{val(v)} v^{-val(u)}); so d{u,a} = ubar^{val a}
// for units u.
ResidueElement tame_symbol(const FieldElement& u, const FieldElement& v, const Place& place);

// Hilbert symbols over Q, valued in {+1, -1}.
Int hilbert_symbol(const FieldElement& u, const FieldElement& v, const Place& place);

K2Coordinates k2_coordinates(const SymbolExpression& sym);

bool is_trivial(const SymbolExpression& sym);

// Membership in the image of K2(O_S): trivial tame coordinates outside S.
bool is_integral(const SymbolExpression& sym, const std::set<Place>& S);

// Section of the residue map: a symbol expression whose tame coordinates agree
// with `target` at every finite place outside S. Function-field kind only;
// requires the infinite place in S and target support disjoint from S.
SymbolExpression lift_residues(const K2Coordinates& target, const std::set<Place>& S);

// Weil reciprocity (function field) / Hilbert reciprocity (Q) for {u,v}.
bool reciprocity_check(const FieldElement& u, const FieldElement& v);

}  // namespace bdk2
