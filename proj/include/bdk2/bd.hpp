#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bdk2/extensions.hpp"
#include "bdk2/ktheory.hpp"
#include "bdk2/lattice.hpp"

namespace bdk2 {

// A point (s, alpha) of the extension of T(F) incarnated by C; s is the tuple
// of coordinates x_i(s), alpha a K2 class.
struct TorusPoint {
  std::vector<FieldElement> s;
  SymbolExpression alpha;
};

struct IncarnatedTorusExtension {
  Lattice y;
  BilinearIncarnation C;
  FieldConfig field;

  TorusPoint identity() const;
  // The cocycle part Pi {x_i(s), x_j(t)}^{c_ij}.
  SymbolExpression symbol_part(const std::vector<FieldElement>& s,
                               const std::vector<FieldElement>& t) const;
  TorusPoint multiply(const TorusPoint& a, const TorusPoint& b) const;
  TorusPoint inverse(const TorusPoint& a) const;
  // The point u^y = (u^{y_1}, ..., u^{y_n}) with trivial K2 part.
  TorusPoint cocharacter_point(const FieldElement& u, const IntVec& yvec) const;
};

IncarnatedTorusExtension incarnate(const BilinearIncarnation& C, const FieldConfig& field);

// Q(y) = C(y, y).
QuadraticForm first_invariant(const BilinearIncarnation& C);

// D_C: single term (-1, C) over F^x.
MonomialCocycleExtension second_invariant(const BilinearIncarnation& C, const FieldConfig& field);

// Comm(u1^{y1}, u2^{y2}) = {u1, u2}^{B_Q(y1,y2)} as K2 coordinates.
bool torus_commutator_check(const BilinearIncarnation& C, const FieldConfig& field,
                            const IntVec& y1, const IntVec& y2, const FieldElement& u1,
                            const FieldElement& u2);

struct CanonicalDQ {
  IntMat c_q;  // upper triangular
  MonomialCocycleExtension ext;
};

// The canonical D_Q on the coroot lattice: upper-triangular C_Q with
// (C_Q)_ii = Q(gamma_i), (C_Q)_ij = B_Q(gamma_i, gamma_j) for i < j.
CanonicalDQ canonical_DQ(const QuadraticForm& q, const FieldConfig& field);

struct BDTriple {
  RootDatum rd;
  FieldConfig field;
  QuadraticForm q;              // on Y, Weyl-invariant
  MonomialCocycleExtension d;   // of Y by F^x
  LatticeMap p;                 // coroot inclusion Y_SC -> Y
  MonomialCochain phi;          // on Y_SC; d(phi) = sigma_D(p.,p.) sigma_DQ^-1
};

BDTriple third_invariant_solve(const RootDatum& rd, const BilinearIncarnation& C,
                               const FieldConfig& field);

// Verifies the compatibility d(phi) = sigma_D(p.,p.) sigma_DQ^-1 of a triple
// on a grid of coefficient vectors with entries in [-bound, bound].
bool triple_compatibility_check(const BDTriple& t, Int bound = 2);

// alpha_{x (x) s}: on points (t, kappa) -> (t, kappa {x(t), s}); on D_C
// (y, u) -> (y, u s^{<x,y>}).
struct TorusAutomorphism {
  IntVec x;
  FieldElement s;

  TorusPoint apply_point(const IncarnatedTorusExtension& E, const TorusPoint& pt) const;
  ExtElem apply_d(const ExtElem& e) const;
};

TorusAutomorphism torus_automorphism(const IntVec& x, const FieldElement& s);

// (t, kappa) -> (t, kappa Pi {x_i(t), x_j(t)}^{a_ij}) when A = C - C0 has
// A(y,y) = 0 for all y; none otherwise.
struct IncarnationIso {
  IntMat a;
  TorusPoint apply(const FieldConfig& field, const TorusPoint& pt) const;
};

std::optional<IncarnationIso> incarnation_iso(const BilinearIncarnation& C,
                                              const BilinearIncarnation& C0);

struct BDMorphism {
  std::optional<MonomialCochain> psi;  // on Y over F^x; d(psi) = sigma_2 sigma_1^-1
  std::string obstruction;             // nonempty when psi is absent
  bool ok() const { return psi.has_value(); }
};

BDMorphism bd_morphisms(const BDTriple& t1, const BDTriple& t2);

BDTriple bd_baer_sum(const BDTriple& t1, const BDTriple& t2);

}  // namespace bdk2
