#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bdk2/bd.hpp"
#include "bdk2/extensions.hpp"

namespace bdk2 {

// An automorphism (y, a) -> (y, a + <w, y>) of a split Y + Z object.
struct EZAutomorphism {
  IntVec w;

  ExtElem apply(const ExtElem& e) const {
    return {e.y, e.a * CoeffElem::of_int(w.dot(e.y))};
  }
  friend bool operator==(const EZAutomorphism&, const EZAutomorphism&) = default;
};

// An object of the EZ category: an extension Y' of Y by Z with trivial
// commutator, plus morphism data from the split Y_SC + Z recorded as the
// twist psi: Y_SC -> Z against the canonical section.
struct EZObject {
  MonomialCocycleExtension yprime;  // over Z
  LatticeMap p;                     // Y_SC -> Y
  LatticeMap psi;                   // Y_SC -> Z (1 x rank_SC)

  EZObject twisted(const EZAutomorphism& alpha) const;
};

struct ResidualExtension {
  Place place;
  MonomialCocycleExtension cocycle;  // of Y by f(place)^x
  std::optional<MonomialCochain> splitting;
};

struct IntegralModelReport {
  bool exists = false;
  std::optional<MonomialCochain> witness;  // splitting nu of val(D), over Z
  std::string obstruction;                 // SNF-presented when exists is false
  int torsor_rank = 0;                     // rank of { h : h o p = 0 }
  std::vector<Int> torsion;                // elementary divisors > 1 of Y/p(Y_SC)
};

// Pushout of an F^x-extension along val at the place.
MonomialCocycleExtension val_functor(const MonomialCocycleExtension& D, const Place& place);

// Trivialization of val(D_Q): the zero cochain (base -1 has val 0).
MonomialCochain delta_Q(const QuadraticForm& q);

ResidualExtension residual_extension(const BilinearIncarnation& C, const FieldConfig& field,
                                     const Place& place);

// (EAut): (y, a) -> (y, a + val(s) <x, y>).
EZAutomorphism residual_automorphism(const IntVec& x, const FieldElement& s, const Place& place);

// (BAut): val-pushout of (y, u) -> (y, u s^{<x,y>}), computed through field
// arithmetic rather than by the closed formula.
EZAutomorphism bd_automorphism_val(const IntVec& x, const FieldElement& s, const Place& place);

// Naturality of N = Id on Y + Z: (EAut) = (BAut) on every sample.
bool natural_iso_check(const BilinearIncarnation& C, const FieldConfig& field, const Place& place,
                       const std::vector<TorusAutomorphism>& samples);

EZObject ez_of_residual(const RootDatum& rd, const BilinearIncarnation& C,
                        const FieldConfig& field, const Place& place);

EZObject val_bd(const BDTriple& t, const Place& place);

IntegralModelReport decide_integral_model(const BDTriple& t, const Place& place);

// Exactness check: the witnesses of decide_integral_model and the compatible
// residual trivializations are torsors under { h : h o p = 0 } with the same
// action, compared through two independent evaluation routes.
bool kernel_category_check(const BDTriple& t, const Place& place);

}  // namespace bdk2
