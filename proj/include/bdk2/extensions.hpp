#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "bdk2/fields.hpp"
#include "bdk2/lattice.hpp"

namespace bdk2 {

// Coefficient groups available to extensions: F^x, Z (additive), a residue
// multiplicative group f(place)^x, and mu_2 = {+-1}.
enum class CoeffKind { Fx, Z, Resx, Mu2 };

struct CoefficientGroup {
  CoeffKind kind = CoeffKind::Z;
  FieldConfig field;  // Fx
  ResidueField res;   // Resx

  static CoefficientGroup fx(FieldConfig cfg) { return {CoeffKind::Fx, cfg, {}}; }
  static CoefficientGroup z() { return {CoeffKind::Z, {}, {}}; }
  static CoefficientGroup resx(ResidueField fld) { return {CoeffKind::Resx, {}, std::move(fld)}; }
  static CoefficientGroup mu2() { return {CoeffKind::Mu2, {}, {}}; }
  friend bool operator==(const CoefficientGroup&, const CoefficientGroup&) = default;
  std::string str() const;
};

class CoeffElem {
 public:
  CoeffElem() = default;
  static CoeffElem identity(const CoefficientGroup& grp);
  static CoeffElem of_field(const CoefficientGroup& grp, FieldElement u);
  static CoeffElem of_int(Int n);  // Z
  static CoeffElem of_residue(const CoefficientGroup& grp, ResidueElement r);
  static CoeffElem of_sign(Int s);  // mu2

  const CoefficientGroup& group() const { return grp_; }
  const FieldElement& field_value() const { return f_; }
  Int int_value() const { return z_; }  // Z exponent or mu2 sign
  const ResidueElement& residue_value() const { return r_; }

  bool is_identity() const;
  CoeffElem operator*(const CoeffElem& o) const;
  CoeffElem inverse() const;
  CoeffElem pow(Int e) const;
  // Element order; 0 marks infinite order.
  Int order() const;
  friend bool operator==(const CoeffElem&, const CoeffElem&) = default;
  std::string str() const;

 private:
  CoefficientGroup grp_;
  FieldElement f_;
  Int z_ = 0;
  ResidueElement r_;
};

// Integer-valued quadratic cochain q(y) = (y^T a y + b.y)/2 with a symmetric
// and a_ii = b_i mod 2; its coboundary is the bilinear form a.
struct QuadraticCochain {
  IntMat a;
  IntVec b;

  static QuadraticCochain zero(int n);
  Int operator()(const IntVec& y) const;
  const IntMat& bilinear() const { return a; }
  QuadraticCochain operator+(const QuadraticCochain& o) const;
  QuadraticCochain operator-() const;
  friend bool operator==(const QuadraticCochain&, const QuadraticCochain&) = default;
};

// sigma(y1, y2) = Pi a^{B(y1,y2)}; bimultiplicative terms make the cocycle
// condition automatic.
struct CocycleTerm {
  CoeffElem a;
  IntMat form;
};

struct MonomialCocycleExtension {
  Lattice base;
  CoefficientGroup coeff;
  std::vector<CocycleTerm> terms;

  static MonomialCocycleExtension split_ext(Lattice base, CoefficientGroup coeff);
  CoeffElem sigma(const IntVec& y1, const IntVec& y2) const;
  MonomialCocycleExtension inverse() const;  // termwise inverse bases
};

// An element (y, a) of the total group of a monomial extension.
struct ExtElem {
  IntVec y;
  CoeffElem a;
  friend bool operator==(const ExtElem&, const ExtElem&) = default;
};

// phi(y) = Pi a^{q(y)} with integer-valued quadratic exponents.
struct CochainTerm {
  CoeffElem a;
  QuadraticCochain q;
};

struct MonomialCochain {
  Lattice base;
  CoefficientGroup coeff;
  std::vector<CochainTerm> terms;

  static MonomialCochain zero(Lattice base, CoefficientGroup coeff);
  CoeffElem operator()(const IntVec& y) const;
  // d phi(y1,y2) = phi(y1+y2) phi(y1)^-1 phi(y2)^-1, a monomial cocycle.
  MonomialCocycleExtension coboundary() const;
  MonomialCochain operator+(const MonomialCochain& o) const;  // pointwise product
  MonomialCochain operator-() const;
};

ExtElem multiply(const MonomialCocycleExtension& E, const ExtElem& x1, const ExtElem& x2);

MonomialCocycleExtension baer_sum(const MonomialCocycleExtension& E1,
                                  const MonomialCocycleExtension& E2);

// sigma(y1,y2) sigma(y2,y1)^-1; the commutator of lifts of y1, y2.
CoeffElem commutator(const MonomialCocycleExtension& E, const IntVec& y1, const IntVec& y2);

// A coefficient homomorphism with an explicit action on elements.
struct CoeffHom {
  CoefficientGroup source, target;
  std::function<CoeffElem(const CoeffElem&)> map;

  static CoeffHom val_at(const FieldConfig& cfg, const Place& place);      // Fx -> Z
  static CoeffHom residue_at(const FieldConfig& cfg, const Place& place);  // units -> resx
  static CoeffHom mu2_to_fx(const FieldConfig& cfg);
  static CoeffHom mu2_to_resx(const ResidueField& fld);
  // a |-> tame{a, pi_fixed} style maps are built ad hoc from this.
  static CoeffHom custom(CoefficientGroup source, CoefficientGroup target,
                         std::function<CoeffElem(const CoeffElem&)> map);
};

MonomialCocycleExtension pushout(const MonomialCocycleExtension& E, const CoeffHom& h);

MonomialCocycleExtension pullback(const MonomialCocycleExtension& E, const LatticeMap& m);

struct SplitResult {
  std::optional<MonomialCochain> phi;            // d phi . sigma = trivial
  std::optional<std::pair<int, int>> witness;    // basis pair with nontrivial commutator
  bool ok() const { return phi.has_value(); }
};

SplitResult split(const MonomialCocycleExtension& E);

// A cochain rewritten over multiplicatively independent bases (irreducibles,
// primes, a constant-field generator, -1), with exponents accumulated.
struct CanonicalCochainTerm {
  CoeffElem base;
  Int order = 0;  // 0 = infinite
  QuadraticCochain q;
};

std::vector<CanonicalCochainTerm> canonical_cochain_terms(const MonomialCochain& phi);

// Isomorphic iff E1 + E2^- splits; the cochain is the iso data.
SplitResult is_isomorphic(const MonomialCocycleExtension& E1, const MonomialCocycleExtension& E2);

}  // namespace bdk2
