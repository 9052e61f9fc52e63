#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bdk2/poly.hpp"

namespace bdk2 {

enum class FieldKind { Rational, Function };

struct FieldConfig {
  FieldKind kind = FieldKind::Function;
  Int p = 5;  // characteristic of the constant field for function fields

  static FieldConfig rationals() { return {FieldKind::Rational, 0}; }
  static FieldConfig function_field(Int p);
  friend bool operator==(const FieldConfig&, const FieldConfig&) = default;
  std::string str() const;
};

FieldConfig parse_field(const std::string& s);  // "Q", "F5t", "F7t", ...

// An element of Q or of F_p(t), always in canonical form: coprime
// numerator/denominator, positive (resp. monic) denominator.
class FieldElement {
 public:
  FieldElement() = default;
  static FieldElement rational(Int num, Int den = 1);
  static FieldElement function(Poly num, Poly den);
  static FieldElement integer(const FieldConfig& cfg, Int n);
  static FieldElement one(const FieldConfig& cfg) { return integer(cfg, 1); }
  static FieldElement zero(const FieldConfig& cfg) { return integer(cfg, 0); }

  const FieldConfig& config() const { return cfg_; }
  bool is_zero() const;
  bool is_one() const;
  Int num() const { return num_; }
  Int den() const { return den_; }
  const Poly& pnum() const { return pnum_; }
  const Poly& pden() const { return pden_; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement inverse() const;
  FieldElement pow(Int e) const;
  friend bool operator==(const FieldElement&, const FieldElement&) = default;

  std::string str() const;

 private:
  FieldConfig cfg_;
  Int num_ = 0, den_ = 1;  // rational kind
  Poly pnum_, pden_;       // function kind
};

FieldElement parse_element(const FieldConfig& cfg, const std::string& s);

enum class PlaceKind {
  RationalPrime,  // includes p = 2
  Real,
  FinitePoly,     // monic irreducible pi over F_p
  Infinity        // val = -degree
};

struct Place {
  PlaceKind kind = PlaceKind::FinitePoly;
  Int prime = 0;  // RationalPrime
  Poly pi;        // FinitePoly

  static Place rational_prime(Int p) { return {PlaceKind::RationalPrime, p, {}}; }
  static Place real() { return {PlaceKind::Real, 0, {}}; }
  static Place finite_poly(Poly pi);
  static Place infinity() { return {PlaceKind::Infinity, 0, {}}; }

  bool is_archimedean() const { return kind == PlaceKind::Real; }
  int degree() const;  // residue degree over the prime field
  friend bool operator==(const Place&, const Place&);
  friend bool operator<(const Place&, const Place&);
  std::string str() const;
};

Place parse_place(const FieldConfig& cfg, const std::string& s);

// Residue field f(place): F_p (modulus t) or F_p[t]/(pi).
struct ResidueField {
  Int p = 0;
  Poly modulus;  // monic irreducible; degree 1 for prime fields

  static ResidueField prime_field(Int p);
  static ResidueField of_place(const FieldConfig& cfg, const Place& place);
  Int order() const;  // p^deg
  friend bool operator==(const ResidueField&, const ResidueField&) = default;
};

class ResidueElement {
 public:
  ResidueElement() = default;
  ResidueElement(ResidueField fld, Poly value);
  static ResidueElement one(const ResidueField& fld);
  static ResidueElement from_int(const ResidueField& fld, Int n);

  const ResidueField& field() const { return fld_; }
  const Poly& value() const { return value_; }
  bool is_one() const;
  bool is_zero() const { return value_.is_zero(); }

  ResidueElement operator*(const ResidueElement& o) const;
  ResidueElement inverse() const;
  ResidueElement pow(Int e) const;
  friend bool operator==(const ResidueElement&, const ResidueElement&) = default;

  // Multiplicative order (the group is cyclic of order p^deg - 1).
  Int order() const;
  // Norm down to the prime field F_p.
  Int norm() const;

  std::string str() const;

 private:
  ResidueField fld_;
  Poly value_;
};

// Normalized discrete valuation; additive in products, val(uniformizer) = 1.
Int valuation(const FieldElement& u, const Place& place);

// Image of a unit (valuation zero) in the residue field.
ResidueElement residue(const FieldElement& u, const Place& place);

// All places of nonzero valuation with their valuations. Over Q the sign and
// the prime 2 appear through their own places (2 as a finite prime; the real
// place carries only the sign and is omitted here).
std::vector<std::pair<Place, Int>> places_of(const FieldElement& u);

}  // namespace bdk2
