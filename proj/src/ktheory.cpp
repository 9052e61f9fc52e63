#include "bdk2/ktheory.hpp"

#include <algorithm>
#include <stdexcept>

namespace bdk2 {

SymbolExpression SymbolExpression::operator*(const SymbolExpression& o) const {
  if (field != o.field) throw std::invalid_argument("SymbolExpression: field mismatch");
  SymbolExpression r = *this;
  r.factors.insert(r.factors.end(), o.factors.begin(), o.factors.end());
  return r;
}

SymbolExpression SymbolExpression::inverse() const {
  SymbolExpression r = *this;
  for (SymbolFactor& f : r.factors) f.e = -f.e;
  return r;
}

bool K2Coordinates::is_trivial() const {
  return coords.empty() && sign2 == 1 && signReal == 1;
}

void K2Coordinates::normalize() {
  for (auto it = coords.begin(); it != coords.end();)
    it = it->second.is_one() ? coords.erase(it) : std::next(it);
}

ResidueElement tame_symbol(const FieldElement& u, const FieldElement& v, const Place& place) {
  if (u.is_zero() || v.is_zero()) throw std::invalid_argument("tame_symbol: zero argument");
  if (place.is_archimedean()) throw std::invalid_argument("tame_symbol: archimedean place");
  const Int a = valuation(u, place);
  const Int b = valuation(v, place);
  // residue(u^b v^-a) = residue(u0)^b residue(v0)^-a for the unit parts
  // u0 = u pi^-a, v0 = v pi^-b; this keeps every field element small.
  auto unit_part = [&](const FieldElement& x, Int vx) {
    if (vx == 0) return x;
    FieldElement pi;
    switch (place.kind) {
      case PlaceKind::RationalPrime:
        pi = FieldElement::rational(place.prime);
        break;
      case PlaceKind::FinitePoly:
        pi = FieldElement::function(place.pi, Poly::constant(u.config().p, 1));
        break;
      case PlaceKind::Infinity:
        pi = FieldElement::function(Poly::constant(u.config().p, 1), Poly::t(u.config().p));
        break;
      default:
        throw std::invalid_argument("tame_symbol: bad place");
    }
    return x * pi.pow(-vx);
  };
  const ResidueField fld = ResidueField::of_place(u.config(), place);
  ResidueElement r = ResidueElement::one(fld);
  if (b != 0) r = r * residue(unit_part(u, a), place).pow(b);
  if (a != 0) r = r * residue(unit_part(v, b), place).pow(-a);
  if ((a * b) % 2 != 0) r = r * ResidueElement::from_int(fld, -1);
  return r;
}

namespace {

Int sign_of(const FieldElement& u) { return u.num() < 0 ? -1 : 1; }

// Odd part of a rational number and its 2-adic valuation.
void two_adic(const FieldElement& u, Int& val, Int& odd_mod8) {
  Int n = u.num(), d = u.den();
  val = 0;
  while (n % 2 == 0) { n /= 2; ++val; }
  while (d % 2 == 0) { d /= 2; --val; }
  // n/d mod 8 with d odd
  const Int dinv = mod_inverse(((d % 8) + 8) % 8, 8);
  odd_mod8 = ((n % 8) * dinv % 8 + 8) % 8;
}

Int epsilon(Int x_mod8) { return ((x_mod8 - 1) / 2) % 2 != 0 ? 1 : 0; }
Int omega(Int x_mod8) { return (x_mod8 * x_mod8 - 1) / 8 % 2 != 0 ? 1 : 0; }

}  // namespace

Int hilbert_symbol(const FieldElement& u, const FieldElement& v, const Place& place) {
  if (u.config().kind != FieldKind::Rational)
    throw std::invalid_argument("hilbert_symbol: rational field only");
  switch (place.kind) {
    case PlaceKind::Real:
      return (sign_of(u) < 0 && sign_of(v) < 0) ? -1 : 1;
    case PlaceKind::RationalPrime: {
      if (place.prime == 2) {
        Int a, up, b, vp;
        two_adic(u, a, up);
        two_adic(v, b, vp);
        const Int expo = epsilon(up) * epsilon(vp) + a * omega(vp) + b * omega(up);
        return expo % 2 != 0 ? -1 : 1;
      }
      const ResidueElement t = tame_symbol(u, v, place);
      return t.pow((place.prime - 1) / 2).is_one() ? 1 : -1;
    }
    default:
      throw std::invalid_argument("hilbert_symbol: bad place");
  }
}

namespace {

// Finite places where a factor can have a nontrivial tame coordinate.
std::set<Place> support_places(const SymbolFactor& f) {
  std::set<Place> s;
  for (const FieldElement* x : {&f.u, &f.v})
    for (const auto& [place, val] : places_of(*x)) {
      (void)val;
      if (place.kind != PlaceKind::RationalPrime || place.prime != 2) s.insert(place);
    }
  if (f.u.config().kind == FieldKind::Function) s.insert(Place::infinity());
  return s;
}

}  // namespace

K2Coordinates k2_coordinates(const SymbolExpression& sym) {
  K2Coordinates out;
  out.field = sym.field;
  for (const SymbolFactor& f : sym.factors) {
    if (f.u.is_zero() || f.v.is_zero())
      throw std::invalid_argument("k2_coordinates: zero symbol argument");
    for (const Place& place : support_places(f)) {
      const ResidueElement t = tame_symbol(f.u, f.v, place).pow(f.e);
      auto it = out.coords.find(place);
      if (it == out.coords.end())
        out.coords.emplace(place, t);
      else
        it->second = it->second * t;
    }
    if (sym.field.kind == FieldKind::Rational) {
      Int s2 = hilbert_symbol(f.u, f.v, Place::rational_prime(2));
      Int sr = hilbert_symbol(f.u, f.v, Place::real());
      if (f.e % 2 != 0) {
        out.sign2 *= s2;
        out.signReal *= sr;
      }
    }
  }
  out.normalize();
  return out;
}

bool is_trivial(const SymbolExpression& sym) {
  K2Coordinates c = k2_coordinates(sym);
  if (!c.coords.empty()) return false;
  if (sym.field.kind == FieldKind::Rational) return c.sign2 == 1 && c.signReal == 1;
  // A function-field class with trivial finite coordinates has trivial
  // infinity coordinate by reciprocity.
  return true;
}

bool is_integral(const SymbolExpression& sym, const std::set<Place>& S) {
  for (const auto& [place, value] : k2_coordinates(sym).coords) {
    (void)value;
    if (!S.count(place)) return false;
  }
  return true;
}

SymbolExpression lift_residues(const K2Coordinates& target, const std::set<Place>& S) {
  if (target.field.kind != FieldKind::Function)
    throw std::invalid_argument("lift_residues: function-field kind only");
  if (!S.count(Place::infinity()))
    throw std::invalid_argument("lift_residues: S must contain the infinite place");
  for (const auto& [place, value] : target.coords) {
    (void)value;
    if (place.kind != PlaceKind::FinitePoly)
      throw std::invalid_argument("lift_residues: target must be supported at finite places");
    if (S.count(place))
      throw std::invalid_argument("lift_residues: target support must avoid S");
  }
  const Int p = target.field.p;
  SymbolExpression out = SymbolExpression::identity(target.field);
  std::map<Place, ResidueElement> residual = target.coords;
  auto prune = [&] {
    for (auto it = residual.begin(); it != residual.end();)
      it = it->second.is_one() ? residual.erase(it) : std::next(it);
  };
  prune();
  while (!residual.empty()) {
    // Clear a place of maximal degree; the correcting factor {pi, g} disturbs
    // only places of strictly smaller degree (deg g < deg pi), so this loop
    // terminates.
    auto it = std::max_element(residual.begin(), residual.end(),
                               [](const auto& a, const auto& b) {
                                 return a.first.degree() < b.first.degree();
                               });
    const Place pi = it->first;
    if (S.count(pi))
      throw std::invalid_argument("lift_residues: junk landed inside S at " + pi.str());
    const Poly g = it->second.inverse().value();
    const SymbolFactor f{FieldElement::function(pi.pi, Poly::constant(p, 1)),
                         FieldElement::function(g, Poly::constant(p, 1)), 1};
    out.factors.push_back(f);
    for (const Place& place : support_places(f)) {
      if (place.kind == PlaceKind::Infinity) continue;
      const ResidueElement t = tame_symbol(f.u, f.v, place);
      auto jt = residual.find(place);
      if (jt == residual.end())
        residual.emplace(place, t.inverse());
      else
        jt->second = jt->second * t.inverse();
    }
    prune();
  }
  return out;
}

bool reciprocity_check(const FieldElement& u, const FieldElement& v) {
  if (u.is_zero() || v.is_zero()) throw std::invalid_argument("reciprocity_check: zero argument");
  if (u.config().kind == FieldKind::Rational) {
    Int prod = hilbert_symbol(u, v, Place::real());
    std::set<Place> primes{Place::rational_prime(2)};
    for (const FieldElement* x : {&u, &v})
      for (const auto& [place, val] : places_of(*x)) {
        (void)val;
        primes.insert(place);
      }
    for (const Place& place : primes) prod *= hilbert_symbol(u, v, place);
    return prod == 1;
  }
  const SymbolFactor f{u, v, 1};
  Int prod = 1;
  const Int p = u.config().p;
  for (const Place& place : support_places(f)) {
    const ResidueElement t = tame_symbol(u, v, place);
    prod = (prod % p) * (t.norm() % p) % p;
  }
  return ((prod % p) + p) % p == 1;
}

}  // namespace bdk2
