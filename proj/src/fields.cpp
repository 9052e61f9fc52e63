#include "bdk2/fields.hpp"

#include <cctype>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace bdk2 {

namespace {

bool is_prime(Int n) {
  if (n < 2) return false;
  for (Int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

FieldConfig FieldConfig::function_field(Int p) {
  if (!is_prime(p) || p > 97)
    throw std::invalid_argument("FieldConfig: characteristic must be a prime <= 97");
  return {FieldKind::Function, p};
}

std::string FieldConfig::str() const {
  if (kind == FieldKind::Rational) return "Q";
  return "F" + std::to_string(p) + "t";
}

FieldConfig parse_field(const std::string& s) {
  if (s == "Q") return FieldConfig::rationals();
  if (s.size() >= 3 && s.front() == 'F' && s.back() == 't')
    return FieldConfig::function_field(std::stoll(s.substr(1, s.size() - 2)));
  throw std::invalid_argument("parse_field: unknown field '" + s + "'");
}

FieldElement FieldElement::rational(Int num, Int den) {
  if (den == 0) throw std::invalid_argument("FieldElement: zero denominator");
  if (den < 0) { num = -num; den = -den; }
  const Int g = std::gcd(std::abs(num), den);
  FieldElement e;
  e.cfg_ = FieldConfig::rationals();
  e.num_ = (g == 0) ? 0 : num / g;
  e.den_ = (g == 0) ? 1 : den / g;
  return e;
}

FieldElement FieldElement::function(Poly num, Poly den) {
  if (den.is_zero()) throw std::invalid_argument("FieldElement: zero denominator");
  const Int p = den.p();
  if (num.is_zero()) num = Poly::zero(p);
  const Poly g = num.is_zero() ? den.monic() : poly_gcd(num, den);
  num = num / g;
  den = den / g;
  // Make the denominator monic, moving the unit into the numerator.
  const Int lead = den.leading();
  den = den.monic();
  num = num * Poly::constant(p, mod_inverse(lead, p));
  FieldElement e;
  e.cfg_ = FieldConfig::function_field(p);
  e.pnum_ = std::move(num);
  e.pden_ = std::move(den);
  return e;
}

FieldElement FieldElement::integer(const FieldConfig& cfg, Int n) {
  if (cfg.kind == FieldKind::Rational) return rational(n, 1);
  return function(Poly::constant(cfg.p, n), Poly::constant(cfg.p, 1));
}

bool FieldElement::is_zero() const {
  return cfg_.kind == FieldKind::Rational ? num_ == 0 : pnum_.is_zero();
}

bool FieldElement::is_one() const {
  if (cfg_.kind == FieldKind::Rational) return num_ == 1 && den_ == 1;
  return pnum_ == Poly::constant(cfg_.p, 1) && pden_ == Poly::constant(cfg_.p, 1);
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  if (cfg_ != o.cfg_) throw std::invalid_argument("FieldElement: field mismatch");
  if (cfg_.kind == FieldKind::Rational)
    return rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  return function(pnum_ * o.pden_ + o.pnum_ * pden_, pden_ * o.pden_);
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  if (cfg_.kind == FieldKind::Rational) return *this + rational(-o.num_, o.den_);
  return *this + function(-o.pnum_, o.pden_);
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  if (cfg_ != o.cfg_) throw std::invalid_argument("FieldElement: field mismatch");
  if (cfg_.kind == FieldKind::Rational) {
    // Cross-reduce before multiplying to keep intermediates in range.
    const Int g1 = std::gcd(std::abs(num_), o.den_);
    const Int g2 = std::gcd(std::abs(o.num_), den_);
    return rational((num_ / g1) * (o.num_ / g2), (den_ / g2) * (o.den_ / g1));
  }
  return function(pnum_ * o.pnum_, pden_ * o.pden_);
}

FieldElement FieldElement::operator/(const FieldElement& o) const { return *this * o.inverse(); }

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw std::invalid_argument("FieldElement: inverse of zero");
  if (cfg_.kind == FieldKind::Rational) return rational(den_, num_);
  return function(pden_, pnum_);
}

FieldElement FieldElement::pow(Int e) const {
  FieldElement base = (e < 0) ? inverse() : *this;
  if (e < 0) e = -e;
  FieldElement r = one(cfg_);
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

std::string FieldElement::str() const {
  if (cfg_.kind == FieldKind::Rational)
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  if (pden_ == Poly::constant(cfg_.p, 1)) return pnum_.str();
  const bool wrap_num = pnum_.degree() > 0;
  const bool wrap_den = pden_.degree() > 0;
  return (wrap_num ? "(" + pnum_.str() + ")" : pnum_.str()) + "/" +
         (wrap_den ? "(" + pden_.str() + ")" : pden_.str());
}

namespace {

std::string strip(const std::string& s) {
  size_t a = s.find_first_not_of(" \t");
  size_t b = s.find_last_not_of(" \t");
  if (a == std::string::npos) return "";
  std::string t = s.substr(a, b - a + 1);
  if (t.size() >= 2 && t.front() == '(' && t.back() == ')') {
    int depth = 0;
    bool outer = true;
    for (size_t i = 0; i + 1 < t.size(); ++i) {
      if (t[i] == '(') ++depth;
      if (t[i] == ')') --depth;
      if (depth == 0) { outer = false; break; }
    }
    if (outer) return strip(t.substr(1, t.size() - 2));
  }
  return t;
}

// "t^2+3*t+1" and friends; also bare integers.
Poly parse_poly(Int p, const std::string& input) {
  const std::string s = strip(input);
  if (s.empty()) throw std::invalid_argument("parse: empty polynomial");
  std::vector<Int> coeffs;
  auto add_term = [&](Int coef, int deg) {
    if (deg >= static_cast<int>(coeffs.size())) coeffs.resize(deg + 1, 0);
    coeffs[deg] += coef;
  };
  size_t i = 0;
  while (i < s.size()) {
    Int sign = 1;
    while (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      if (s[i] == '-') sign = -sign;
      ++i;
    }
    if (i >= s.size()) throw std::invalid_argument("parse: dangling sign in '" + input + "'");
    Int coef = 1;
    bool have_coef = false;
    if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      coef = 0;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
        coef = coef * 10 + (s[i++] - '0');
      have_coef = true;
    }
    if (i < s.size() && s[i] == '*') ++i;
    int deg = 0;
    if (i < s.size() && s[i] == 't') {
      ++i;
      deg = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        deg = 0;
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
          throw std::invalid_argument("parse: bad exponent in '" + input + "'");
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
          deg = deg * 10 + (s[i++] - '0');
      }
    } else if (!have_coef) {
      throw std::invalid_argument("parse: unexpected token at '" + s.substr(i) + "'");
    }
    add_term(sign * coef, deg);
  }
  return Poly(p, std::move(coeffs));
}

// Split "num/den" at the top level (ignoring '/' inside parentheses).
bool split_fraction(const std::string& s, std::string& num, std::string& den) {
  int depth = 0;
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (s[i] == '/' && depth == 0) {
      num = s.substr(0, i);
      den = s.substr(i + 1);
      return true;
    }
  }
  return false;
}

}  // namespace

FieldElement parse_element(const FieldConfig& cfg, const std::string& input) {
  const std::string s = strip(input);
  std::string num = s, den;
  const bool fraction = split_fraction(s, num, den);
  if (cfg.kind == FieldKind::Rational) {
    const Int n = std::stoll(strip(num));
    const Int d = fraction ? std::stoll(strip(den)) : 1;
    return FieldElement::rational(n, d);
  }
  const Poly pn = parse_poly(cfg.p, num);
  const Poly pd = fraction ? parse_poly(cfg.p, den) : Poly::constant(cfg.p, 1);
  return FieldElement::function(pn, pd);
}

Place Place::finite_poly(Poly pi) {
  pi = pi.monic();
  if (!is_irreducible(pi)) throw std::invalid_argument("Place: modulus not irreducible");
  return {PlaceKind::FinitePoly, 0, std::move(pi)};
}

int Place::degree() const { return kind == PlaceKind::FinitePoly ? pi.degree() : 1; }

bool operator==(const Place& a, const Place& b) {
  return a.kind == b.kind && a.prime == b.prime && a.pi == b.pi;
}

bool operator<(const Place& a, const Place& b) {
  if (a.kind != b.kind) return a.kind < b.kind;
  if (a.prime != b.prime) return a.prime < b.prime;
  if (a.pi.degree() != b.pi.degree()) return a.pi.degree() < b.pi.degree();
  return a.pi.coeffs() < b.pi.coeffs();
}

std::string Place::str() const {
  switch (kind) {
    case PlaceKind::RationalPrime: return "p:" + std::to_string(prime);
    case PlaceKind::Real: return "real";
    case PlaceKind::FinitePoly: return pi.str();
    case PlaceKind::Infinity: return "inf";
  }
  return "?";
}

Place parse_place(const FieldConfig& cfg, const std::string& input) {
  const std::string s = strip(input);
  if (s == "real") return Place::real();
  if (s == "inf") return Place::infinity();
  if (s.rfind("p:", 0) == 0) {
    const Int p = std::stoll(s.substr(2));
    if (!is_prime(p)) throw std::invalid_argument("parse_place: '" + s + "' is not prime");
    return Place::rational_prime(p);
  }
  if (cfg.kind != FieldKind::Function)
    throw std::invalid_argument("parse_place: polynomial place needs a function field");
  return Place::finite_poly(parse_poly(cfg.p, s));
}

ResidueField ResidueField::prime_field(Int p) { return {p, Poly::t(p)}; }

ResidueField ResidueField::of_place(const FieldConfig& cfg, const Place& place) {
  switch (place.kind) {
    case PlaceKind::RationalPrime: return prime_field(place.prime);
    case PlaceKind::FinitePoly:
      if (place.pi.degree() == 1) return prime_field(cfg.p);
      return {cfg.p, place.pi};
    case PlaceKind::Infinity: return prime_field(cfg.p);
    case PlaceKind::Real:
      throw std::invalid_argument("ResidueField: the real place has no residue field");
  }
  throw std::logic_error("ResidueField: bad place");
}

Int ResidueField::order() const {
  Int q = 1;
  for (int i = 0; i < modulus.degree(); ++i) q *= p;
  return q;
}

ResidueElement::ResidueElement(ResidueField fld, Poly value) : fld_(std::move(fld)) {
  value_ = value % fld_.modulus;
}

ResidueElement ResidueElement::one(const ResidueField& fld) {
  return ResidueElement(fld, Poly::constant(fld.p, 1));
}

ResidueElement ResidueElement::from_int(const ResidueField& fld, Int n) {
  return ResidueElement(fld, Poly::constant(fld.p, ((n % fld.p) + fld.p) % fld.p));
}

bool ResidueElement::is_one() const { return value_ == Poly::constant(fld_.p, 1); }

ResidueElement ResidueElement::operator*(const ResidueElement& o) const {
  if (fld_ != o.fld_) throw std::invalid_argument("ResidueElement: field mismatch");
  return ResidueElement(fld_, value_ * o.value_);
}

ResidueElement ResidueElement::inverse() const {
  return ResidueElement(fld_, poly_inverse_mod(value_, fld_.modulus));
}

ResidueElement ResidueElement::pow(Int e) const {
  if (is_zero()) throw std::invalid_argument("ResidueElement: power of zero");
  const Int group = fld_.order() - 1;
  e %= group;
  if (e < 0) e += group;
  return ResidueElement(fld_, poly_powmod(value_, e, fld_.modulus));
}

Int ResidueElement::order() const {
  if (is_zero()) throw std::invalid_argument("ResidueElement: order of zero");
  const Int group = fld_.order() - 1;
  Int ord = 1;
  ResidueElement x = *this;
  while (!x.is_one()) {
    x = x * (*this);
    ++ord;
    if (ord > group) throw std::logic_error("ResidueElement: order overflow");
  }
  return ord;
}

Int ResidueElement::norm() const {
  const Int q = fld_.order();
  const Int e = (q - 1) / (fld_.p - 1);
  const Poly n = poly_powmod(value_, e, fld_.modulus);
  if (n.degree() > 0) throw std::logic_error("ResidueElement: norm not in the prime field");
  return n.coeff(0);
}

std::string ResidueElement::str() const { return value_.str(); }

Int valuation(const FieldElement& u, const Place& place) {
  if (u.is_zero()) throw std::invalid_argument("valuation: zero element");
  const FieldConfig& cfg = u.config();
  switch (place.kind) {
    case PlaceKind::RationalPrime: {
      if (cfg.kind != FieldKind::Rational)
        throw std::invalid_argument("valuation: place/field mismatch");
      auto ord = [&](Int n) {
        Int v = 0;
        n = std::abs(n);
        while (n % place.prime == 0) { n /= place.prime; ++v; }
        return v;
      };
      return ord(u.num()) - ord(u.den());
    }
    case PlaceKind::FinitePoly: {
      if (cfg.kind != FieldKind::Function)
        throw std::invalid_argument("valuation: place/field mismatch");
      auto ord = [&](Poly f) {
        Int v = 0;
        while (!f.is_zero() && (f % place.pi).is_zero()) { f = f / place.pi; ++v; }
        return v;
      };
      return ord(u.pnum()) - ord(u.pden());
    }
    case PlaceKind::Infinity:
      if (cfg.kind != FieldKind::Function)
        throw std::invalid_argument("valuation: place/field mismatch");
      return static_cast<Int>(u.pden().degree() - u.pnum().degree());
    case PlaceKind::Real:
      throw std::invalid_argument("valuation: the real place is archimedean");
  }
  throw std::logic_error("valuation: bad place");
}

ResidueElement residue(const FieldElement& u, const Place& place) {
  if (valuation(u, place) != 0)
    throw std::invalid_argument("residue: element is not a unit at the place");
  const ResidueField fld = ResidueField::of_place(u.config(), place);
  switch (place.kind) {
    case PlaceKind::RationalPrime: {
      const Int n = ((u.num() % place.prime) + place.prime) % place.prime;
      const Int d = ((u.den() % place.prime) + place.prime) % place.prime;
      return ResidueElement(fld, Poly::constant(place.prime, n)) *
             ResidueElement(fld, Poly::constant(place.prime, d)).inverse();
    }
    case PlaceKind::FinitePoly:
      return ResidueElement(fld, u.pnum() % place.pi) *
             ResidueElement(fld, u.pden() % place.pi).inverse();
    case PlaceKind::Infinity: {
      // deg num == deg den (den monic), so the value at infinity is lc(num).
      return ResidueElement(fld, Poly::constant(fld.p, u.pnum().leading()));
    }
    default:
      throw std::invalid_argument("residue: bad place");
  }
}

std::vector<std::pair<Place, Int>> places_of(const FieldElement& u) {
  if (u.is_zero()) throw std::invalid_argument("places_of: zero element");
  std::map<Place, Int> vals;
  if (u.config().kind == FieldKind::Rational) {
    auto account = [&](Int n, Int sign) {
      n = std::abs(n);
      for (Int d = 2; d * d <= n; ++d) {
        while (n % d == 0) { vals[Place::rational_prime(d)] += sign; n /= d; }
      }
      if (n > 1) vals[Place::rational_prime(n)] += sign;
    };
    account(u.num(), 1);
    account(u.den(), -1);
  } else {
    Int unit;
    if (u.pnum().degree() > 0)
      for (const PolyFactor& f : factor_poly(u.pnum(), unit))
        vals[Place::finite_poly(f.factor)] += f.multiplicity;
    if (u.pden().degree() > 0)
      for (const PolyFactor& f : factor_poly(u.pden(), unit))
        vals[Place::finite_poly(f.factor)] -= f.multiplicity;
    const Int vinf = valuation(u, Place::infinity());
    if (vinf != 0) vals[Place::infinity()] = vinf;
  }
  std::vector<std::pair<Place, Int>> out;
  for (auto& [place, v] : vals)
    if (v != 0) out.emplace_back(place, v);
  return out;
}

}  // namespace bdk2
