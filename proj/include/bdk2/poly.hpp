#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace bdk2 {

using Int = std::int64_t;

// Univariate polynomial over F_p in the variable t, coefficients in [0, p).
class Poly {
 public:
  Poly() : p_(0) {}
  Poly(Int p, std::vector<Int> coeffs);
  static Poly zero(Int p) { return Poly(p, {}); }
  static Poly constant(Int p, Int c) { return Poly(p, {c}); }
  static Poly t(Int p) { return Poly(p, {0, 1}); }

  Int p() const { return p_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  bool is_monic() const { return !is_zero() && leading() == 1; }
  Int leading() const { return coeffs_.back(); }
  Int coeff(int i) const;
  const std::vector<Int>& coeffs() const { return coeffs_; }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  friend bool operator==(const Poly& a, const Poly& b) = default;

  // Quotient and remainder; divisor must be nonzero.
  static void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r);
  Poly operator%(const Poly& o) const;
  Poly operator/(const Poly& o) const;

  Poly monic() const;
  Poly derivative() const;
  Int eval(Int x) const;

  std::string str() const;  // e.g. "t^2+3*t+1"

 private:
  Int p_;
  std::vector<Int> coeffs_;  // coeffs_[i] multiplies t^i; no trailing zeros
  void trim();
};

Poly poly_gcd(Poly a, Poly b);
// g = gcd(a, b) together with u a + v b = g.
Poly poly_gcd_ext(const Poly& a, const Poly& b, Poly& u, Poly& v);
Poly poly_powmod(Poly base, Int e, const Poly& mod);
Poly poly_inverse_mod(const Poly& a, const Poly& mod);

bool is_irreducible(const Poly& f);

// Full factorization into monic irreducibles with multiplicities; the unit
// (leading coefficient) is returned separately.
struct PolyFactor {
  Poly factor;
  int multiplicity;
};
std::vector<PolyFactor> factor_poly(const Poly& f, Int& unit);

// Lexicographically least monic irreducible of the given degree.
Poly least_irreducible(Int p, int degree);

Int mod_pow(Int base, Int e, Int m);
Int mod_inverse(Int a, Int m);

}  // namespace bdk2
