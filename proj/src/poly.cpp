#include "bdk2/poly.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace bdk2 {

namespace {

Int norm_mod(Int a, Int p) {
  a %= p;
  return a < 0 ? a + p : a;
}

Int mul_mod(Int a, Int b, Int p) {
  return static_cast<Int>(static_cast<__int128>(a) * b % p);
}

}  // namespace

Int mod_pow(Int base, Int e, Int m) {
  if (e < 0) throw std::invalid_argument("mod_pow: negative exponent");
  Int r = 1 % m;
  base = norm_mod(base, m);
  while (e > 0) {
    if (e & 1) r = mul_mod(r, base, m);
    base = mul_mod(base, base, m);
    e >>= 1;
  }
  return r;
}

Int mod_inverse(Int a, Int m) {
  a = norm_mod(a, m);
  Int old_r = a, r = m, old_s = 1, s = 0;
  while (r != 0) {
    const Int q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
  }
  if (old_r != 1) throw std::invalid_argument("mod_inverse: not invertible");
  return norm_mod(old_s, m);
}

Poly::Poly(Int p, std::vector<Int> coeffs) : p_(p), coeffs_(std::move(coeffs)) {
  if (p < 2) throw std::invalid_argument("Poly: characteristic must be >= 2");
  for (Int& c : coeffs_) c = norm_mod(c, p);
  trim();
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Int Poly::coeff(int i) const {
  return (i >= 0 && i < static_cast<int>(coeffs_.size())) ? coeffs_[i] : 0;
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<Int> c(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (size_t i = 0; i < c.size(); ++i) c[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
  return Poly(p_, std::move(c));
}

Poly Poly::operator-() const {
  std::vector<Int> c = coeffs_;
  for (Int& x : c) x = -x;
  return Poly(p_, std::move(c));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return zero(p_);
  std::vector<Int> c(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (size_t i = 0; i < coeffs_.size(); ++i)
    for (size_t j = 0; j < o.coeffs_.size(); ++j)
      c[i + j] = (c[i + j] + mul_mod(coeffs_[i], o.coeffs_[j], p_)) % p_;
  return Poly(p_, std::move(c));
}

void Poly::divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
  if (b.is_zero()) throw std::invalid_argument("Poly::divmod: division by zero");
  const Int p = a.p_;
  const Int lead_inv = mod_inverse(b.leading(), p);
  std::vector<Int> rem = a.coeffs_;
  std::vector<Int> quot(std::max<int>(a.degree() - b.degree() + 1, 0), 0);
  for (int i = a.degree(); i >= b.degree(); --i) {
    if (rem.size() <= static_cast<size_t>(i) || rem[i] == 0) continue;
    const Int f = mul_mod(rem[i], lead_inv, p);
    quot[i - b.degree()] = f;
    for (int j = 0; j <= b.degree(); ++j)
      rem[i - b.degree() + j] = norm_mod(rem[i - b.degree() + j] - mul_mod(f, b.coeff(j), p), p);
  }
  q = Poly(p, std::move(quot));
  r = Poly(p, std::move(rem));
}

Poly Poly::operator%(const Poly& o) const {
  Poly q, r;
  divmod(*this, o, q, r);
  return r;
}

Poly Poly::operator/(const Poly& o) const {
  Poly q, r;
  divmod(*this, o, q, r);
  return q;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  const Int inv = mod_inverse(leading(), p_);
  std::vector<Int> c = coeffs_;
  for (Int& x : c) x = mul_mod(x, inv, p_);
  return Poly(p_, std::move(c));
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return zero(p_);
  std::vector<Int> c(coeffs_.size() - 1);
  for (size_t i = 1; i < coeffs_.size(); ++i)
    c[i - 1] = mul_mod(coeffs_[i], static_cast<Int>(i % p_), p_);
  return Poly(p_, std::move(c));
}

Int Poly::eval(Int x) const {
  Int r = 0;
  x = norm_mod(x, p_);
  for (int i = degree(); i >= 0; --i) r = norm_mod(mul_mod(r, x, p_) + coeff(i), p_);
  return r;
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Int c = coeff(i);
    if (c == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(c);
    } else {
      if (c != 1) out += std::to_string(c) + "*";
      out += (i == 1) ? "t" : "t^" + std::to_string(i);
    }
  }
  return out;
}

Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Poly poly_gcd_ext(const Poly& a, const Poly& b, Poly& u, Poly& v) {
  const Int p = a.p();
  Poly old_r = a, r = b;
  Poly old_u = Poly::constant(p, 1), cu = Poly::zero(p);
  Poly old_v = Poly::zero(p), cv = Poly::constant(p, 1);
  while (!r.is_zero()) {
    Poly q, rem;
    Poly::divmod(old_r, r, q, rem);
    old_r = std::exchange(r, rem);
    old_u = std::exchange(cu, old_u - q * cu);
    old_v = std::exchange(cv, old_v - q * cv);
  }
  // Normalize so the gcd is monic.
  const Int inv = mod_inverse(old_r.leading(), p);
  const Poly scale = Poly::constant(p, inv);
  u = old_u * scale;
  v = old_v * scale;
  return old_r * scale;
}

Poly poly_powmod(Poly base, Int e, const Poly& mod) {
  Poly r = Poly::constant(base.p(), 1) % mod;
  base = base % mod;
  while (e > 0) {
    if (e & 1) r = (r * base) % mod;
    base = (base * base) % mod;
    e >>= 1;
  }
  return r;
}

Poly poly_inverse_mod(const Poly& a, const Poly& mod) {
  Poly u, v;
  const Poly g = poly_gcd_ext(a % mod, mod, u, v);
  if (g.degree() != 0) throw std::invalid_argument("poly_inverse_mod: not invertible");
  return u % mod;
}

bool is_irreducible(const Poly& f) {
  const int n = f.degree();
  if (n <= 0) return false;
  if (n == 1) return true;
  const Int p = f.p();
  // t^{p^n} == t mod f, and gcd(t^{p^{n/q}} - t, f) == 1 for prime q | n.
  Poly x = Poly::t(p);
  Poly xp = x;
  for (int i = 0; i < n; ++i) xp = poly_powmod(xp, p, f);
  if (!((xp - x) % f).is_zero()) return false;
  for (int q = 2; q <= n; ++q) {
    if (n % q != 0) continue;
    bool prime = true;
    for (int d = 2; d * d <= q; ++d)
      if (q % d == 0) prime = false;
    if (!prime) continue;
    Poly xq = x;
    for (int i = 0; i < n / q; ++i) xq = poly_powmod(xq, p, f);
    if (poly_gcd(xq - x, f).degree() != 0) return false;
  }
  return true;
}

namespace {

// Equal-degree splitting (Cantor-Zassenhaus), f squarefree product of
// irreducibles of degree d.
void equal_degree_split(const Poly& f, int d, std::vector<Poly>& out, std::mt19937_64& rng) {
  const Int p = f.p();
  if (f.degree() == d) {
    out.push_back(f.monic());
    return;
  }
  Poly factor = f;
  while (true) {
    std::vector<Int> c(f.degree());
    for (Int& x : c) x = static_cast<Int>(rng() % static_cast<std::uint64_t>(p));
    Poly a(p, std::move(c));
    if (a.is_zero()) continue;
    Poly g = poly_gcd(a, f);
    if (g.degree() == 0) {
      if (p == 2) {
        // Trace map over F_2.
        Poly tr = Poly::zero(p);
        Poly q = a;
        for (int i = 0; i < d; ++i) {
          tr = (tr + q) % f;
          q = (q * q) % f;
        }
        g = poly_gcd(tr, f);
      } else {
        Int e = 1;
        for (int i = 0; i < d; ++i) e *= p;  // p^d fits: p <= 97, d bounded by degree <= 64
        g = poly_gcd(poly_powmod(a, (e - 1) / 2, f) - Poly::constant(p, 1), f);
      }
    }
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree_split(g, d, out, rng);
      equal_degree_split((f / g).monic(), d, out, rng);
      return;
    }
  }
}

void factor_squarefree(const Poly& f, int multiplicity, std::vector<PolyFactor>& out,
                       std::mt19937_64& rng) {
  const Int p = f.p();
  Poly rest = f.monic();
  Poly x = Poly::t(p);
  Poly xq = x;
  for (int d = 1; 2 * d <= rest.degree(); ++d) {
    xq = poly_powmod(xq, p, rest);
    const Poly g = poly_gcd(xq - x, rest);
    if (g.degree() > 0) {
      std::vector<Poly> pieces;
      equal_degree_split(g, d, pieces, rng);
      for (const Poly& piece : pieces) out.push_back({piece, multiplicity});
      rest = (rest / g).monic();
      xq = xq % rest;
    }
  }
  if (rest.degree() > 0) out.push_back({rest, multiplicity});
}

}  // namespace

std::vector<PolyFactor> factor_poly(const Poly& f, Int& unit) {
  if (f.is_zero()) throw std::invalid_argument("factor_poly: zero polynomial");
  if (f.degree() > 64) throw std::invalid_argument("factor_poly: degree exceeds 64");
  unit = f.leading();
  const Int p = f.p();
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
  std::vector<PolyFactor> out;

  // Squarefree decomposition (Yun, adapted for characteristic p).
  Poly g = f.monic();
  int power = 1;
  while (g.degree() > 0) {
    Poly d = g.derivative();
    if (d.is_zero()) {
      // g = h(t^p): take p-th root and continue with multiplicity * p.
      std::vector<Int> c(g.degree() / static_cast<int>(p) + 1);
      for (size_t i = 0; i < c.size(); ++i) c[i] = g.coeff(static_cast<int>(i) * static_cast<int>(p));
      g = Poly(p, std::move(c));
      power *= static_cast<int>(p);
      continue;
    }
    const Poly s = poly_gcd(g, d);  // product of repeated parts
    const Poly sqfree = (g / s).monic();
    // Peel factors of sqfree with their exact multiplicity in g.
    std::vector<PolyFactor> pieces;
    factor_squarefree(sqfree, 1, pieces, rng);
    for (const PolyFactor& piece : pieces) {
      int mult = 0;
      Poly h = g;
      while ((h % piece.factor).is_zero()) {
        h = (h / piece.factor).monic();
        ++mult;
      }
      out.push_back({piece.factor, mult * power});
    }
    // Remove everything found so far.
    Poly reduced = g;
    for (const PolyFactor& piece : pieces) {
      int mult = 0;
      while ((reduced % piece.factor).is_zero()) {
        reduced = (reduced / piece.factor).monic();
        ++mult;
      }
    }
    g = reduced;
  }

  std::sort(out.begin(), out.end(), [](const PolyFactor& a, const PolyFactor& b) {
    if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
    return a.factor.coeffs() < b.factor.coeffs();
  });
  return out;
}

Poly least_irreducible(Int p, int degree) {
  if (degree < 1) throw std::invalid_argument("least_irreducible: degree must be >= 1");
  // Enumerate monic polynomials of the given degree in lexicographic order of
  // (c_{d-1}, ..., c_0); desk scale keeps this cheap.
  std::vector<Int> c(degree + 1, 0);
  c[degree] = 1;
  while (true) {
    Poly f(p, c);
    if (is_irreducible(f)) return f;
    int i = degree - 1;
    while (i >= 0 && c[i] == p - 1) c[i--] = 0;
    if (i < 0) throw std::logic_error("least_irreducible: exhausted search");
    ++c[i];
  }
}

}  // namespace bdk2
