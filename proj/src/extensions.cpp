#include "bdk2/extensions.hpp"

#include <map>
#include <stdexcept>

namespace bdk2 {

std::string CoefficientGroup::str() const {
  switch (kind) {
    case CoeffKind::Fx: return field.str() + "^x";
    case CoeffKind::Z: return "Z";
    case CoeffKind::Resx: return "f^x(q=" + std::to_string(res.order()) + ")";
    case CoeffKind::Mu2: return "mu2";
  }
  return "?";
}

CoeffElem CoeffElem::identity(const CoefficientGroup& grp) {
  CoeffElem e;
  e.grp_ = grp;
  switch (grp.kind) {
    case CoeffKind::Fx: e.f_ = FieldElement::one(grp.field); break;
    case CoeffKind::Z: e.z_ = 0; break;
    case CoeffKind::Resx: e.r_ = ResidueElement::one(grp.res); break;
    case CoeffKind::Mu2: e.z_ = 1; break;
  }
  return e;
}

CoeffElem CoeffElem::of_field(const CoefficientGroup& grp, FieldElement u) {
  if (grp.kind != CoeffKind::Fx || u.is_zero() || u.config() != grp.field)
    throw std::invalid_argument("CoeffElem: bad F^x element");
  CoeffElem e;
  e.grp_ = grp;
  e.f_ = std::move(u);
  return e;
}

CoeffElem CoeffElem::of_int(Int n) {
  CoeffElem e;
  e.grp_ = CoefficientGroup::z();
  e.z_ = n;
  return e;
}

CoeffElem CoeffElem::of_residue(const CoefficientGroup& grp, ResidueElement r) {
  if (grp.kind != CoeffKind::Resx || r.is_zero() || !(r.field() == grp.res))
    throw std::invalid_argument("CoeffElem: bad residue element");
  CoeffElem e;
  e.grp_ = grp;
  e.r_ = std::move(r);
  return e;
}

CoeffElem CoeffElem::of_sign(Int s) {
  if (s != 1 && s != -1) throw std::invalid_argument("CoeffElem: mu2 element must be +-1");
  CoeffElem e;
  e.grp_ = CoefficientGroup::mu2();
  e.z_ = s;
  return e;
}

bool CoeffElem::is_identity() const { return *this == identity(grp_); }

CoeffElem CoeffElem::operator*(const CoeffElem& o) const {
  if (grp_ != o.grp_) throw std::invalid_argument("CoeffElem: group mismatch");
  CoeffElem e = *this;
  switch (grp_.kind) {
    case CoeffKind::Fx: e.f_ = f_ * o.f_; break;
    case CoeffKind::Z: e.z_ = z_ + o.z_; break;
    case CoeffKind::Resx: e.r_ = r_ * o.r_; break;
    case CoeffKind::Mu2: e.z_ = z_ * o.z_; break;
  }
  return e;
}

CoeffElem CoeffElem::inverse() const {
  CoeffElem e = *this;
  switch (grp_.kind) {
    case CoeffKind::Fx: e.f_ = f_.inverse(); break;
    case CoeffKind::Z: e.z_ = -z_; break;
    case CoeffKind::Resx: e.r_ = r_.inverse(); break;
    case CoeffKind::Mu2: break;  // self-inverse
  }
  return e;
}

CoeffElem CoeffElem::pow(Int e) const {
  CoeffElem r = *this;
  switch (grp_.kind) {
    case CoeffKind::Fx: r.f_ = f_.pow(e); break;
    case CoeffKind::Z: r.z_ = z_ * e; break;
    case CoeffKind::Resx: r.r_ = r_.pow(e); break;
    case CoeffKind::Mu2: r.z_ = (e % 2 == 0) ? 1 : z_; break;
  }
  return r;
}

Int CoeffElem::order() const {
  switch (grp_.kind) {
    case CoeffKind::Z: return z_ == 0 ? 1 : 0;
    case CoeffKind::Mu2: return z_ == 1 ? 1 : 2;
    case CoeffKind::Resx: return r_.order();
    case CoeffKind::Fx: {
      if (f_.is_one()) return 1;
      if (grp_.field.kind == FieldKind::Rational)
        return f_ == FieldElement::rational(-1) ? 2 : 0;
      if (f_.pnum().is_constant() && f_.pden().is_constant()) {
        const ResidueField fp = ResidueField::prime_field(grp_.field.p);
        return ResidueElement(fp, Poly::constant(grp_.field.p, f_.pnum().coeff(0))).order();
      }
      return 0;
    }
  }
  return 0;
}

std::string CoeffElem::str() const {
  switch (grp_.kind) {
    case CoeffKind::Fx: return f_.str();
    case CoeffKind::Z: return std::to_string(z_);
    case CoeffKind::Resx: return r_.str();
    case CoeffKind::Mu2: return z_ == 1 ? "1" : "-1";
  }
  return "?";
}

QuadraticCochain QuadraticCochain::zero(int n) {
  return {IntMat::Zero(n, n), IntVec::Zero(n)};
}

Int QuadraticCochain::operator()(const IntVec& y) const {
  const Int s = y.dot(a * y) + b.dot(y);
  if (s % 2 != 0) throw std::logic_error("QuadraticCochain: parity invariant violated");
  return s / 2;
}

QuadraticCochain QuadraticCochain::operator+(const QuadraticCochain& o) const {
  return {a + o.a, b + o.b};
}

QuadraticCochain QuadraticCochain::operator-() const { return {-a, -b}; }

MonomialCocycleExtension MonomialCocycleExtension::split_ext(Lattice base,
                                                             CoefficientGroup coeff) {
  return {std::move(base), std::move(coeff), {}};
}

CoeffElem MonomialCocycleExtension::sigma(const IntVec& y1, const IntVec& y2) const {
  CoeffElem v = CoeffElem::identity(coeff);
  for (const CocycleTerm& t : terms) v = v * t.a.pow(y1.dot(t.form * y2));
  return v;
}

MonomialCocycleExtension MonomialCocycleExtension::inverse() const {
  MonomialCocycleExtension e = *this;
  for (CocycleTerm& t : e.terms) t.a = t.a.inverse();
  return e;
}

MonomialCochain MonomialCochain::zero(Lattice base, CoefficientGroup coeff) {
  return {std::move(base), std::move(coeff), {}};
}

CoeffElem MonomialCochain::operator()(const IntVec& y) const {
  CoeffElem v = CoeffElem::identity(coeff);
  for (const CochainTerm& t : terms) v = v * t.a.pow(t.q(y));
  return v;
}

MonomialCocycleExtension MonomialCochain::coboundary() const {
  MonomialCocycleExtension e{base, coeff, {}};
  for (const CochainTerm& t : terms) e.terms.push_back({t.a, t.q.bilinear()});
  return e;
}

MonomialCochain MonomialCochain::operator+(const MonomialCochain& o) const {
  if (base.rank != o.base.rank || !(coeff == o.coeff))
    throw std::invalid_argument("MonomialCochain: mismatch");
  MonomialCochain r = *this;
  r.terms.insert(r.terms.end(), o.terms.begin(), o.terms.end());
  return r;
}

MonomialCochain MonomialCochain::operator-() const {
  MonomialCochain r = *this;
  for (CochainTerm& t : r.terms) t.a = t.a.inverse();
  return r;
}

ExtElem multiply(const MonomialCocycleExtension& E, const ExtElem& x1, const ExtElem& x2) {
  if (!(x1.a.group() == E.coeff) || !(x2.a.group() == E.coeff))
    throw std::invalid_argument("multiply: coefficient mismatch");
  return {x1.y + x2.y, x1.a * x2.a * E.sigma(x1.y, x2.y)};
}

MonomialCocycleExtension baer_sum(const MonomialCocycleExtension& E1,
                                  const MonomialCocycleExtension& E2) {
  if (E1.base.rank != E2.base.rank || !(E1.coeff == E2.coeff))
    throw std::invalid_argument("baer_sum: mismatched extensions");
  MonomialCocycleExtension e = E1;
  e.terms.insert(e.terms.end(), E2.terms.begin(), E2.terms.end());
  return e;
}

CoeffElem commutator(const MonomialCocycleExtension& E, const IntVec& y1, const IntVec& y2) {
  return E.sigma(y1, y2) * E.sigma(y2, y1).inverse();
}

CoeffHom CoeffHom::val_at(const FieldConfig& cfg, const Place& place) {
  CoeffHom h;
  h.source = CoefficientGroup::fx(cfg);
  h.target = CoefficientGroup::z();
  h.map = [place](const CoeffElem& a) {
    return CoeffElem::of_int(valuation(a.field_value(), place));
  };
  return h;
}

CoeffHom CoeffHom::residue_at(const FieldConfig& cfg, const Place& place) {
  CoeffHom h;
  h.source = CoefficientGroup::fx(cfg);
  h.target = CoefficientGroup::resx(ResidueField::of_place(cfg, place));
  h.map = [cfg, place, target = h.target](const CoeffElem& a) {
    return CoeffElem::of_residue(target, residue(a.field_value(), place));
  };
  return h;
}

CoeffHom CoeffHom::mu2_to_fx(const FieldConfig& cfg) {
  CoeffHom h;
  h.source = CoefficientGroup::mu2();
  h.target = CoefficientGroup::fx(cfg);
  h.map = [cfg, target = h.target](const CoeffElem& a) {
    return CoeffElem::of_field(target, FieldElement::integer(cfg, a.int_value()));
  };
  return h;
}

CoeffHom CoeffHom::mu2_to_resx(const ResidueField& fld) {
  CoeffHom h;
  h.source = CoefficientGroup::mu2();
  h.target = CoefficientGroup::resx(fld);
  h.map = [fld, target = h.target](const CoeffElem& a) {
    return CoeffElem::of_residue(target, ResidueElement::from_int(fld, a.int_value()));
  };
  return h;
}

CoeffHom CoeffHom::custom(CoefficientGroup source, CoefficientGroup target,
                          std::function<CoeffElem(const CoeffElem&)> map) {
  return {std::move(source), std::move(target), std::move(map)};
}

MonomialCocycleExtension pushout(const MonomialCocycleExtension& E, const CoeffHom& h) {
  if (!(E.coeff == h.source)) throw std::invalid_argument("pushout: source mismatch");
  MonomialCocycleExtension out{E.base, h.target, {}};
  for (const CocycleTerm& t : E.terms) out.terms.push_back({h.map(t.a), t.form});
  return out;
}

MonomialCocycleExtension pullback(const MonomialCocycleExtension& E, const LatticeMap& m) {
  if (m.target.rank != E.base.rank) throw std::invalid_argument("pullback: rank mismatch");
  MonomialCocycleExtension out{m.source, E.coeff, {}};
  for (const CocycleTerm& t : E.terms)
    out.terms.push_back({t.a, m.matrix.transpose() * t.form * m.matrix});
  return out;
}

namespace {

Int primitive_root(Int p) {
  for (Int g = 2; g < p; ++g) {
    Int x = g % p, ord = 1;
    while (x != 1) { x = x * g % p; ++ord; }
    if (ord == p - 1) return g;
  }
  return 1;  // p = 2
}

Int discrete_log(const ResidueElement& g, const ResidueElement& a) {
  const Int group = g.field().order() - 1;
  if (group > (1 << 22)) throw std::invalid_argument("discrete_log: group too large");
  ResidueElement x = ResidueElement::one(g.field());
  for (Int k = 0; k < group; ++k) {
    if (x == a) return k;
    x = x * g;
  }
  throw std::logic_error("discrete_log: generator is not a generator");
}

ResidueElement group_generator(const ResidueField& fld) {
  const Int q = fld.order();
  if (q > (1 << 22)) throw std::invalid_argument("group_generator: group too large");
  // Enumerate residues in lexicographic coefficient order.
  std::vector<Int> digits(fld.modulus.degree(), 0);
  for (Int idx = 1; idx < q; ++idx) {
    Int v = idx;
    for (auto& d : digits) { d = v % fld.p; v /= fld.p; }
    ResidueElement cand(fld, Poly(fld.p, std::vector<Int>(digits.begin(), digits.end())));
    if (cand.order() == q - 1) return cand;
  }
  throw std::logic_error("group_generator: no generator found");
}

// One independent generator of the coefficient group together with its order
// (0 = infinite) and the exponent of the factored element on it.
struct BaseFactor {
  CoeffElem base;
  Int order = 0;
  Int exponent = 0;
};

// Factor an element into independent generators: monic irreducibles / rational
// primes with infinite order, plus a constant-field generator and -1 with
// their finite orders.
std::vector<BaseFactor> factor_base(const CoefficientGroup& grp, const CoeffElem& a) {
  std::vector<BaseFactor> out;
  switch (grp.kind) {
    case CoeffKind::Z:
      out.push_back({CoeffElem::of_int(1), 0, a.int_value()});
      break;
    case CoeffKind::Mu2:
      if (a.int_value() == -1) out.push_back({CoeffElem::of_sign(-1), 2, 1});
      break;
    case CoeffKind::Resx: {
      if (a.is_identity()) break;
      const ResidueElement g = group_generator(grp.res);
      const Int k = discrete_log(g, a.residue_value());
      out.push_back({CoeffElem::of_residue(grp, g), grp.res.order() - 1, k});
      break;
    }
    case CoeffKind::Fx: {
      const FieldElement& u = a.field_value();
      if (grp.field.kind == FieldKind::Rational) {
        if (u.num() < 0)
          out.push_back({CoeffElem::of_field(grp, FieldElement::rational(-1)), 2, 1});
        for (const auto& [place, v] : places_of(u))
          out.push_back({CoeffElem::of_field(grp, FieldElement::rational(place.prime)), 0, v});
      } else {
        const Int p = grp.field.p;
        // Constant part: lc(num) (den is monic), written in a fixed generator.
        const Int g = primitive_root(p);
        const ResidueField fp = ResidueField::prime_field(p);
        const Int k = discrete_log(ResidueElement(fp, Poly::constant(p, g)),
                                   ResidueElement(fp, Poly::constant(p, u.pnum().leading())));
        if (k != 0)
          out.push_back({CoeffElem::of_field(grp, FieldElement::integer(grp.field, g)), p - 1, k});
        for (const auto& [place, v] : places_of(u)) {
          if (place.kind == PlaceKind::Infinity) continue;  // determined by the degrees
          FieldElement irr = FieldElement::function(place.pi, Poly::constant(p, 1));
          out.push_back({CoeffElem::of_field(grp, irr), 0, v});
        }
      }
      break;
    }
  }
  return out;
}

// A canonical factor of an extension: a multiplicatively independent base with
// its accumulated bilinear form and its order (0 = infinite).
struct CanonicalTerm {
  CoeffElem base;
  Int order = 0;
  IntMat form;
};

void accumulate(std::map<std::string, CanonicalTerm>& acc, CoeffElem base, Int order,
                const IntMat& form) {
  if (base.is_identity()) return;
  auto [it, fresh] = acc.try_emplace(base.str(), CanonicalTerm{std::move(base), order, form});
  if (!fresh) it->second.form += form;
}

std::map<std::string, CanonicalTerm> canonicalize(const MonomialCocycleExtension& E) {
  std::map<std::string, CanonicalTerm> acc;
  for (const CocycleTerm& t : E.terms)
    for (const BaseFactor& f : factor_base(E.coeff, t.a))
      accumulate(acc, f.base, f.order, f.exponent * t.form);
  for (auto it = acc.begin(); it != acc.end();)
    it = it->second.form.isZero() ? acc.erase(it) : std::next(it);
  return acc;
}

Int mod_reduce(Int x, Int m) { return m == 0 ? x : ((x % m) + m) % m; }

}  // namespace

SplitResult split(const MonomialCocycleExtension& E) {
  const int n = E.base.rank;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      IntVec ei = IntVec::Zero(n), ej = IntVec::Zero(n);
      ei(i) = 1;
      ej(j) = 1;
      if (!commutator(E, ei, ej).is_identity()) {
        SplitResult r;
        r.witness = {i, j};
        return r;
      }
    }
  MonomialCochain phi = MonomialCochain::zero(E.base, E.coeff);
  for (auto& [key, term] : canonicalize(E)) {
    (void)key;
    const Int m = term.order;
    const IntMat& B = term.form;
    IntMat A = IntMat::Zero(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        if (m == 0 && B(i, j) != B(j, i))
          throw std::logic_error("split: asymmetric infinite-order base after trivial commutator");
        if (m != 0 && mod_reduce(B(i, j) - B(j, i), m) != 0)
          throw std::logic_error("split: asymmetry mod order after trivial commutator");
        A(i, j) = A(j, i) = -B(i, j);
      }
    IntVec b = A.diagonal();
    phi.terms.push_back({term.base, QuadraticCochain{A, b}});
  }
  SplitResult r;
  r.phi = std::move(phi);
  return r;
}

std::vector<CanonicalCochainTerm> canonical_cochain_terms(const MonomialCochain& phi) {
  std::map<std::string, CanonicalCochainTerm> acc;
  for (const CochainTerm& t : phi.terms)
    for (const BaseFactor& f : factor_base(phi.coeff, t.a)) {
      if (f.exponent == 0) continue;
      QuadraticCochain q{f.exponent * t.q.a, f.exponent * t.q.b};
      auto [it, fresh] =
          acc.try_emplace(f.base.str(), CanonicalCochainTerm{f.base, f.order, q});
      if (!fresh) it->second.q = it->second.q + q;
    }
  std::vector<CanonicalCochainTerm> out;
  for (auto& [key, term] : acc) {
    (void)key;
    if (!term.q.a.isZero() || !term.q.b.isZero()) out.push_back(std::move(term));
  }
  return out;
}

SplitResult is_isomorphic(const MonomialCocycleExtension& E1,
                          const MonomialCocycleExtension& E2) {
  return split(baer_sum(E1, E2.inverse()));
}

}  // namespace bdk2
