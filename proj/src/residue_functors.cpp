#include "bdk2/residue_functors.hpp"

#include <stdexcept>

namespace bdk2 {

EZObject EZObject::twisted(const EZAutomorphism& alpha) const {
  EZObject out = *this;
  out.psi.matrix += alpha.w.transpose() * p.matrix;
  return out;
}

MonomialCocycleExtension val_functor(const MonomialCocycleExtension& D, const Place& place) {
  if (D.coeff.kind != CoeffKind::Fx)
    throw std::invalid_argument("val_functor: F^x coefficients expected");
  return pushout(D, CoeffHom::val_at(D.coeff.field, place));
}

MonomialCochain delta_Q(const QuadraticForm& q) {
  return MonomialCochain::zero(q.lattice(), CoefficientGroup::z());
}

ResidualExtension residual_extension(const BilinearIncarnation& C, const FieldConfig& field,
                                     const Place& place) {
  // The Steinberg cocycle evaluated at unit points lands in K2(O), so its tame
  // residue vanishes; spot-check on a pair of units before returning the split
  // presentation.
  const IncarnatedTorusExtension E = incarnate(C, field);
  FieldElement u1, u2;
  if (field.kind == FieldKind::Rational) {
    const Int q = place.kind == PlaceKind::RationalPrime ? place.prime : 2;
    u1 = FieldElement::rational(q + 1);
    u2 = FieldElement::rational(q + 3);
  } else {
    const Poly pi = place.kind == PlaceKind::FinitePoly ? place.pi : Poly::t(field.p);
    u1 = FieldElement::function(pi + Poly::constant(field.p, 1), Poly::constant(field.p, 1));
    u2 = FieldElement::function(pi + Poly::constant(field.p, 2), Poly::constant(field.p, 1));
    // At infinity a unit needs numerator and denominator of equal degree.
    if (place.kind == PlaceKind::Infinity) {
      u1 = FieldElement::function(pi + Poly::constant(field.p, 1), pi);
      u2 = FieldElement::function(pi + Poly::constant(field.p, 2), pi);
    }
  }
  std::vector<FieldElement> s(C.lattice.rank, u1), t(C.lattice.rank, u2);
  if (C.lattice.rank > 0 && !place.is_archimedean())
    for (const SymbolFactor& f : E.symbol_part(s, t).factors)
      if (!tame_symbol(f.u, f.v, place).pow(f.e).is_one())
        throw std::logic_error("residual_extension: unit cocycle with nontrivial residue");
  const CoefficientGroup grp =
      CoefficientGroup::resx(ResidueField::of_place(field, place));
  ResidualExtension out;
  out.place = place;
  out.cocycle = MonomialCocycleExtension::split_ext(C.lattice, grp);
  out.splitting = MonomialCochain::zero(C.lattice, grp);
  return out;
}

EZAutomorphism residual_automorphism(const IntVec& x, const FieldElement& s, const Place& place) {
  if (s.is_zero()) throw std::invalid_argument("residual_automorphism: s must be nonzero");
  return {valuation(s, place) * x};
}

EZAutomorphism bd_automorphism_val(const IntVec& x, const FieldElement& s, const Place& place) {
  if (s.is_zero()) throw std::invalid_argument("bd_automorphism_val: s must be nonzero");
  IntVec w(x.size());
  for (int i = 0; i < x.size(); ++i) w(i) = valuation(s.pow(x(i)), place);
  return {w};
}

bool natural_iso_check(const BilinearIncarnation& C, const FieldConfig& field, const Place& place,
                       const std::vector<TorusAutomorphism>& samples) {
  (void)C;
  (void)field;
  for (const TorusAutomorphism& a : samples)
    if (!(residual_automorphism(a.x, a.s, place) == bd_automorphism_val(a.x, a.s, place)))
      return false;
  return true;
}

EZObject ez_of_residual(const RootDatum& rd, const BilinearIncarnation& C,
                        const FieldConfig& field, const Place& place) {
  residual_extension(C, field, place);  // validates the split presentation
  EZObject out;
  out.yprime = MonomialCocycleExtension::split_ext(C.lattice, CoefficientGroup::z());
  out.p = rd.coroot_inclusion();
  out.psi = {out.p.source, Lattice{1, "Z"}, IntMat::Zero(1, out.p.source.rank)};
  return out;
}

namespace {

Int cochain_int(const MonomialCochain& phi, const IntVec& y) { return phi(y).int_value(); }

// val of a cochain over F^x, term by term.
Int val_of_cochain_termwise(const MonomialCochain& phi, const Place& place, const IntVec& y) {
  Int v = 0;
  for (const CochainTerm& t : phi.terms) v += valuation(t.a.field_value(), place) * t.q(y);
  return v;
}

struct RowSolve {
  bool ok = false;
  IntVec h;                       // canonical solution of h . P = rhs
  std::vector<IntVec> kernel;     // basis of { h : h . P = 0 }
  std::vector<Int> torsion;       // elementary divisors > 1 of coker P
  std::string obstruction;
};

// Solve h P = rhs for a row vector h over Z via the Smith form of P^T; the
// canonical solution has zero coordinates on the SNF complement of the image.
RowSolve solve_row(const IntMat& P, const IntVec& rhs) {
  RowSolve out;
  const IntMat A = P.transpose();  // nsc x n
  const SmithForm sf = smith_normal_form(A);
  const int r = sf.rank();
  const int n = static_cast<int>(A.cols());
  const int nsc = static_cast<int>(A.rows());
  const IntVec c = sf.u * rhs;
  for (int i = 0; i < r; ++i)
    if (sf.d(i, i) > 1) out.torsion.push_back(sf.d(i, i));
  IntVec yv = IntVec::Zero(n);
  for (int i = 0; i < nsc; ++i) {
    const Int d = i < r ? sf.d(i, i) : 0;
    if (d == 0) {
      if (c(i) != 0) {
        out.obstruction = "no solution: " + std::to_string(d) + "*h = " + std::to_string(c(i)) +
                          " at SNF row " + std::to_string(i);
        return out;
      }
    } else {
      if (c(i) % d != 0) {
        out.obstruction = "no solution: " + std::to_string(d) + "*h = " + std::to_string(c(i)) +
                          " at SNF row " + std::to_string(i);
        return out;
      }
      yv(i) = c(i) / d;
    }
  }
  out.ok = true;
  out.h = sf.v * yv;
  for (int i = r; i < n; ++i) out.kernel.push_back(sf.v.col(i));
  return out;
}

}  // namespace

EZObject val_bd(const BDTriple& t, const Place& place) {
  EZObject out;
  out.yprime = val_functor(t.d, place);
  out.p = t.p;
  const int nsc = t.p.source.rank;
  IntMat psi(1, nsc);
  for (int k = 0; k < nsc; ++k) {
    IntVec e = IntVec::Zero(nsc);
    e(k) = 1;
    psi(0, k) = val_of_cochain_termwise(t.phi, place, e);
  }
  out.psi = {t.p.source, Lattice{1, "Z"}, psi};
  return out;
}

IntegralModelReport decide_integral_model(const BDTriple& t, const Place& place) {
  const MonomialCocycleExtension yprime = val_functor(t.d, place);
  const SplitResult sr = split(yprime);
  if (!sr.ok()) throw std::logic_error("decide_integral_model: val(D) has nontrivial commutator");
  const MonomialCochain& nu0 = *sr.phi;
  const int nsc = t.p.source.rank;
  const int n = t.p.target.rank;
  // Defect lambda(y) = psi(y) + nu0(p y) on Y_SC; a model is a character h on Y
  // with h o p = -lambda, giving the splitting nu = nu0 + h.
  IntVec lambda(nsc);
  for (int k = 0; k < nsc; ++k) {
    IntVec e = IntVec::Zero(nsc);
    e(k) = 1;
    lambda(k) = val_of_cochain_termwise(t.phi, place, e) + cochain_int(nu0, t.p.apply(e));
  }
  const RowSolve rs = solve_row(t.p.matrix, -lambda);
  IntegralModelReport rep;
  rep.torsor_rank = n - smith_normal_form(t.p.matrix).rank();
  rep.torsion = rs.torsion;
  if (!rs.ok) {
    rep.exists = false;
    rep.obstruction = rs.obstruction;
    return rep;
  }
  rep.exists = true;
  MonomialCochain witness = nu0;
  if (!rs.h.isZero()) {
    QuadraticCochain linear{IntMat::Zero(n, n), 2 * rs.h};
    witness.terms.push_back({CoeffElem::of_int(1), linear});
  }
  rep.witness = std::move(witness);
  return rep;
}

bool kernel_category_check(const BDTriple& t, const Place& place) {
  const MonomialCocycleExtension yprime = val_functor(t.d, place);
  const SplitResult sr = split(yprime);
  if (!sr.ok()) return false;
  const MonomialCochain& nu0 = *sr.phi;
  const int nsc = t.p.source.rank;
  // Route A: termwise valuations of the phi bases (the val functor).
  // Route B: valuation of the evaluated field element phi(e) (the residual
  // route: the Ec4 exponent val(a) read off a_bar^{val a}).
  IntVec lamA(nsc), lamB(nsc);
  for (int k = 0; k < nsc; ++k) {
    IntVec e = IntVec::Zero(nsc);
    e(k) = 1;
    const Int off = cochain_int(nu0, t.p.apply(e));
    lamA(k) = val_of_cochain_termwise(t.phi, place, e) + off;
    const FieldElement value = t.phi(e).field_value();
    lamB(k) = valuation(value, place) + off;
  }
  if (lamA != lamB) return false;
  const RowSolve a = solve_row(t.p.matrix, -lamA);
  const RowSolve b = solve_row(t.p.matrix, -lamB);
  if (a.ok != b.ok) return false;
  if (!a.ok) return true;  // both sides empty torsors
  // Same torsor: the difference of canonical witnesses lies in the kernel
  // (here it is zero since the routes agreed), and the kernel action yields
  // witnesses on both sides over a window of coefficients.
  for (const IntVec& k : a.kernel)
    for (Int c = -3; c <= 3; ++c) {
      const IntVec h = a.h + c * k;
      for (int i = 0; i < nsc; ++i) {
        IntVec e = IntVec::Zero(nsc);
        e(i) = 1;
        const IntVec py = t.p.apply(e);
        if (h.dot(py) + lamA(i) != 0) return false;
        if (h.dot(py) + lamB(i) != 0) return false;
      }
    }
  return true;
}

}  // namespace bdk2
