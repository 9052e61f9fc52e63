#include "bdk2/bd.hpp"

#include <stdexcept>

namespace bdk2 {

TorusPoint IncarnatedTorusExtension::identity() const {
  TorusPoint pt;
  pt.s.assign(y.rank, FieldElement::one(field));
  pt.alpha = SymbolExpression::identity(field);
  return pt;
}

SymbolExpression IncarnatedTorusExtension::symbol_part(const std::vector<FieldElement>& s,
                                                       const std::vector<FieldElement>& t) const {
  SymbolExpression sym = SymbolExpression::identity(field);
  for (int i = 0; i < y.rank; ++i)
    for (int j = 0; j < y.rank; ++j)
      if (C.matrix(i, j) != 0) sym.factors.push_back({s[i], t[j], C.matrix(i, j)});
  return sym;
}

TorusPoint IncarnatedTorusExtension::multiply(const TorusPoint& a, const TorusPoint& b) const {
  if (static_cast<int>(a.s.size()) != y.rank || static_cast<int>(b.s.size()) != y.rank)
    throw std::invalid_argument("IncarnatedTorusExtension: rank mismatch");
  TorusPoint pt;
  pt.s.reserve(y.rank);
  for (int i = 0; i < y.rank; ++i) pt.s.push_back(a.s[i] * b.s[i]);
  pt.alpha = a.alpha * b.alpha * symbol_part(a.s, b.s);
  return pt;
}

TorusPoint IncarnatedTorusExtension::inverse(const TorusPoint& a) const {
  TorusPoint pt;
  pt.s.reserve(y.rank);
  for (const FieldElement& u : a.s) pt.s.push_back(u.inverse());
  // (s, alpha)(s^-1, beta) = (1, alpha beta sigma(s, s^-1)) = identity.
  pt.alpha = a.alpha.inverse() * symbol_part(a.s, pt.s).inverse();
  return pt;
}

TorusPoint IncarnatedTorusExtension::cocharacter_point(const FieldElement& u,
                                                       const IntVec& yvec) const {
  TorusPoint pt;
  pt.s.reserve(y.rank);
  for (int i = 0; i < y.rank; ++i) pt.s.push_back(u.pow(yvec(i)));
  pt.alpha = SymbolExpression::identity(field);
  return pt;
}

IncarnatedTorusExtension incarnate(const BilinearIncarnation& C, const FieldConfig& field) {
  return {C.lattice, C, field};
}

QuadraticForm first_invariant(const BilinearIncarnation& C) {
  const int n = C.lattice.rank;
  IntMat upper = IntMat::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    upper(i, i) = C.matrix(i, i);
    for (int j = i + 1; j < n; ++j) upper(i, j) = C.matrix(i, j) + C.matrix(j, i);
  }
  return QuadraticForm(C.lattice, upper);
}

MonomialCocycleExtension second_invariant(const BilinearIncarnation& C,
                                          const FieldConfig& field) {
  const CoefficientGroup grp = CoefficientGroup::fx(field);
  MonomialCocycleExtension e{C.lattice, grp, {}};
  e.terms.push_back({CoeffElem::of_field(grp, FieldElement::integer(field, -1)), C.matrix});
  return e;
}

bool torus_commutator_check(const BilinearIncarnation& C, const FieldConfig& field,
                            const IntVec& y1, const IntVec& y2, const FieldElement& u1,
                            const FieldElement& u2) {
  const IncarnatedTorusExtension E = incarnate(C, field);
  const TorusPoint g = E.cocharacter_point(u1, y1);
  const TorusPoint h = E.cocharacter_point(u2, y2);
  const TorusPoint comm = E.multiply(E.multiply(E.multiply(g, h), E.inverse(g)), E.inverse(h));
  SymbolExpression expected = SymbolExpression::identity(field);
  const Int bq = first_invariant(C).bilinear(y1, y2);
  if (bq != 0) expected.factors.push_back({u1, u2, bq});
  return k2_coordinates(comm.alpha) == k2_coordinates(expected);
}

CanonicalDQ canonical_DQ(const QuadraticForm& q, const FieldConfig& field) {
  CanonicalDQ dq;
  dq.c_q = q.upper();
  dq.ext = second_invariant({q.lattice(), dq.c_q}, field);
  return dq;
}

BDTriple third_invariant_solve(const RootDatum& rd, const BilinearIncarnation& C,
                               const FieldConfig& field) {
  if (C.lattice.rank != rd.rank())
    throw std::invalid_argument("third_invariant_solve: rank mismatch");
  const QuadraticForm q = first_invariant(C);
  if (!is_weyl_invariant(q, rd))
    throw std::invalid_argument("third_invariant_solve: Q is not Weyl-invariant");
  const LatticeMap& p = rd.coroot_inclusion();
  const MonomialCocycleExtension d = second_invariant(C, field);
  const CanonicalDQ dq = canonical_DQ(q.pullback(p), field);
  const MonomialCocycleExtension ratio = baer_sum(pullback(d, p), dq.ext.inverse());
  const SplitResult sr = split(ratio.inverse());
  if (!sr.ok())
    throw std::logic_error("third_invariant_solve: ratio cocycle failed to split at basis pair (" +
                           std::to_string(sr.witness->first) + "," +
                           std::to_string(sr.witness->second) + ")");
  return {rd, field, q, d, p, *sr.phi};
}

namespace {

std::vector<IntVec> grid_vectors(int n, Int bound) {
  Int count = 1;
  for (int i = 0; i < n; ++i) {
    count *= 2 * bound + 1;
    if (count > 4000) return grid_vectors(n, bound - 1);
  }
  std::vector<IntVec> out;
  IntVec v = IntVec::Constant(n, -bound);
  while (true) {
    out.push_back(v);
    int i = 0;
    while (i < n && v(i) == bound) v(i++) = -bound;
    if (i == n) break;
    ++v(i);
  }
  return out;
}

}  // namespace

bool triple_compatibility_check(const BDTriple& t, Int bound) {
  const CanonicalDQ dq = canonical_DQ(t.q.pullback(t.p), t.field);
  const int n = t.p.source.rank;
  const std::vector<IntVec> grid = grid_vectors(n, bound);
  for (const IntVec& y1 : grid)
    for (const IntVec& y2 : grid) {
      const CoeffElem lhs = t.phi(y1 + y2) * t.phi(y1).inverse() * t.phi(y2).inverse();
      const CoeffElem rhs =
          t.d.sigma(t.p.apply(y1), t.p.apply(y2)) * dq.ext.sigma(y1, y2).inverse();
      if (!(lhs == rhs)) return false;
    }
  return true;
}

TorusPoint TorusAutomorphism::apply_point(const IncarnatedTorusExtension& E,
                                          const TorusPoint& pt) const {
  FieldElement xt = FieldElement::one(s.config());
  for (int i = 0; i < E.y.rank; ++i) xt = xt * pt.s[i].pow(x(i));
  TorusPoint out = pt;
  if (!s.is_one()) out.alpha.factors.push_back({xt, s, 1});
  return out;
}

ExtElem TorusAutomorphism::apply_d(const ExtElem& e) const {
  const CoefficientGroup grp = CoefficientGroup::fx(s.config());
  return {e.y, e.a * CoeffElem::of_field(grp, s.pow(x.dot(e.y)))};
}

TorusAutomorphism torus_automorphism(const IntVec& x, const FieldElement& s) {
  if (s.is_zero()) throw std::invalid_argument("torus_automorphism: s must be a unit");
  return {x, s};
}

TorusPoint IncarnationIso::apply(const FieldConfig& field, const TorusPoint& pt) const {
  TorusPoint out = pt;
  const int n = static_cast<int>(a.rows());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (a(i, j) != 0) out.alpha.factors.push_back({pt.s[i], pt.s[j], a(i, j)});
  return out;
}

std::optional<IncarnationIso> incarnation_iso(const BilinearIncarnation& C,
                                              const BilinearIncarnation& C0) {
  const IntMat a = C.matrix - C0.matrix;
  // A(y,y) = 0 for all y iff A is antisymmetric with zero diagonal.
  if (!((a + a.transpose()).isZero())) return std::nullopt;
  // d of the twist carries exponents a_hat - a_hat^T, so take the half of A
  // with a_hat - a_hat^T = A: its strict upper triangle.
  const IntMat a_hat = a.triangularView<Eigen::StrictlyUpper>();
  return IncarnationIso{a_hat};
}

namespace {

// Pull a cochain on Y back to Y_SC along p.
MonomialCochain pullback_cochain(const MonomialCochain& phi, const LatticeMap& p) {
  MonomialCochain out = MonomialCochain::zero(p.source, phi.coeff);
  for (const CochainTerm& t : phi.terms) {
    QuadraticCochain q{p.matrix.transpose() * t.q.a * p.matrix, p.matrix.transpose() * t.q.b};
    out.terms.push_back({t.a, q});
  }
  return out;
}

Int mod_reduce(Int x, Int m) { return m == 0 ? x : ((x % m) + m) % m; }

}  // namespace

BDMorphism bd_morphisms(const BDTriple& t1, const BDTriple& t2) {
  BDMorphism out;
  if (t1.rd.rank() != t2.rd.rank() || !(t1.field == t2.field)) {
    out.obstruction = "base or field mismatch";
    return out;
  }
  if (!(t1.q == t2.q)) {
    out.obstruction = "first invariants differ";
    return out;
  }
  const SplitResult sr = split(baer_sum(t2.d, t1.d.inverse()).inverse());
  if (!sr.ok()) {
    out.obstruction = "commutator mismatch at basis pair (" +
                      std::to_string(sr.witness->first) + "," +
                      std::to_string(sr.witness->second) + ")";
    return out;
  }
  MonomialCochain psi = *sr.phi;  // d(psi) = sigma_2 sigma_1^-1
  // Correct by a character so that psi o p = phi_2 phi_1^-1.
  const LatticeMap& p = t1.p;
  const MonomialCochain delta = t2.phi + (-t1.phi) + (-pullback_cochain(psi, p));
  const int nsc = p.source.rank;
  const IntMat pt = p.matrix.transpose();  // nsc x n
  for (const CanonicalCochainTerm& term : canonical_cochain_terms(delta)) {
    const Int m = term.order;
    // d(delta) vanishes, so the quadratic part dies modulo the base order and
    // the exponent is additive there; it reduces to the vector of values on
    // the basis.
    for (int i = 0; i < nsc; ++i)
      for (int j = 0; j < nsc; ++j)
        if (mod_reduce(term.q.a(i, j), m) != 0) {
          out.obstruction = "obstructed within monomial class (nonlinear residual exponent)";
          return out;
        }
    IntVec v(nsc);
    for (int k = 0; k < nsc; ++k) v(k) = (term.q.a(k, k) + term.q.b(k)) / 2;
    std::optional<IntVec> ell;
    if (m == 0) {
      auto sol = solve_integer(pt, v);
      if (sol) ell = sol->particular;
    } else {
      IntMat aug(nsc, pt.cols() + nsc);
      aug << pt, m * IntMat::Identity(nsc, nsc);
      auto sol = solve_integer(aug, v);
      if (sol) ell = sol->particular.head(pt.cols());
    }
    if (!ell) {
      out.obstruction = "obstructed within monomial class (no character solves the exponents)";
      return out;
    }
    QuadraticCochain q{IntMat::Zero(p.target.rank, p.target.rank), 2 * (*ell)};
    psi.terms.push_back({term.base, q});
  }
  out.psi = std::move(psi);
  return out;
}

BDTriple bd_baer_sum(const BDTriple& t1, const BDTriple& t2) {
  if (t1.rd.rank() != t2.rd.rank() || !(t1.field == t2.field))
    throw std::invalid_argument("bd_baer_sum: mismatched triples");
  // C_{Q1+Q2} = C_{Q1} + C_{Q2} entrywise, so the canonical identification of
  // D_{Q1+Q2} with D_{Q1} + D_{Q2} is the identity and the phis just multiply.
  return {t1.rd, t1.field, t1.q + t2.q, baer_sum(t1.d, t2.d), t1.p, t1.phi + t2.phi};
}

}  // namespace bdk2
