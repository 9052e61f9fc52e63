#include <random>
#include <vector>

#include "bdk2/extensions.hpp"
#include "bdk2/verify.hpp"
#include "doctest.h"

using namespace bdk2;

namespace {

const FieldConfig F5 = FieldConfig::function_field(5);
const FieldConfig Q = FieldConfig::rationals();

MonomialCocycleExtension d_of(const FieldConfig& cfg, const IntMat& c) {
  const CoefficientGroup fx = CoefficientGroup::fx(cfg);
  Lattice base{static_cast<int>(c.rows()), "Y"};
  return {base, fx, {{CoeffElem::of_field(fx, FieldElement::integer(cfg, -1)), c}}};
}

IntVec vec(std::initializer_list<Int> xs) {
  IntVec v(static_cast<int>(xs.size()));
  int i = 0;
  for (Int x : xs) v(i++) = x;
  return v;
}

std::vector<IntVec> grid(int n, Int lo, Int hi) {
  std::vector<IntVec> out{IntVec::Zero(n)};
  for (int k = 0; k < n; ++k) {
    std::vector<IntVec> next;
    for (const IntVec& v : out)
      for (Int c = lo; c <= hi; ++c) {
        IntVec w = v;
        w(k) = c;
        next.push_back(w);
      }
    out = next;
  }
  return out;
}

}  // namespace

TEST_SUITE("extensions") {
  TEST_CASE("multiplication in D_c for scalar c") {
    const CoefficientGroup fx = CoefficientGroup::fx(F5);
    const FieldElement u = parse_element(F5, "t+1");
    const FieldElement v = parse_element(F5, "t^2+2");
    const IntVec one = vec({1});

    MonomialCocycleExtension d1 = d_of(F5, IntMat::Constant(1, 1, 1));
    ExtElem prod = multiply(d1, {one, CoeffElem::of_field(fx, u)},
                            {one, CoeffElem::of_field(fx, v)});
    CHECK(prod.y == vec({2}));
    CHECK(prod.a == CoeffElem::of_field(fx, FieldElement::zero(F5) - u * v));

    MonomialCocycleExtension d2 = d_of(F5, IntMat::Constant(1, 1, 2));
    prod = multiply(d2, {one, CoeffElem::of_field(fx, u)},
                    {one, CoeffElem::of_field(fx, v)});
    CHECK(prod.a == CoeffElem::of_field(fx, u * v));
  }

  TEST_CASE("associativity, randomized") {
    std::mt19937_64 rng(40111);
    for (const FieldConfig& cfg : {F5, Q}) {
      const CoefficientGroup fx = CoefficientGroup::fx(cfg);
      for (int i = 0; i < 60; ++i) {
        IntMat c(2, 2);
        for (int r = 0; r < 2; ++r)
          for (int s = 0; s < 2; ++s) c(r, s) = Int(rng() % 7) - 3;
        MonomialCocycleExtension e = d_of(cfg, c);
        auto pt = [&] {
          IntVec y(2);
          y << Int(rng() % 7) - 3, Int(rng() % 7) - 3;
          FieldElement a = random_element(rng, cfg, 2);
          while (a.is_zero()) a = random_element(rng, cfg, 2);
          return ExtElem{y, CoeffElem::of_field(fx, a)};
        };
        const ExtElem x1 = pt(), x2 = pt(), x3 = pt();
        CHECK(multiply(e, multiply(e, x1, x2), x3) ==
              multiply(e, x1, multiply(e, x2, x3)));
      }
    }
  }

  TEST_CASE("commutator is bimultiplicative") {
    std::mt19937_64 rng(40112);
    IntMat c(3, 3);
    for (int r = 0; r < 3; ++r)
      for (int s = 0; s < 3; ++s) c(r, s) = Int(rng() % 9) - 4;
    MonomialCocycleExtension e = d_of(F5, c);
    for (int i = 0; i < 40; ++i) {
      auto rv = [&] {
        IntVec y(3);
        y << Int(rng() % 7) - 3, Int(rng() % 7) - 3, Int(rng() % 7) - 3;
        return y;
      };
      const IntVec y1 = rv(), y1b = rv(), y2 = rv();
      CHECK(commutator(e, y1 + y1b, y2) ==
            commutator(e, y1, y2) * commutator(e, y1b, y2));
    }
  }

  TEST_CASE("pushout along valuation splits the sign extension") {
    // val(-1) = 0 at every finite place, so val_*(D_c) has trivial cocycle.
    MonomialCocycleExtension e = d_of(F5, IntMat::Constant(1, 1, 3));
    MonomialCocycleExtension pushed =
        pushout(e, CoeffHom::val_at(F5, parse_place(F5, "t")));
    CHECK(pushed.coeff == CoefficientGroup::z());
    CHECK(split(pushed).ok());
    for (Int m = -3; m <= 3; ++m)
      for (Int n = -3; n <= 3; ++n)
        CHECK(pushed.sigma(vec({m}), vec({n})).is_identity());
  }

  TEST_CASE("pushout along residue keeps the sign") {
    const Place at_t = parse_place(F5, "t");
    MonomialCocycleExtension e = d_of(F5, IntMat::Constant(1, 1, 1));
    MonomialCocycleExtension pushed = pushout(e, CoeffHom::residue_at(F5, at_t));
    const ResidueField f5 = ResidueField::prime_field(5);
    CHECK(pushed.sigma(vec({1}), vec({1})) ==
          CoeffElem::of_residue(CoefficientGroup::resx(f5),
                                ResidueElement::from_int(f5, 4)));
  }

  TEST_CASE("pullback along multiplication by 2 trivializes signs") {
    MonomialCocycleExtension e = d_of(Q, IntMat::Constant(1, 1, 1));
    LatticeMap twice{e.base, e.base, IntMat::Constant(1, 1, 2)};
    MonomialCocycleExtension pulled = pullback(e, twice);
    CHECK(pulled.terms.at(0).form == IntMat::Constant(1, 1, 4));
    CHECK(split(pulled).ok());
  }

  TEST_CASE("split of scalar D_c gives the binomial cochain") {
    for (Int c : {1, 2, 3}) {
      MonomialCocycleExtension e = d_of(F5, IntMat::Constant(1, 1, c));
      SplitResult s = split(e);
      REQUIRE(s.ok());
      for (Int m = -3; m <= 3; ++m) {
        const CoeffElem expected =
            CoeffElem::of_field(e.coeff, FieldElement::integer(F5, -1))
                .pow(-c * m * (m + 1) / 2);
        CHECK((*s.phi)(vec({m})) == expected);
      }
    }
  }

  TEST_CASE("split certificate: d phi . sigma trivial on a grid") {
    std::mt19937_64 rng(40113);
    for (int i = 0; i < 25; ++i) {
      IntMat c(2, 2);
      for (int r = 0; r < 2; ++r)
        for (int s = 0; s < 2; ++s) c(r, s) = Int(rng() % 9) - 4;
      MonomialCocycleExtension e = d_of(F5, c);
      SplitResult s = split(e);
      if ((c(0, 1) - c(1, 0)) % 2 != 0) {
        REQUIRE_FALSE(s.ok());
        const auto [k, l] = *s.witness;
        IntVec ek = IntVec::Zero(2), el = IntVec::Zero(2);
        ek(k) = 1;
        el(l) = 1;
        CHECK_FALSE(commutator(e, ek, el).is_identity());
        continue;
      }
      REQUIRE(s.ok());
      MonomialCocycleExtension db = s.phi->coboundary();
      for (const IntVec& y1 : grid(2, -3, 3))
        for (const IntVec& y2 : grid(2, -3, 3))
          CHECK((db.sigma(y1, y2) * e.sigma(y1, y2)).is_identity());
    }
  }

  TEST_CASE("nonsplit witness for the off-diagonal form") {
    IntMat c = IntMat::Zero(2, 2);
    c(0, 1) = 1;
    SplitResult s = split(d_of(Q, c));
    REQUIRE_FALSE(s.ok());
    CHECK(s.witness == std::pair<int, int>{0, 1});
  }

  TEST_CASE("baer sum adds forms") {
    IntMat c1(1, 1), c2(1, 1);
    c1 << 1;
    c2 << 2;
    MonomialCocycleExtension sum = baer_sum(d_of(F5, c1), d_of(F5, c2));
    for (Int m = -3; m <= 3; ++m)
      for (Int n = -3; n <= 3; ++n)
        CHECK(sum.sigma(vec({m}), vec({n})) ==
              d_of(F5, IntMat::Constant(1, 1, 3)).sigma(vec({m}), vec({n})));
  }

  TEST_CASE("isomorphism: transpose form, nontrivial class, equivalence") {
    std::mt19937_64 rng(40114);
    IntMat c(2, 2);
    c << 1, 3, 1, 2;
    CHECK(is_isomorphic(d_of(F5, c), d_of(F5, IntMat(c.transpose()))).ok());
    // Rank-one extensions of Z always split; an odd off-diagonal form does not.
    CHECK(is_isomorphic(d_of(F5, IntMat::Constant(1, 1, 1)),
                        MonomialCocycleExtension::split_ext(Lattice{1, "Y"},
                                                            CoefficientGroup::fx(F5)))
              .ok());
    IntMat odd = IntMat::Zero(2, 2);
    odd(0, 1) = 1;
    CHECK_FALSE(is_isomorphic(d_of(F5, odd),
                              MonomialCocycleExtension::split_ext(
                                  Lattice{2, "Y"}, CoefficientGroup::fx(F5)))
                    .ok());
    // Symmetry and transitivity over a small pool.
    std::vector<MonomialCocycleExtension> pool;
    for (int i = 0; i < 5; ++i) {
      IntMat m(2, 2);
      for (int r = 0; r < 2; ++r)
        for (int s = 0; s < 2; ++s) m(r, s) = Int(rng() % 5) - 2;
      pool.push_back(d_of(F5, m));
    }
    for (size_t i = 0; i < pool.size(); ++i)
      for (size_t j = 0; j < pool.size(); ++j) {
        const bool ij = is_isomorphic(pool[i], pool[j]).ok();
        CHECK(ij == is_isomorphic(pool[j], pool[i]).ok());
        for (size_t k = 0; k < pool.size(); ++k)
          if (ij && is_isomorphic(pool[j], pool[k]).ok())
            CHECK(is_isomorphic(pool[i], pool[k]).ok());
      }
  }

  TEST_CASE("canonical cochain terms reflect base factorization") {
    const CoefficientGroup fx = CoefficientGroup::fx(F5);
    MonomialCochain phi = MonomialCochain::zero(Lattice{1, "Y"}, fx);
    QuadraticCochain q{IntMat::Zero(1, 1), vec({2})};
    phi.terms.push_back({CoeffElem::of_field(fx, parse_element(F5, "t^2")), q});
    auto terms = canonical_cochain_terms(phi);
    REQUIRE(terms.size() == 1);
    CHECK(terms[0].base == CoeffElem::of_field(fx, parse_element(F5, "t")));
    CHECK(terms[0].q.b == vec({4}));
  }
}
