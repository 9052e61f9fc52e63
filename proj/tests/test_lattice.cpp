#include <doctest.h>

#include <functional>
#include <random>

#include "bdk2/lattice.hpp"
#include "bdk2/presets.hpp"

using namespace bdk2;

namespace {

IntMat mat(int r, int c, std::initializer_list<Int> xs) {
  IntMat m(r, c);
  int i = 0;
  for (Int x : xs) m(i / c, i % c) = x, ++i;
  return m;
}

// Exhaustive-search oracle for extend_hom: all h with entries in [-10, 10].
bool brute_extendable(const IntMat& p, const IntMat& psi) {
  const int n = static_cast<int>(p.rows());
  REQUIRE(n <= 2);
  IntVec h(n);
  std::function<bool(int)> rec = [&](int i) -> bool {
    if (i == n) return (h.transpose() * p) == psi;
    for (Int x = -10; x <= 10; ++x) {
      h(i) = x;
      if (rec(i + 1)) return true;
    }
    return false;
  };
  return rec(0);
}

}  // namespace

TEST_SUITE("lattice") {

TEST_CASE("weyl reflection for SL2 is -1") {
  const RootDatum sl2 = preset_root_datum("SL2");
  CHECK(weyl_reflection(sl2, 0).matrix == mat(1, 1, {-1}));
}

TEST_CASE("weyl reflection for GL2 swaps coordinates") {
  const RootDatum gl2 = preset_root_datum("GL2");
  CHECK(weyl_reflection(gl2, 0).matrix == mat(2, 2, {0, 1, 1, 0}));
}

TEST_CASE("reflections are involutions") {
  for (const std::string name : {"SL2", "PGL2", "GL3", "SL3", "Sp4"}) {
    const RootDatum rd = preset_root_datum(name);
    for (int i = 0; i < rd.num_roots(); ++i) {
      const LatticeMap s = weyl_reflection(rd, i);
      CHECK(s.compose(s).matrix == IntMat::Identity(rd.rank(), rd.rank()));
    }
  }
}

TEST_CASE("weyl invariance examples") {
  const RootDatum sl2 = preset_root_datum("SL2");
  CHECK(is_weyl_invariant(QuadraticForm(sl2.y_lattice(), mat(1, 1, {3})), sl2));
  const RootDatum gl2 = preset_root_datum("GL2");
  CHECK(is_weyl_invariant(QuadraticForm(gl2.y_lattice(), mat(2, 2, {1, 0, 0, 1})), gl2));
  CHECK_FALSE(is_weyl_invariant(QuadraticForm(gl2.y_lattice(), mat(2, 2, {1, 0, 0, 0})), gl2));
}

TEST_CASE("B_Q has diagonal 2q_ii and off-diagonal q_ij") {
  const QuadraticForm q(Lattice{2, "Y"}, mat(2, 2, {1, 2, 0, 3}));
  const IntMat b = q.bilinear();
  CHECK(b == mat(2, 2, {2, 2, 2, 6}));
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<Int> entry(-5, 5);
  for (int i = 0; i < 50; ++i) {
    IntVec y1(2), y2(2);
    y1 << entry(rng), entry(rng);
    y2 << entry(rng), entry(rng);
    CHECK(q.bilinear(y1, y2) == q(y1 + y2) - q(y1) - q(y2));
  }
}

TEST_CASE("coroot inclusion picks the simple coroots") {
  CHECK(preset_root_datum("SL2").coroot_inclusion().matrix == mat(1, 1, {1}));
  CHECK(preset_root_datum("PGL2").coroot_inclusion().matrix == mat(1, 1, {2}));
  CHECK(preset_root_datum("Gm3").semisimple_rank() == 0);
  CHECK(preset_root_datum("GL3").semisimple_rank() == 2);
  CHECK(preset_root_datum("Sp4").semisimple_rank() == 2);
}

TEST_CASE("extend_hom matches the exhaustive oracle") {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<Int> entry(-4, 4);
  const Lattice z1{1, "Z"};
  for (int trial = 0; trial < 120; ++trial) {
    // p: Z -> Z^2 injective; psi: Z -> Z.
    IntMat pm(2, 1);
    pm << entry(rng), entry(rng);
    if (pm.isZero()) continue;
    IntMat psim(1, 1);
    psim << entry(rng);
    const LatticeMap p{z1, Lattice{2, "Y"}, pm};
    const LatticeMap psi{z1, z1, psim};
    const auto ext = extend_hom(p, psi);
    CHECK(ext.has_value() == brute_extendable(pm, psim));
    if (ext) {
      CHECK(ext->particular * pm == psim);
      for (const IntMat& k : ext->kernel_basis) CHECK((k * pm).isZero());
    }
  }
  // The spec's pinned rank-1 instances: p(1) = 2.
  const LatticeMap p2{z1, z1, mat(1, 1, {2})};
  CHECK_FALSE(extend_hom(p2, LatticeMap{z1, z1, mat(1, 1, {1})}).has_value());
  const auto ok = extend_hom(p2, LatticeMap{z1, z1, mat(1, 1, {4})});
  REQUIRE(ok.has_value());
  CHECK(ok->particular == mat(1, 1, {2}));
}

TEST_CASE("semisimple data admit no nonzero Weyl-invariant hom on Y_SC") {
  for (const std::string name : {"SL2", "PGL2", "SL3", "Sp4"}) {
    const RootDatum rd = preset_root_datum(name);
    const LatticeMap& p = rd.coroot_inclusion();
    const int m = p.source.rank;
    // h on Y_SC is Weyl-invariant iff h(s_i gamma) = h(gamma) for the coroot
    // basis under every reflection; collect the constraints and solve.
    std::vector<IntVec> constraints;
    for (int i = 0; i < rd.num_roots(); ++i) {
      const LatticeMap s = weyl_reflection(rd, i);
      for (int k = 0; k < m; ++k) {
        const IntVec gamma = p.matrix.col(k);
        const IntVec image = s.apply(gamma);
        // Solve image = p * c to express it in coroot-basis coordinates.
        const auto c = solve_integer(p.matrix, image);
        REQUIRE(c.has_value());
        IntVec e = IntVec::Zero(m);
        e(k) = 1;
        constraints.push_back(c->particular - e);
      }
    }
    IntMat a(static_cast<int>(constraints.size()), m);
    for (size_t r = 0; r < constraints.size(); ++r) a.row(static_cast<int>(r)) = constraints[r];
    CHECK(integer_kernel(a.transpose() * a).cols() == 0);
  }
}

}
