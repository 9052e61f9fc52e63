#include "bdk2/json_io.hpp"
#include "bdk2/presets.hpp"
#include "doctest.h"

using namespace bdk2;

namespace {
const FieldConfig F5 = FieldConfig::function_field(5);
}

TEST_SUITE("cli_io") {
  TEST_CASE("matrix round trip") {
    IntMat m(2, 3);
    m << 1, -2, 3, 0, 4, -5;
    CHECK(matrix_from_json(matrix_to_json(m)) == m);
  }

  TEST_CASE("root datum round trip over all presets") {
    for (const std::string& name : preset_names()) {
      RootDatum rd = preset_root_datum(name);
      RootDatum back = root_datum_from_json(root_datum_to_json(rd));
      CHECK(back.rank() == rd.rank());
      CHECK(back.num_roots() == rd.num_roots());
      for (int i = 0; i < rd.num_roots(); ++i) {
        CHECK(back.root(i) == rd.root(i));
        CHECK(back.coroot(i) == rd.coroot(i));
      }
      CHECK(back.coroot_inclusion().matrix == rd.coroot_inclusion().matrix);
    }
  }

  TEST_CASE("presets are valid root data") {
    for (const std::string& name : preset_names()) {
      RootDatum rd = preset_root_datum(name);
      // Roots and coroots pair to 2 and reflections permute the coroots.
      for (int i = 0; i < rd.num_roots(); ++i) {
        CHECK(rd.root(i).dot(rd.coroot(i)) == 2);
        LatticeMap refl = weyl_reflection(rd, i);
        for (int j = 0; j < rd.num_roots(); ++j) {
          const IntVec image = refl.apply(rd.coroot(j));
          bool found = false;
          for (int k = 0; k < rd.num_roots(); ++k) found = found || image == rd.coroot(k);
          CHECK(found);
        }
      }
    }
  }

  TEST_CASE("quadratic form and extension round trips") {
    IntMat upper(2, 2);
    upper << 1, -1, 0, 2;
    QuadraticForm q(Lattice{2, "Y"}, upper);
    CHECK(quadratic_form_from_json(quadratic_form_to_json(q)) == q);

    const CoefficientGroup fx = CoefficientGroup::fx(F5);
    MonomialCocycleExtension e{
        Lattice{2, "Y"}, fx,
        {{CoeffElem::of_field(fx, parse_element(F5, "t+1")), upper},
         {CoeffElem::of_field(fx, FieldElement::integer(F5, -1)), IntMat(upper.transpose())}}};
    MonomialCocycleExtension back = extension_from_json(extension_to_json(e));
    CHECK(back.coeff == e.coeff);
    REQUIRE(back.terms.size() == 2);
    for (size_t i = 0; i < 2; ++i) {
      CHECK(back.terms[i].a == e.terms[i].a);
      CHECK(back.terms[i].form == e.terms[i].form);
    }
  }

  TEST_CASE("cochain round trip") {
    const CoefficientGroup fx = CoefficientGroup::fx(F5);
    MonomialCochain phi = MonomialCochain::zero(Lattice{2, "Y"}, fx);
    IntMat a(2, 2);
    a << 0, 1, 1, 0;
    IntVec b(2);
    b << 0, 0;
    phi.terms.push_back({CoeffElem::of_field(fx, FieldElement::integer(F5, -1)), {a, b}});
    MonomialCochain back = cochain_from_json(cochain_to_json(phi));
    REQUIRE(back.terms.size() == 1);
    CHECK(back.terms[0].a == phi.terms[0].a);
    CHECK(back.terms[0].q == phi.terms[0].q);
  }

  TEST_CASE("triple round trip and p validation") {
    RootDatum rd = preset_root_datum("SL3");
    IntMat c(2, 2);
    c << 1, -1, 0, 1;
    BDTriple t = third_invariant_solve(rd, {rd.y_lattice(), c}, F5);
    Json j = triple_to_json(t);
    BDTriple back = triple_from_json(j);
    CHECK(back.q == t.q);
    CHECK(back.p.matrix == t.p.matrix);
    CHECK(triple_compatibility_check(back, 2));
    // Serialization is deterministic.
    CHECK(triple_to_json(back).dump() == j.dump());

    Json broken = j;
    broken["p"] = matrix_to_json(IntMat::Zero(2, 2));
    CHECK_THROWS_AS(triple_from_json(broken), std::invalid_argument);
  }

  TEST_CASE("k2 coordinates serialization") {
    SymbolExpression sym{F5, {{parse_element(F5, "t"), parse_element(F5, "t-2"), 1}}};
    Json j = k2_coordinates_to_json(k2_coordinates(sym));
    REQUIRE(j.at("coords").size() == 3);
    CHECK(j.at("coords")[0].at("place") == "t");
    CHECK(j.at("coords")[0].at("value") == "2");
    CHECK(j.at("coords")[2].at("place") == "inf");
    CHECK(j.at("coords")[2].at("value") == "4");
  }

  TEST_CASE("model report serialization") {
    RootDatum rd = preset_root_datum("SL2");
    BDTriple t = third_invariant_solve(rd, {rd.y_lattice(), IntMat::Constant(1, 1, 1)}, F5);
    Json j = model_report_to_json(decide_integral_model(t, parse_place(F5, "t")));
    CHECK(j.at("exists") == true);
    CHECK(j.at("torsorRank") == 0);
  }
}
