#include <doctest.h>

#include <random>
#include <stdexcept>

#include "bdk2/fields.hpp"
#include "bdk2/verify.hpp"

using namespace bdk2;

TEST_SUITE("fields") {

TEST_CASE("polynomial parsing and printing round-trips") {
  const FieldConfig f5 = FieldConfig::function_field(5);
  for (const std::string s : {"t^2+3*t+1", "t", "2", "t^4+4"}) {
    const FieldElement e = parse_element(f5, s);
    CHECK(parse_element(f5, e.str()) == e);
  }
  CHECK(parse_element(f5, "t^2+3*t+1").pnum().str() == "t^2+3*t+1");
  CHECK(parse_element(f5, "(t+1)/(t+2)").str() == "(t+1)/(t+2)");
  CHECK(parse_element(FieldConfig::rationals(), "-3/4").str() == "-3/4");
  CHECK(parse_element(FieldConfig::rationals(), "6/-8").str() == "-3/4");
}

TEST_CASE("canonical form: coprime, monic denominator") {
  const FieldConfig f5 = FieldConfig::function_field(5);
  const FieldElement e = parse_element(f5, "(2*t^2+2*t)/(4*t)");
  CHECK(e.pden().is_monic());
  CHECK(e.str() == "3*t+3");
}

TEST_CASE("field arithmetic") {
  const FieldConfig f5 = FieldConfig::function_field(5);
  const FieldElement a = parse_element(f5, "t+1");
  CHECK((a * a.inverse()).is_one());
  CHECK(a.pow(5).str() == "t^5+1");  // Frobenius over F5
  const FieldConfig q = FieldConfig::rationals();
  CHECK((parse_element(q, "2/3") + parse_element(q, "1/6")).str() == "5/6");
}

TEST_CASE("valuations") {
  const FieldConfig f5 = FieldConfig::function_field(5);
  const Place at_t = parse_place(f5, "t");
  const FieldElement u = parse_element(f5, "(t^2+t)/(t^3)");
  CHECK(valuation(u, at_t) == -2);
  CHECK(valuation(u, parse_place(f5, "t+1")) == 1);
  CHECK(valuation(u, Place::infinity()) == 1);
  const FieldConfig q = FieldConfig::rationals();
  CHECK(valuation(parse_element(q, "12/5"), Place::rational_prime(2)) == 2);
  CHECK(valuation(parse_element(q, "12/5"), Place::rational_prime(5)) == -1);
}

TEST_CASE("residues") {
  const FieldConfig f5 = FieldConfig::function_field(5);
  CHECK(residue(parse_element(f5, "t+3"), parse_place(f5, "t")).str() == "3");
  CHECK(residue(parse_element(f5, "(2*t+1)/(t+2)"), Place::infinity()).str() == "2");
  const Place quad = parse_place(f5, "t^2+2");  // irreducible over F5
  CHECK(ResidueField::of_place(f5, quad).order() == 25);
  CHECK(residue(parse_element(f5, "t^2+3"), quad).str() == "1");
  const FieldConfig q = FieldConfig::rationals();
  CHECK(residue(parse_element(q, "3/2"), Place::rational_prime(7)).str() == "5");
}

TEST_CASE("residue element order and norm") {
  const FieldConfig f5 = FieldConfig::function_field(5);
  const ResidueField f25 = ResidueField::of_place(f5, parse_place(f5, "t^2+2"));
  const ResidueElement t(f25, Poly::t(5));
  CHECK(t.pow(24).is_one());
  CHECK(t.order() == 8);  // t^2 = -2 = 3, ord(3) in F5 is 4, so ord(t) = 8
  // Norm = t^{(25-1)/(5-1)} = t^6 = 3^3 = 27 = 2.
  CHECK(t.norm() == 2);
}

TEST_CASE("places_of satisfies the product formula") {
  std::mt19937_64 rng(5);
  for (Int p : {2, 3, 5}) {
    const FieldConfig cfg = FieldConfig::function_field(p);
    for (int i = 0; i < 60; ++i) {
      const FieldElement u = random_element(rng, cfg);
      Int total = 0;
      for (const auto& [place, v] : places_of(u)) total += v * place.degree();
      CHECK(total == 0);  // deg num = deg den balance including infinity
    }
  }
  const auto places = places_of(parse_element(FieldConfig::rationals(), "-12/35"));
  REQUIRE(places.size() == 4);
  CHECK(places[0].first == Place::rational_prime(2));
  CHECK(places[0].second == 2);
  CHECK(places[1].second == 1);   // 3
  CHECK(places[2].second == -1);  // 5
  CHECK(places[3].second == -1);  // 7
}

TEST_CASE("place parsing") {
  const FieldConfig f5 = FieldConfig::function_field(5);
  CHECK(parse_place(f5, "inf").kind == PlaceKind::Infinity);
  CHECK(parse_place(f5, "t+2").degree() == 1);
  CHECK(parse_place(FieldConfig::rationals(), "p:7").prime == 7);
  CHECK(parse_place(FieldConfig::rationals(), "real").is_archimedean());
  CHECK_THROWS_AS(parse_place(f5, "t^2+1"), std::invalid_argument);  // reducible: (t+2)(t+3)
}

}
