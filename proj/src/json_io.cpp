#include "bdk2/json_io.hpp"

#include <stdexcept>

namespace bdk2 {

Json matrix_to_json(const IntMat& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMat matrix_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("matrix: array of arrays expected");
  const int rows = static_cast<int>(j.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(j.at(0).size());
  IntMat m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (static_cast<int>(j.at(i).size()) != cols)
      throw std::invalid_argument("matrix: ragged rows");
    for (int k = 0; k < cols; ++k) m(i, k) = j.at(i).at(k).get<Int>();
  }
  return m;
}

namespace {

Json vec_to_json(const IntVec& v) {
  Json a = Json::array();
  for (int i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

IntVec vec_from_json(const Json& j) {
  IntVec v(static_cast<int>(j.size()));
  for (int i = 0; i < v.size(); ++i) v(i) = j.at(i).get<Int>();
  return v;
}

}  // namespace

Json root_datum_to_json(const RootDatum& rd) {
  Json roots = Json::array(), coroots = Json::array();
  for (int i = 0; i < rd.num_roots(); ++i) {
    roots.push_back(vec_to_json(rd.root(i)));
    coroots.push_back(vec_to_json(rd.coroot(i)));
  }
  return {{"rank", rd.rank()}, {"roots", roots}, {"coroots", coroots}, {"label", rd.label()}};
}

RootDatum root_datum_from_json(const Json& j) {
  std::vector<IntVec> roots, coroots;
  for (const Json& r : j.at("roots")) roots.push_back(vec_from_json(r));
  for (const Json& c : j.at("coroots")) coroots.push_back(vec_from_json(c));
  return RootDatum(j.at("rank").get<int>(), roots, coroots, j.value("label", ""));
}

Json quadratic_form_to_json(const QuadraticForm& q) {
  Json upper = Json::object();
  const int n = q.lattice().rank;
  for (int i = 0; i < n; ++i)
    for (int k = i; k < n; ++k)
      if (q.upper()(i, k) != 0)
        upper[std::to_string(i) + "," + std::to_string(k)] = q.upper()(i, k);
  return {{"rank", n}, {"upper", upper}};
}

QuadraticForm quadratic_form_from_json(const Json& j) {
  const int n = j.at("rank").get<int>();
  IntMat upper = IntMat::Zero(n, n);
  for (const auto& [key, value] : j.at("upper").items()) {
    const auto comma = key.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("quadratic form: bad key '" + key + "'");
    const int i = std::stoi(key.substr(0, comma));
    const int k = std::stoi(key.substr(comma + 1));
    if (i > k || k >= n) throw std::invalid_argument("quadratic form: bad index '" + key + "'");
    upper(i, k) = value.get<Int>();
  }
  return QuadraticForm(Lattice{n, "Y"}, upper);
}

Json incarnation_to_json(const BilinearIncarnation& c) {
  return {{"rank", c.lattice.rank}, {"matrix", matrix_to_json(c.matrix)}};
}

BilinearIncarnation incarnation_from_json(const Json& j) {
  const int n = j.at("rank").get<int>();
  IntMat m = matrix_from_json(j.at("matrix"));
  if (m.rows() != n || m.cols() != n)
    throw std::invalid_argument("incarnation: matrix shape mismatch");
  return {Lattice{n, "Y"}, std::move(m)};
}

Json coeff_group_to_json(const CoefficientGroup& g) {
  switch (g.kind) {
    case CoeffKind::Fx: return {{"kind", "Fx"}, {"field", g.field.str()}};
    case CoeffKind::Z: return {{"kind", "Z"}};
    case CoeffKind::Resx:
      return {{"kind", "resx"}, {"p", g.res.p}, {"modulus", g.res.modulus.str()}};
    case CoeffKind::Mu2: return {{"kind", "mu2"}};
  }
  throw std::logic_error("coeff_group_to_json: bad kind");
}

CoefficientGroup coeff_group_from_json(const Json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "Fx") return CoefficientGroup::fx(parse_field(j.at("field").get<std::string>()));
  if (kind == "Z") return CoefficientGroup::z();
  if (kind == "mu2") return CoefficientGroup::mu2();
  if (kind == "resx") {
    const Int p = j.at("p").get<Int>();
    const Poly modulus =
        parse_element(FieldConfig::function_field(p), j.at("modulus").get<std::string>()).pnum();
    return CoefficientGroup::resx(ResidueField{p, modulus});
  }
  throw std::invalid_argument("coeff group: unknown kind '" + kind + "'");
}

namespace {

CoeffElem coeff_elem_from_string(const CoefficientGroup& g, const std::string& s) {
  switch (g.kind) {
    case CoeffKind::Fx: return CoeffElem::of_field(g, parse_element(g.field, s));
    case CoeffKind::Z: return CoeffElem::of_int(std::stoll(s));
    case CoeffKind::Mu2: return CoeffElem::of_sign(std::stoll(s));
    case CoeffKind::Resx: {
      const Poly v = parse_element(FieldConfig::function_field(g.res.p), s).pnum();
      return CoeffElem::of_residue(g, ResidueElement(g.res, v));
    }
  }
  throw std::logic_error("coeff_elem_from_string: bad kind");
}

}  // namespace

Json extension_to_json(const MonomialCocycleExtension& e) {
  Json terms = Json::array();
  for (const CocycleTerm& t : e.terms)
    terms.push_back({{"base", t.a.str()}, {"form", matrix_to_json(t.form)}});
  return {{"rank", e.base.rank}, {"coeff", coeff_group_to_json(e.coeff)}, {"terms", terms}};
}

MonomialCocycleExtension extension_from_json(const Json& j) {
  MonomialCocycleExtension e;
  e.base = Lattice{j.at("rank").get<int>(), "Y"};
  e.coeff = coeff_group_from_json(j.at("coeff"));
  for (const Json& t : j.at("terms")) {
    IntMat form = matrix_from_json(t.at("form"));
    if (form.rows() != e.base.rank || form.cols() != e.base.rank)
      throw std::invalid_argument("extension: form shape mismatch");
    e.terms.push_back({coeff_elem_from_string(e.coeff, t.at("base").get<std::string>()), form});
  }
  return e;
}

Json cochain_to_json(const MonomialCochain& c) {
  Json terms = Json::array();
  for (const CochainTerm& t : c.terms)
    terms.push_back(
        {{"base", t.a.str()}, {"a", matrix_to_json(t.q.a)}, {"b", vec_to_json(t.q.b)}});
  return {{"rank", c.base.rank}, {"coeff", coeff_group_to_json(c.coeff)}, {"terms", terms}};
}

MonomialCochain cochain_from_json(const Json& j) {
  MonomialCochain c;
  c.base = Lattice{j.at("rank").get<int>(), "Y"};
  c.coeff = coeff_group_from_json(j.at("coeff"));
  for (const Json& t : j.at("terms")) {
    QuadraticCochain q{matrix_from_json(t.at("a")), vec_from_json(t.at("b"))};
    c.terms.push_back({coeff_elem_from_string(c.coeff, t.at("base").get<std::string>()), q});
  }
  return c;
}

Json triple_to_json(const BDTriple& t) {
  return {{"rootDatum", root_datum_to_json(t.rd)},
          {"field", t.field.str()},
          {"Q", quadratic_form_to_json(t.q)},
          {"D", extension_to_json(t.d)},
          {"p", matrix_to_json(t.p.matrix)},
          {"phi", cochain_to_json(t.phi)}};
}

BDTriple triple_from_json(const Json& j) {
  RootDatum rd = root_datum_from_json(j.at("rootDatum"));
  const FieldConfig field = parse_field(j.at("field").get<std::string>());
  QuadraticForm q = quadratic_form_from_json(j.at("Q"));
  MonomialCocycleExtension d = extension_from_json(j.at("D"));
  LatticeMap p = rd.coroot_inclusion();
  if (matrix_from_json(j.at("p")) != p.matrix)
    throw std::invalid_argument("triple: p does not match the coroot inclusion");
  MonomialCochain phi = cochain_from_json(j.at("phi"));
  phi.base = p.source;
  return {std::move(rd), field, std::move(q), std::move(d), std::move(p), std::move(phi)};
}

Json k2_coordinates_to_json(const K2Coordinates& c) {
  Json coords = Json::array();
  for (const auto& [place, value] : c.coords)
    coords.push_back({{"place", place.str()}, {"value", value.str()}});
  Json out = {{"coords", coords}};
  if (c.field.kind == FieldKind::Rational) {
    out["sign2"] = c.sign2;
    out["signReal"] = c.signReal;
  }
  return out;
}

Json model_report_to_json(const IntegralModelReport& r) {
  Json out = {{"exists", r.exists}, {"torsorRank", r.torsor_rank}, {"torsion", r.torsion}};
  if (r.witness)
    out["witness"] = cochain_to_json(*r.witness);
  else
    out["obstruction"] = r.obstruction;
  return out;
}

}  // namespace bdk2
