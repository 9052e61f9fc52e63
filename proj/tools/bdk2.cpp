#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <string>

#include "bdk2/bd.hpp"
#include "bdk2/json_io.hpp"
#include "bdk2/presets.hpp"
#include "bdk2/residue_functors.hpp"
#include "bdk2/verify.hpp"

namespace {

using namespace bdk2;

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file '" + path + "'");
  Json j;
  in >> j;
  return j;
}

RootDatum load_root_datum(const std::string& spec) {
  if (spec.rfind("presets:", 0) == 0) return preset_root_datum(spec.substr(8));
  return root_datum_from_json(read_json_file(spec));
}

BDTriple load_triple(const std::string& path) { return triple_from_json(read_json_file(path)); }

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

// C from a triple whose D is an incarnated D_C (single base -1 term).
IntMat incarnation_of(const BDTriple& t) {
  const FieldElement minus_one = FieldElement::integer(t.field, -1);
  if (t.d.terms.size() == 1 && t.d.terms[0].a.field_value() == minus_one)
    return t.d.terms[0].form;
  if (t.d.terms.empty()) return IntMat::Zero(t.rd.rank(), t.rd.rank());
  throw std::invalid_argument("triple: D is not an incarnated D_C presentation");
}

int run(int argc, char** argv) {
  CLI::App app{"Brylinski-Deligne invariants of K2 extensions"};
  app.require_subcommand(1);
  bool strict = false;
  app.add_flag("--strict", strict, "exit 1 on mathematical obstructions");

  std::string field_name = "F5t", place_name = "t";
  std::string u_str, v_str, matrix_str, rd_spec = "presets:SL2";
  std::vector<std::string> triple_paths;
  std::string suite = "all", preset_name, out_path;

  auto* symbol = app.add_subcommand("symbol", "tame coordinates of {u,v}");
  symbol->add_option("--field", field_name);
  symbol->add_option("--u", u_str)->required();
  symbol->add_option("--v", v_str)->required();
  std::string symbol_place;
  symbol->add_option("--place", symbol_place, "restrict to one place");

  auto* incarnate_cmd = app.add_subcommand("incarnate", "incarnated torus extension product");
  incarnate_cmd->add_option("--field", field_name);
  incarnate_cmd->add_option("--matrix", matrix_str)->required();
  std::vector<std::string> s_coords, t_coords;
  incarnate_cmd->add_option("--s", s_coords, "coordinates of the first point")->required();
  incarnate_cmd->add_option("--t", t_coords, "coordinates of the second point")->required();

  auto* invariants = app.add_subcommand("invariants", "BD triple of an incarnation");
  invariants->add_option("--root-datum", rd_spec);
  invariants->add_option("--matrix", matrix_str)->required();
  invariants->add_option("--field", field_name);
  invariants->add_option("--out", out_path, "write the triple JSON to a file");

  auto* baer = app.add_subcommand("baer-sum", "Baer sum of two triples");
  baer->add_option("--triple", triple_paths)->expected(2);

  auto* morphism = app.add_subcommand("morphism", "morphism between two triples");
  morphism->add_option("--triple", triple_paths)->expected(2);

  auto* residual = app.add_subcommand("residual", "residual extension of a triple");
  residual->add_option("--triple", triple_paths)->expected(1);
  residual->add_option("--place", place_name);

  auto* val = app.add_subcommand("val", "val functor applied to a triple");
  val->add_option("--triple", triple_paths)->expected(1);
  val->add_option("--place", place_name);

  auto* decide = app.add_subcommand("decide-model", "integral model decision");
  decide->add_option("--triple", triple_paths)->expected(1);
  decide->add_option("--place", place_name);

  auto* verify = app.add_subcommand("verify", "run property suites");
  verify->add_option("--suite", suite, "square|steinberg|reciprocity|models|all");

  auto* presets = app.add_subcommand("presets", "list or dump embedded root data");
  presets->add_option("--name", preset_name);

  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();  // global flags like --strict may follow the subcommand

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  }

  const FieldConfig field = parse_field(field_name);

  if (symbol->parsed()) {
    const FieldElement u = parse_element(field, u_str);
    const FieldElement v = parse_element(field, v_str);
    if (!symbol_place.empty()) {
      const Place place = parse_place(field, symbol_place);
      emit({{"place", place.str()}, {"value", tame_symbol(u, v, place).str()}});
    } else {
      emit(k2_coordinates_to_json(k2_coordinates({field, {{u, v, 1}}})));
    }
    return 0;
  }
  if (incarnate_cmd->parsed()) {
    const IntMat m = matrix_from_json(Json::parse(matrix_str));
    const IncarnatedTorusExtension E =
        incarnate({Lattice{static_cast<int>(m.rows()), "Y"}, m}, field);
    if (static_cast<int>(s_coords.size()) != E.y.rank ||
        static_cast<int>(t_coords.size()) != E.y.rank)
      throw std::invalid_argument("incarnate: expected " + std::to_string(E.y.rank) +
                                  " coordinates per point");
    TorusPoint a = E.identity(), b = E.identity();
    for (int i = 0; i < E.y.rank; ++i) {
      a.s[i] = parse_element(field, s_coords[i]);
      b.s[i] = parse_element(field, t_coords[i]);
    }
    const TorusPoint prod = E.multiply(a, b);
    Json coords = Json::array();
    for (const FieldElement& x : prod.s) coords.push_back(x.str());
    emit({{"s", coords}, {"alpha", k2_coordinates_to_json(k2_coordinates(prod.alpha))}});
    return 0;
  }
  if (invariants->parsed()) {
    const RootDatum rd = load_root_datum(rd_spec);
    const IntMat m = matrix_from_json(Json::parse(matrix_str));
    const BDTriple t = third_invariant_solve(rd, {rd.y_lattice(), m}, field);
    const Json j = triple_to_json(t);
    if (!out_path.empty()) {
      std::ofstream out(out_path);
      out << j.dump(2) << "\n";
    }
    emit(j);
    return 0;
  }
  if (baer->parsed()) {
    emit(triple_to_json(bd_baer_sum(load_triple(triple_paths[0]), load_triple(triple_paths[1]))));
    return 0;
  }
  if (morphism->parsed()) {
    const BDMorphism m = bd_morphisms(load_triple(triple_paths[0]), load_triple(triple_paths[1]));
    if (m.ok()) {
      emit({{"psi", cochain_to_json(*m.psi)}});
      return 0;
    }
    emit({{"obstruction", m.obstruction}});
    return strict ? 1 : 0;
  }
  if (residual->parsed()) {
    const BDTriple t = load_triple(triple_paths[0]);
    const Place place = parse_place(t.field, place_name);
    const ResidualExtension r =
        residual_extension({t.rd.y_lattice(), incarnation_of(t)}, t.field, place);
    Json j = {{"place", r.place.str()},
              {"cocycle", extension_to_json(r.cocycle)},
              {"trivial", r.cocycle.terms.empty()}};
    if (r.splitting) j["splitting"] = cochain_to_json(*r.splitting);
    emit(j);
    return 0;
  }
  if (val->parsed()) {
    const BDTriple t = load_triple(triple_paths[0]);
    const Place place = parse_place(t.field, place_name);
    const EZObject ez = val_bd(t, place);
    emit({{"yprime", extension_to_json(ez.yprime)},
          {"p", matrix_to_json(ez.p.matrix)},
          {"psi", matrix_to_json(ez.psi.matrix)}});
    return 0;
  }
  if (decide->parsed()) {
    const BDTriple t = load_triple(triple_paths[0]);
    const Place place = parse_place(t.field, place_name);
    const IntegralModelReport rep = decide_integral_model(t, place);
    emit(model_report_to_json(rep));
    return (strict && !rep.exists) ? 1 : 0;
  }
  if (verify->parsed()) {
    const std::vector<SuiteResult> results = run_verify(suite);
    for (const SuiteResult& r : results)
      std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << "\n";
    return all_passed(results) ? 0 : 1;
  }
  if (presets->parsed()) {
    if (preset_name.empty()) {
      Json names = Json::array();
      for (const std::string& n : preset_names()) names.push_back(n);
      emit({{"presets", names}});
    } else {
      emit(root_datum_to_json(preset_root_datum(preset_name)));
    }
    return 0;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::invalid_argument& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
