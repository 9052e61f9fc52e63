#pragma once

#include <json.hpp>
#include <string>

#include "bdk2/bd.hpp"
#include "bdk2/extensions.hpp"
#include "bdk2/ktheory.hpp"
#include "bdk2/lattice.hpp"
#include "bdk2/residue_functors.hpp"

namespace bdk2 {

using Json = nlohmann::json;

Json matrix_to_json(const IntMat& m);
IntMat matrix_from_json(const Json& j);

Json root_datum_to_json(const RootDatum& rd);
RootDatum root_datum_from_json(const Json& j);

Json quadratic_form_to_json(const QuadraticForm& q);
QuadraticForm quadratic_form_from_json(const Json& j);

Json incarnation_to_json(const BilinearIncarnation& c);
BilinearIncarnation incarnation_from_json(const Json& j);

Json coeff_group_to_json(const CoefficientGroup& g);
CoefficientGroup coeff_group_from_json(const Json& j);

Json extension_to_json(const MonomialCocycleExtension& e);
MonomialCocycleExtension extension_from_json(const Json& j);

Json cochain_to_json(const MonomialCochain& c);
MonomialCochain cochain_from_json(const Json& j);

Json triple_to_json(const BDTriple& t);
BDTriple triple_from_json(const Json& j);

Json k2_coordinates_to_json(const K2Coordinates& c);

Json model_report_to_json(const IntegralModelReport& r);

}  // namespace bdk2
