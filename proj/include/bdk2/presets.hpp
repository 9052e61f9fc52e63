#pragma once

#include <string>
#include <vector>

#include "bdk2/lattice.hpp"

namespace bdk2 {

// Embedded root data: SL2, PGL2, GL2, GL3, GL4, SL3, Sp4, Gm1..Gm4.
std::vector<std::string> preset_names();
RootDatum preset_root_datum(const std::string& name);

}  // namespace bdk2
