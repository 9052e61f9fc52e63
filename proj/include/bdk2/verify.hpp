#pragma once

#include <random>
#include <string>
#include <vector>

#include "bdk2/fields.hpp"

namespace bdk2 {

struct SuiteResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

// suite: one of square, steinberg, reciprocity, models, all.
std::vector<SuiteResult> run_verify(const std::string& suite);

bool all_passed(const std::vector<SuiteResult>& results);

// Deterministic random elements for the property suites (shared with tests).
FieldElement random_element(std::mt19937_64& rng, const FieldConfig& cfg, int max_degree = 4);

}  // namespace bdk2
