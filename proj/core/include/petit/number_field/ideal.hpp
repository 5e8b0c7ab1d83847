#pragma once

#include <string>
#include <utility>
#include <vector>

#include "petit/number_field/number_field.hpp"

namespace petit {

/// Ideal of the ring of integers of a configured subfield (empty subring name
/// means the whole ring of integers), given by generators.
struct IntegralIdeal {
  std::string subring;
  std::vector<FieldElement> generators;
  /// Optional factorization into prime ideals with exponents.
  std::vector<std::pair<IntegralIdeal, int>> factorization;
  std::string label;
};

/// Checks integrality, membership of generators in the subring and nonzeroness.
void validate_ideal(const NumberField& k, const IntegralIdeal& ideal);

/// Generators of the product ideal (all pairwise products).
IntegralIdeal ideal_product(const NumberField& k, const IntegralIdeal& a, const IntegralIdeal& b);

IntegralIdeal ideal_power(const NumberField& k, const IntegralIdeal& a, int exponent);

IntegralIdeal principal_ideal(const NumberField& k, FieldElement generator, std::string subring = {},
                              std::string label = {});

}  // namespace petit
