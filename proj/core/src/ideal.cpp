#include "petit/number_field/ideal.hpp"

#include "petit/util/error.hpp"

namespace petit {

void validate_ideal(const NumberField& k, const IntegralIdeal& ideal) {
  if (ideal.generators.empty()) throw ZeroIdeal("ideal has no generators");
  bool nonzero = false;
  for (const auto& g : ideal.generators) {
    if (g.coords.size() != k.degree()) throw ShapeMismatch("ideal generator has wrong length");
    if (!g.is_integral()) throw CoefficientsNotIntegral("ideal generator " + k.to_string(g) + " is not integral");
    if (!ideal.subring.empty() && !k.in_subfield(g, k.subfield(ideal.subring)))
      throw ConfigError("ideal generator " + k.to_string(g) + " is not in subring '" + ideal.subring + "'");
    nonzero = nonzero || !g.is_zero();
  }
  if (!nonzero) throw ZeroIdeal("all ideal generators are zero");
}

IntegralIdeal ideal_product(const NumberField& k, const IntegralIdeal& a, const IntegralIdeal& b) {
  IntegralIdeal out;
  out.subring = a.subring == b.subring ? a.subring : std::string{};
  for (const auto& x : a.generators)
    for (const auto& y : b.generators) out.generators.push_back(k.mul(x, y));
  out.label = "(" + a.label + ")(" + b.label + ")";
  return out;
}

IntegralIdeal ideal_power(const NumberField& k, const IntegralIdeal& a, int exponent) {
  if (exponent < 1) throw InvalidArgument("ideal exponent must be positive");
  IntegralIdeal out = a;
  for (int i = 1; i < exponent; ++i) out = ideal_product(k, out, a);
  out.label = "(" + a.label + ")^" + std::to_string(exponent);
  out.factorization = {{a, exponent}};
  return out;
}

IntegralIdeal principal_ideal(const NumberField& k, FieldElement generator, std::string subring, std::string label) {
  IntegralIdeal out;
  out.subring = std::move(subring);
  out.label = label.empty() ? k.to_string(generator) : std::move(label);
  out.generators.push_back(std::move(generator));
  validate_ideal(k, out);
  return out;
}

}  // namespace petit
