#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "petit/number_field/number_field.hpp"

namespace petit {

/// Generator of a tensor-product power basis: a root of a monic integer
/// polynomial (coefficients low to high, leading 1 included).
struct GeneratorSpec {
  std::string label;
  std::vector<long> min_poly;
  std::complex<double> value;
};

/// Order Z[a_1] (x) ... (x) Z[a_r] with basis the monomials a_1^e_1 ... a_r^e_r,
/// the first generator's exponent varying fastest. Automorphisms, subfields
/// and the conjugation are attached afterwards by the caller.
struct TensorFieldBuilder {
  std::string name;
  std::vector<GeneratorSpec> generators;

  struct AutoSpec {
    std::string name;
    int order;
    std::string fixed;
    /// images of the generators, computed in the bare field
    std::function<std::vector<FieldElement>(const NumberField&, const std::vector<FieldElement>&)> images;
  };
  std::vector<AutoSpec> automorphisms;
  std::vector<Subfield> subfields;
  std::string conjugation;

  NumberField build() const;
};

/// Names: rationals, gaussian, eisenstein, gaussian_sqrt5, eisenstein_omega7,
/// gaussian_theta15. Every preset is exported to JSON and reloaded through
/// load_field, so it passes the same validation as user configs.
NumberField field_preset(const std::string& name);
std::vector<std::string> field_preset_names();

/// Z[x]/(g) for a monic integer g (no automorphisms).
NumberField monogenic_order(const std::string& name, const std::vector<long>& min_poly);

}  // namespace petit
