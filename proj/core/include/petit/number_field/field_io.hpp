#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "petit/number_field/ideal.hpp"
#include "petit/number_field/number_field.hpp"

namespace petit {

/// Field-spec format (JSON):
///   name, degree, basis: [labels]
///   mul_table: [[i, j, [c_0..c_{n-1}]], ...]   b_i*b_j, 0-based, each unordered pair once;
///              products with b_0 may be omitted
///   automorphisms: {name: {images: [[coords], ...], order, fixed}}
///   derivations:   {name: {automorphism, images: [[coords], ...]}}
///   subfields:     {name: [basis indices]}
///   embeddings:    {name: [[re, im], ...]}      first entry is the default
///   conjugation:   automorphism name
/// Coordinates are integers or "n/d" strings.
NumberField load_field(const nlohmann::json& spec);
NumberField load_field_text(const std::string& text);

nlohmann::json field_to_json(const NumberField& k);

FieldElement parse_element(const NumberField& k, const nlohmann::json& coords, const std::string& where);
nlohmann::json element_to_json(const FieldElement& x);

/// {subring, generators: [[coords]...], exponent?}
IntegralIdeal parse_ideal(const NumberField& k, const nlohmann::json& spec, const std::string& where);

}  // namespace petit
