#include "petit/number_field/field_io.hpp"

#include <algorithm>

#include "petit/util/error.hpp"

namespace petit {

using nlohmann::json;

namespace {

BigRational parse_scalar(const json& v, const std::string& where) {
  if (v.is_number_integer()) return BigRational(BigInt(std::to_string(v.get<long long>())));
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const ConfigError& e) {
      throw ConfigError(where + ": " + e.what());
    }
  }
  throw ConfigError(where + ": expected an integer or a rational string");
}

const json& require(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) throw ConfigError(where + ": missing field '" + key + "'");
  return obj.at(key);
}

json scalar_to_json(const BigRational& r) {
  if (is_integer(r) && r.get_num().fits_slong_p()) return json(r.get_num().get_si());
  return json(r.get_str());
}

}  // namespace

FieldElement parse_element(const NumberField& k, const json& coords, const std::string& where) {
  if (!coords.is_array() || coords.size() != k.degree())
    throw ConfigError(where + ": expected " + std::to_string(k.degree()) + " coordinates");
  FieldElement e = k.zero();
  for (std::size_t i = 0; i < k.degree(); ++i) e.coords[i] = parse_scalar(coords[i], where + "[" + std::to_string(i) + "]");
  return e;
}

json element_to_json(const FieldElement& x) {
  json out = json::array();
  for (const auto& c : x.coords) out.push_back(scalar_to_json(c));
  return out;
}

NumberField load_field(const json& spec) {
  const std::string name = spec.value("name", std::string("field"));
  const std::string where = "field '" + name + "'";
  const json& basis_j = require(spec, "basis", where);
  if (!basis_j.is_array() || basis_j.empty()) throw ConfigError(where + ".basis: expected a nonempty list");
  std::vector<std::string> basis;
  for (const auto& b : basis_j) basis.push_back(b.get<std::string>());
  const std::size_t n = basis.size();
  if (spec.contains("degree") && spec.at("degree").get<std::size_t>() != n)
    throw ConfigError(where + ".degree does not match the basis length");

  std::vector<std::vector<std::vector<BigInt>>> table(n, std::vector<std::vector<BigInt>>(n));
  for (const auto& entry : require(spec, "mul_table", where)) {
    const std::string ew = where + ".mul_table entry";
    if (!entry.is_array() || entry.size() != 3) throw ConfigError(ew + ": expected [i, j, coords]");
    const auto i = entry[0].get<std::size_t>(), j = entry[1].get<std::size_t>();
    if (i >= n || j >= n) throw ConfigError(ew + ": index out of range");
    if (!entry[2].is_array() || entry[2].size() != n) throw ConfigError(ew + ": wrong coordinate count");
    std::vector<BigInt> c;
    for (const auto& v : entry[2]) {
      if (!v.is_number_integer()) throw ConfigError(ew + ": structure constants must be integers");
      c.emplace_back(std::to_string(v.get<long long>()));
    }
    if ((!table[i][j].empty() && table[i][j] != c) || (!table[j][i].empty() && table[j][i] != c))
      throw AxiomViolation(ew + ": conflicting products for (b" + std::to_string(i + 1) + ", b" + std::to_string(j + 1) + ")");
    table[i][j] = c;
    table[j][i] = c;
  }
  for (std::size_t j = 0; j < n; ++j)
    if (table[0][j].empty()) {
      table[0][j].assign(n, BigInt(0));
      table[0][j][j] = 1;
      table[j][0] = table[0][j];
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (table[i][j].empty())
        throw ConfigError(where + ".mul_table: missing product (b" + std::to_string(i + 1) + ", b" + std::to_string(j + 1) + ")");

  std::vector<Subfield> subfields;
  if (spec.contains("subfields"))
    for (const auto& [sname, idx] : spec.at("subfields").items())
      subfields.push_back(Subfield{sname, idx.get<std::vector<std::size_t>>()});

  // A bare field (no automorphisms) converts coordinate lists for the rest.
  NumberField bare(name, basis, table, {}, {}, subfields, {});
  std::vector<FieldAutomorphism> autos;
  if (spec.contains("automorphisms"))
    for (const auto& [aname, a] : spec.at("automorphisms").items()) {
      const std::string aw = where + ".automorphisms." + aname;
      FieldAutomorphism fa;
      fa.name = aname;
      const json& imgs = require(a, "images", aw);
      if (!imgs.is_array() || imgs.size() != n) throw ConfigError(aw + ".images: expected " + std::to_string(n) + " images");
      for (std::size_t i = 0; i < n; ++i) fa.images.push_back(parse_element(bare, imgs[i], aw + ".images[" + std::to_string(i) + "]"));
      fa.order = require(a, "order", aw).get<int>();
      fa.fixed_subfield = a.value("fixed", std::string());
      autos.push_back(std::move(fa));
    }
  std::vector<FieldDerivation> ders;
  if (spec.contains("derivations"))
    for (const auto& [dname, d] : spec.at("derivations").items()) {
      const std::string dw = where + ".derivations." + dname;
      FieldDerivation fd;
      fd.name = dname;
      fd.automorphism = require(d, "automorphism", dw).get<std::string>();
      const json& imgs = require(d, "images", dw);
      if (!imgs.is_array() || imgs.size() != n) throw ConfigError(dw + ".images: expected " + std::to_string(n) + " images");
      for (std::size_t i = 0; i < n; ++i) fd.images.push_back(parse_element(bare, imgs[i], dw + ".images[" + std::to_string(i) + "]"));
      ders.push_back(std::move(fd));
    }
  std::vector<Embedding> embs;
  if (spec.contains("embeddings"))
    for (const auto& [ename, imgs] : spec.at("embeddings").items()) {
      Embedding e;
      e.name = ename;
      for (const auto& z : imgs) {
        if (!z.is_array() || z.size() != 2) throw ConfigError(where + ".embeddings." + ename + ": expected [re, im] pairs");
        e.images.emplace_back(z[0].get<double>(), z[1].get<double>());
      }
      embs.push_back(std::move(e));
    }
  if (spec.contains("default_embedding")) {
    const auto want = spec.at("default_embedding").get<std::string>();
    auto it = std::find_if(embs.begin(), embs.end(), [&](const Embedding& e) { return e.name == want; });
    if (it == embs.end()) throw ConfigError(where + ": unknown default_embedding '" + want + "'");
    std::rotate(embs.begin(), it, it + 1);
  }
  return NumberField(name, std::move(basis), std::move(table), std::move(autos), std::move(ders), std::move(subfields),
                     std::move(embs), spec.value("conjugation", std::string()));
}

NumberField load_field_text(const std::string& text) {
  json spec;
  try {
    spec = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("field spec is not valid JSON: ") + e.what());
  }
  try {
    return load_field(spec);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("field spec has a malformed value: ") + e.what());
  }
}

json field_to_json(const NumberField& k) {
  const std::size_t n = k.degree();
  json out;
  out["name"] = k.name();
  out["degree"] = n;
  out["basis"] = k.basis_labels();
  json table = json::array();
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      json c = json::array();
      for (std::size_t l = 0; l < n; ++l) c.push_back(k.structure_constant(i, j, l).get_si());
      table.push_back(json::array({i, j, c}));
    }
  out["mul_table"] = table;
  json subs = json::object();
  for (const auto& s : k.subfields()) subs[s.name] = s.basis_indices;
  out["subfields"] = subs;
  json autos = json::object();
  for (const auto& a : k.automorphisms()) {
    json imgs = json::array();
    for (const auto& img : a.images) imgs.push_back(element_to_json(img));
    json aj = {{"images", imgs}, {"order", a.order}};
    if (!a.fixed_subfield.empty()) aj["fixed"] = a.fixed_subfield;
    autos[a.name] = aj;
  }
  out["automorphisms"] = autos;
  if (!k.derivations().empty()) {
    json ders = json::object();
    for (const auto& d : k.derivations()) {
      json imgs = json::array();
      for (const auto& img : d.images) imgs.push_back(element_to_json(img));
      ders[d.name] = {{"automorphism", d.automorphism}, {"images", imgs}};
    }
    out["derivations"] = ders;
  }
  if (k.has_embedding()) {
    json embs = json::object();
    for (const auto& e : k.embeddings()) {
      json imgs = json::array();
      for (const auto& z : e.images) imgs.push_back(json::array({z.real(), z.imag()}));
      embs[e.name] = imgs;
    }
    out["embeddings"] = embs;
    out["default_embedding"] = k.embeddings()[0].name;
  }
  if (!k.conjugation().empty()) out["conjugation"] = k.conjugation();
  return out;
}

IntegralIdeal parse_ideal(const NumberField& k, const json& spec, const std::string& where) {
  IntegralIdeal ideal;
  ideal.subring = spec.value("subring", std::string());
  ideal.label = spec.value("label", std::string());
  const json& gens = require(spec, "generators", where);
  if (!gens.is_array()) throw ConfigError(where + ".generators: expected a list");
  for (std::size_t i = 0; i < gens.size(); ++i)
    ideal.generators.push_back(parse_element(k, gens[i], where + ".generators[" + std::to_string(i) + "]"));
  validate_ideal(k, ideal);
  if (ideal.label.empty()) {
    for (std::size_t i = 0; i < ideal.generators.size(); ++i)
      ideal.label += (i ? ", " : "") + k.to_string(ideal.generators[i]);
    ideal.label = "<" + ideal.label + ">";
  }
  const int exponent = spec.value("exponent", 1);
  if (exponent != 1) ideal = ideal_power(k, ideal, exponent);
  return ideal;
}

}  // namespace petit
