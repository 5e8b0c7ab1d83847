#include "petit/config/job.hpp"

#include <algorithm>
#include <map>

#include "petit/number_field/field_io.hpp"
#include "petit/number_field/presets.hpp"
#include "petit/util/error.hpp"

namespace petit {

using json = nlohmann::json;

namespace {

struct Preset {
  const char* description;
  const char* text;
};

// Field bases: gaussian_sqrt5 = [1, i, phi, i phi]; eisenstein_omega7 =
// [1, w, th, w th, th^2, w th^2]; gaussian_theta15 = [1, i, th, ..., i th^3].
const std::map<std::string, Preset>& presets() {
  static const std::map<std::string, Preset> table = {
      {"ex_inert",
       {"(Q(i, sqrt5)/Q(i), sigma, phi) mod <1+i>, L = 3 parity coset code; sigma maps sqrt5 to -sqrt5 and fixes Q(i) (the map i to -i would not fix the center)",
        R"({"field": "gaussian_sqrt5",
            "algebra": {"kind": "cyclic", "sigma": "sigma", "center": "F", "d": [0, 0, 1, 0], "m": 2},
            "ideal": {"subring": "F", "generators": [[1, 1, 0, 0]], "label": "<1+i>"},
            "code": {"L": 3, "outer": "parity", "box": 2, "box_coordinates": [0, 2], "alpha": [1, 1, 0, 0]}})"}},
      {"ex_inert_square",
       {"ex_inert modulo <1+i>^2",
        R"({"field": "gaussian_sqrt5",
            "algebra": {"kind": "cyclic", "sigma": "sigma", "center": "F", "d": [0, 0, 1, 0], "m": 2},
            "ideal": {"subring": "F", "generators": [[1, 1, 0, 0]], "exponent": 2, "label": "<1+i>^2"}})"}},
      {"ex_inert_cube",
       {"ex_inert modulo <1+i>^3",
        R"({"field": "gaussian_sqrt5",
            "algebra": {"kind": "cyclic", "sigma": "sigma", "center": "F", "d": [0, 0, 1, 0], "m": 2},
            "ideal": {"subring": "F", "generators": [[1, 1, 0, 0]], "exponent": 3, "label": "<1+i>^3"}})"}},
      {"center_inert",
       {"ex_inert algebra modulo <3>, inert in Z[i]",
        R"({"field": "gaussian_sqrt5",
            "algebra": {"kind": "cyclic", "sigma": "sigma", "center": "F", "d": [0, 0, 1, 0], "m": 2},
            "ideal": {"subring": "F", "generators": [[3, 0, 0, 0]], "label": "<3>"}})"}},
      {"center_split",
       {"ex_inert algebra modulo <5> = (2+i)(2-i) in Z[i]",
        R"({"field": "gaussian_sqrt5",
            "algebra": {"kind": "cyclic", "sigma": "sigma", "center": "F", "d": [0, 0, 1, 0], "m": 2},
            "ideal": {"subring": "F", "generators": [[5, 0, 0, 0]], "label": "<5>"}})"}},
      {"cubic_omega7",
       {"(Q(w, th7)/Q(w), sigma, th) mod <2>",
        R"({"field": "eisenstein_omega7",
            "algebra": {"kind": "cyclic", "sigma": "sigma", "center": "F", "d": [0, 0, 1, 0, 0, 0], "m": 3},
            "ideal": {"subring": "F", "generators": [[2, 0, 0, 0, 0, 0]], "label": "<2>"}})"}},
      {"quartic_omega15",
       {"(Q(i, th15)/Q(i), sigma, th) mod <1+i>",
        R"({"field": "gaussian_theta15",
            "algebra": {"kind": "cyclic", "sigma": "sigma", "center": "F", "d": [0, 0, 1, 0, 0, 0, 0, 0], "m": 4},
            "ideal": {"subring": "F", "generators": [[1, 1, 0, 0, 0, 0, 0, 0]], "label": "<1+i>"}})"}},
      {"gaussian_conj_inert",
       {"(Q(i)/Q, conj, i) mod <3>",
        R"({"field": "gaussian",
            "algebra": {"kind": "cyclic", "sigma": "conj", "center": "Q", "d": [0, 1], "m": 2},
            "ideal": {"subring": "Q", "generators": [[3, 0]], "label": "<3>"}})"}},
      {"gaussian_conj_split",
       {"(Q(i)/Q, conj, i) mod <5>, 5 splits in Z[i]",
        R"({"field": "gaussian",
            "algebra": {"kind": "cyclic", "sigma": "conj", "center": "Q", "d": [0, 1], "m": 2},
            "ideal": {"subring": "Q", "generators": [[5, 0]], "label": "<5>"}})"}},
      {"gaussian_conj_product",
       {"(Q(i)/Q, conj, i) mod <21> = <3><7>",
        R"({"field": "gaussian",
            "algebra": {"kind": "cyclic", "sigma": "conj", "center": "Q", "d": [0, 1], "m": 2},
            "ideal": {"subring": "Q", "generators": [[21, 0]], "label": "<21>"}})"}},
      {"iterated_tau_omega",
       {"(D, sigma, w) with D = (Q(w, th7)/Q(th7), rho, -1), mod <2>",
        R"({"field": "eisenstein_omega7",
            "algebra": {"kind": "iterated", "rho": "rho", "n": 2, "c": [-1, 0, 0, 0, 0, 0],
                        "sigma": "sigma", "m": 3, "d": [0, 1, 0, 0, 0, 0], "center": "Q"},
            "ideal": {"subring": "Q", "generators": [[2, 0, 0, 0, 0, 0]], "label": "<2>"}})"}},
      {"iterated_q_squared",
       {"iterated_tau_omega modulo <4>",
        R"({"field": "eisenstein_omega7",
            "algebra": {"kind": "iterated", "rho": "rho", "n": 2, "c": [-1, 0, 0, 0, 0, 0],
                        "sigma": "sigma", "m": 3, "d": [0, 1, 0, 0, 0, 0], "center": "Q"},
            "ideal": {"subring": "Q", "generators": [[4, 0, 0, 0, 0, 0]], "label": "<4>"}})"}},
  };
  return table;
}

const json& need(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object() || !obj.contains(key)) throw ConfigError(path + "/" + key + ": missing");
  return obj.at(key);
}

template <class T>
T get_as(const json& v, const std::string& path) {
  try {
    return v.get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

std::string opt_string(const json& obj, const char* key, const std::string& path) {
  return obj.contains(key) ? get_as<std::string>(obj.at(key), path + "/" + key) : std::string();
}

void parse_cyclic(Job& job, const json& a) {
  const NumberField& k = *job.field;
  CyclicOrderSpec spec;
  spec.field = job.field;
  spec.sigma = get_as<std::string>(need(a, "sigma", "/algebra"), "/algebra/sigma");
  if (!k.has_automorphism(spec.sigma)) throw ConfigError("/algebra/sigma: unknown automorphism '" + spec.sigma + "'");
  spec.delta = opt_string(a, "delta", "/algebra");
  spec.center = opt_string(a, "center", "/algebra");
  if (a.contains("modulus")) {
    const json& f = a.at("modulus");
    if (!f.is_array()) throw ConfigError("/algebra/modulus: expected a list of coefficients");
    for (std::size_t i = 0; i < f.size(); ++i)
      spec.modulus.push_back(parse_element(k, f[i], "/algebra/modulus/" + std::to_string(i)));
  } else {
    const FieldElement d = parse_element(k, need(a, "d", "/algebra"), "/algebra/d");
    const int m = get_as<int>(need(a, "m", "/algebra"), "/algebra/m");
    if (m < 2) throw ConfigError("/algebra/m: degree must be at least 2");
    spec.modulus.assign(static_cast<std::size_t>(m + 1), k.zero());
    spec.modulus[0] = k.neg(d);
    spec.modulus.back() = k.one();
  }
  job.cyclic = std::move(spec);
}

void parse_iterated(Job& job, const json& a) {
  const NumberField& k = *job.field;
  IteratedOrderSpec spec;
  spec.field = job.field;
  spec.rho = get_as<std::string>(need(a, "rho", "/algebra"), "/algebra/rho");
  spec.sigma = get_as<std::string>(need(a, "sigma", "/algebra"), "/algebra/sigma");
  for (const auto& [key, name] : {std::pair{"rho", spec.rho}, std::pair{"sigma", spec.sigma}})
    if (!k.has_automorphism(name)) throw ConfigError(std::string("/algebra/") + key + ": unknown automorphism '" + name + "'");
  spec.n = get_as<int>(need(a, "n", "/algebra"), "/algebra/n");
  spec.m = get_as<int>(need(a, "m", "/algebra"), "/algebra/m");
  spec.c = parse_element(k, need(a, "c", "/algebra"), "/algebra/c");
  spec.d = parse_element(k, need(a, "d", "/algebra"), "/algebra/d");
  spec.center = opt_string(a, "center", "/algebra");
  job.iterated = std::move(spec);
}

CodeConfig parse_code(const Job& job, const json& c) {
  const NumberField& k = *job.field;
  CodeConfig code;
  if (c.contains("L")) code.length = get_as<int>(c.at("L"), "/code/L");
  if (code.length < 1) throw ConfigError("/code/L: length must be positive");
  if (c.contains("outer")) code.outer = get_as<std::string>(c.at("outer"), "/code/outer");
  if (code.outer != "parity" && code.outer != "repetition" && code.outer != "free" && code.outer != "prescribed")
    throw ConfigError("/code/outer: expected parity, repetition, free or prescribed, got '" + code.outer + "'");
  if (c.contains("base_code")) {
    const json& rows = c.at("base_code");
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const std::string path = "/code/base_code/" + std::to_string(r);
      if (!rows[r].is_array() || rows[r].size() != static_cast<std::size_t>(code.length))
        throw ConfigError(path + ": expected " + std::to_string(code.length) + " entries");
      std::vector<FieldElement> row;
      for (std::size_t l = 0; l < rows[r].size(); ++l) row.push_back(parse_element(k, rows[r][l], path + "/" + std::to_string(l)));
      code.base_code.push_back(std::move(row));
    }
  }
  if (code.outer == "prescribed" && code.base_code.empty()) throw ConfigError("/code/base_code: required for a prescribed outer code");
  if (c.contains("box")) code.box = get_as<int>(c.at("box"), "/code/box");
  if (code.box < 0) throw ConfigError("/code/box: must be nonnegative");
  if (c.contains("box_coordinates")) {
    code.box_coordinates = get_as<std::vector<std::size_t>>(c.at("box_coordinates"), "/code/box_coordinates");
    for (auto i : code.box_coordinates)
      if (i >= k.degree()) throw ConfigError("/code/box_coordinates: index " + std::to_string(i) + " out of range");
  }
  code.embedding = opt_string(c, "embedding", "/code");
  if (!code.embedding.empty()) {
    bool found = false;
    for (const auto& e : k.embeddings()) found = found || e.name == code.embedding;
    if (!found) throw ConfigError("/code/embedding: unknown embedding '" + code.embedding + "'");
  }
  if (c.contains("alpha")) code.alpha = parse_element(k, c.at("alpha"), "/code/alpha");
  return code;
}

}  // namespace

Job parse_job(const json& config) {
  if (!config.is_object()) throw ConfigError("/: expected an object");
  Job job;
  job.source = config;
  job.name = config.contains("name") ? get_as<std::string>(config.at("name"), "/name") : "job";
  job.description = opt_string(config, "description", "");

  const json& f = need(config, "field", "");
  if (f.is_string()) {
    const auto name = f.get<std::string>();
    const auto names = field_preset_names();
    if (std::find(names.begin(), names.end(), name) == names.end()) throw ConfigError("/field: unknown field preset '" + name + "'");
    job.field = std::make_shared<const NumberField>(field_preset(name));
  } else {
    try {
      job.field = std::make_shared<const NumberField>(load_field(f));
    } catch (const Error& e) {
      throw ConfigError(std::string("/field: ") + e.what());
    }
  }

  const json& a = need(config, "algebra", "");
  const std::string kind = a.contains("kind") ? get_as<std::string>(a.at("kind"), "/algebra/kind") : "cyclic";
  if (kind == "cyclic")
    parse_cyclic(job, a);
  else if (kind == "iterated")
    parse_iterated(job, a);
  else
    throw ConfigError("/algebra/kind: expected cyclic or iterated, got '" + kind + "'");

  if (config.contains("ideal")) {
    try {
      job.ideal = parse_ideal(*job.field, config.at("ideal"), "/ideal");
    } catch (const ConfigError&) {
      throw;
    } catch (const Error& e) {
      throw ConfigError(std::string("/ideal: ") + e.what());
    }
  }
  if (config.contains("code")) job.code = parse_code(job, config.at("code"));
  if (config.contains("budget")) job.budget = get_as<std::uint64_t>(config.at("budget"), "/budget");
  if (job.budget == 0) throw ConfigError("/budget: must be positive");
  if (config.contains("seed")) job.seed = get_as<std::uint64_t>(config.at("seed"), "/seed");
  return job;
}

Job parse_job_text(const std::string& text, const std::string& origin) {
  json config;
  try {
    config = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(origin + ": " + e.what());
  }
  try {
    return parse_job(config);
  } catch (const ConfigError& e) {
    throw ConfigError(origin + " " + e.what());
  }
}

std::vector<std::string> job_preset_names() {
  std::vector<std::string> out;
  for (const auto& [name, p] : presets()) out.push_back(name);
  return out;
}

json job_preset(const std::string& name) {
  auto it = presets().find(name);
  if (it == presets().end()) throw ConfigError("unknown preset '" + name + "'");
  json j = json::parse(it->second.text);
  j["name"] = name;
  j["description"] = it->second.description;
  return j;
}

std::string job_preset_description(const std::string& name) {
  auto it = presets().find(name);
  if (it == presets().end()) throw ConfigError("unknown preset '" + name + "'");
  return it->second.description;
}

std::shared_ptr<const NaturalOrder> make_cyclic_order(const Job& job) {
  if (!job.cyclic) throw SpecMismatch("job '" + job.name + "' is not a cyclic algebra");
  return std::make_shared<const NaturalOrder>(*job.cyclic);
}

std::shared_ptr<const IteratedOrder> make_iterated_order(const Job& job) {
  if (!job.iterated) throw SpecMismatch("job '" + job.name + "' is not an iterated algebra");
  return std::make_shared<const IteratedOrder>(*job.iterated);
}

}  // namespace petit
