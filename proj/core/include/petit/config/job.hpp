#pragma once

#include <cstdint>
#include <memory>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "petit/number_field/ideal.hpp"
#include "petit/order/natural_order.hpp"

namespace petit {

/// Outer code and enumeration box of a coset-coding job.
struct CodeConfig {
  int length = 3;                                     ///< L
  std::string outer = "parity";                       ///< parity | repetition | free | prescribed
  std::vector<std::vector<FieldElement>> base_code;   ///< generator rows over the coefficient quotient (prescribed)
  int box = 2;                                        ///< coordinates range over [-box, box]
  std::vector<std::size_t> box_coordinates;           ///< basis indices varied per coefficient; empty = all
  std::string embedding;                              ///< empty = default embedding
  std::optional<FieldElement> alpha;                  ///< generator of J; defaults to the ideal generator
};

/// A fully resolved job: field, algebra, ideal, optional code block.
struct Job {
  std::string name;
  std::string description;
  std::shared_ptr<const NumberField> field;
  std::optional<CyclicOrderSpec> cyclic;
  std::optional<IteratedOrderSpec> iterated;
  std::optional<IntegralIdeal> ideal;
  std::optional<CodeConfig> code;
  std::uint64_t budget = 1'000'000;
  std::uint64_t seed = 1;
  nlohmann::json source;  ///< the config the job was parsed from

  bool is_iterated() const { return iterated.has_value(); }
};

/// Job format (JSON):
///   name, description
///   field:   preset name or inline field spec
///   algebra: {kind: "cyclic", sigma, delta?, center?, modulus: [[coords]...]}   f low to high
///            {kind: "cyclic", sigma, center?, d: [coords], m}                 f = t^m - d
///            {kind: "iterated", rho, n, c, sigma, m, d, center?}
///   ideal:   {subring?, generators: [[coords]...], exponent?, label?}
///   code:    {L, outer, base_code?, box, box_coordinates?, embedding?, alpha?}
///   budget, seed
/// Errors name the offending field as a JSON path.
Job parse_job(const nlohmann::json& config);
Job parse_job_text(const std::string& text, const std::string& origin);

std::vector<std::string> job_preset_names();
nlohmann::json job_preset(const std::string& name);
std::string job_preset_description(const std::string& name);

// Constructed objects for a job.
std::shared_ptr<const NaturalOrder> make_cyclic_order(const Job& job);
std::shared_ptr<const IteratedOrder> make_iterated_order(const Job& job);

}  // namespace petit
