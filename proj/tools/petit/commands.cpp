#include "commands.hpp"

#include <random>
#include <sstream>

#include "petit/algebra/analysis.hpp"
#include "petit/coding/coset_code.hpp"
#include "petit/exact/determinant.hpp"
#include "petit/number_field/field_io.hpp"

namespace petit::cli {

using json = nlohmann::json;

namespace {

std::string finite_name(std::uint64_t card, bool field) {
  return field ? "F" + std::to_string(card) : std::to_string(card) + " elements";
}

std::string center_subfield(const Job& job) {
  if (job.cyclic) {
    if (!job.cyclic->center.empty()) return job.cyclic->center;
    return job.field->automorphism(job.cyclic->sigma).fixed_subfield;
  }
  return job.iterated->center;
}

json algebra_record(const Job& job, const NaturalOrder& o) {
  std::string reason;
  const auto status = o.division_status(&reason);
  return {{"type", "algebra"},
          {"name", job.name},
          {"kind", "cyclic"},
          {"field", o.field().name()},
          {"sigma", o.spec().sigma},
          {"center", center_subfield(job)},
          {"modulus", o.algebra().ring().to_string(o.algebra().modulus())},
          {"degree", o.degree()},
          {"rank", o.rank()},
          {"division_over_number_field", to_string(status)},
          {"reason", reason}};
}

json algebra_record(const Job& job, const IteratedOrder& o) {
  const auto& s = o.spec();
  return {{"type", "algebra"},
          {"name", job.name},
          {"kind", "iterated"},
          {"field", o.field().name()},
          {"rho", s.rho},
          {"n", s.n},
          {"c", o.field().to_string(s.c)},
          {"sigma", s.sigma},
          {"m", s.m},
          {"d", o.field().to_string(s.d)},
          {"center", s.center},
          {"rank", o.rank()}};
}

json quotient_record(const QuotientAlgebra& q) {
  const auto fix = fixed_subring(q.sigma_bar);
  return {{"type", "quotient"},
          {"ideal", q.ideal.label},
          {"experimental_ideal", q.experimental_ideal},
          {"elements", q.cardinality()},
          {"coefficient_ring", q.coefficients.cardinality()},
          {"coefficient_moduli", q.coefficients.moduli()},
          {"coefficient_field", q.coefficients.is_field()},
          {"sigma_bar_order", q.sigma_bar.order()},
          {"fixed_ring", fix.cardinality()},
          {"fixed_ring_is_field", fix.is_field},
          {"modulus_bar", q.target.ring().to_string(q.target.modulus())}};
}

json quotient_record(const IteratedQuotient& q) {
  return {{"type", "quotient"},
          {"ideal", q.ideal.label},
          {"elements", q.cardinality()},
          {"coefficient_ring", q.coefficients.cardinality()},
          {"coefficient_field", q.coefficients.is_field()},
          {"fixed_ring_sigma", fixed_subring(q.sigma_bar).cardinality()},
          {"fixed_ring_rho", fixed_subring(q.rho_bar).cardinality()},
          {"modulus_bar", q.target.ring().to_string(q.target.modulus())}};
}

template <class R>
Records finite_analysis(const PetitAlgebra<R>& a, const Job& job, const RunOptions& opt) {
  Records out;
  FiniteAlgebra<R> view(a);
  std::string summary = (view.cardinality() ? std::to_string(view.cardinality()) : std::string("2^64+")) + " elements";

  const bool assoc = a.is_associative();
  DivisionReport div;
  try {
    div = analyze_division(a, 65536, job.budget * 10);
  } catch (const BudgetExceeded& e) {
    div.method = std::string("skipped: ") + e.what();
  }
  out.push_back({{"type", "flags"},
                 {"associative", assoc},
                 {"division", to_string(div.status)},
                 {"method", div.method},
                 {"irreducible", div.irreducible ? json(*div.irreducible) : json(nullptr)},
                 {"right_factor", div.right_factor},
                 {"right_maps_regular", div.right_maps_regular ? json(*div.right_maps_regular) : json(nullptr)},
                 {"left_maps_regular", div.left_maps_regular ? json(*div.left_maps_regular) : json(nullptr)},
                 {"zero_divisor", div.zero_divisor},
                 {"consistent", div.consistent}});
  if (div.status == DivisionStatus::Proved) {
    summary += "; division";
  } else if (div.status == DivisionStatus::Refuted) {
    if (div.irreducible && !*div.irreducible) summary += "; " + a.ring().to_string(a.modulus()) + " reducible";
    summary += "; zero divisors";
  } else {
    summary += "; division unknown";
  }
  if (assoc) summary += "; associative";

  try {
    const auto nuc = nuclei(a, job.budget, opt.seed);
    auto sub = [](const SubspaceReport& r) {
      return json{{"cardinality", r.cardinality}, {"mode", to_string(r.mode)}, {"samples", r.samples}};
    };
    out.push_back({{"type", "nuclei"},
                   {"left", sub(nuc.left)},
                   {"middle", sub(nuc.middle)},
                   {"right", sub(nuc.right)},
                   {"nucleus", sub(nuc.nucleus)},
                   {"commutative", sub(nuc.commutative)},
                   {"center", sub(nuc.center)},
                   {"right_matches_modulus", nuc.right_checked ? json(nuc.right_matches_modulus) : json(nullptr)}});
    const bool fields = div.status == DivisionStatus::Proved;
    if (nuc.left.cardinality == nuc.middle.cardinality && nuc.middle.cardinality == nuc.right.cardinality)
      summary += "; nuclei " + finite_name(nuc.nucleus.cardinality, fields);
    else
      summary += "; nuclei " + std::to_string(nuc.left.cardinality) + "/" + std::to_string(nuc.middle.cardinality) + "/" +
                 std::to_string(nuc.right.cardinality);
    summary += "; center " + finite_name(nuc.center.cardinality, fields);
  } catch (const Error& e) {
    out.push_back({{"type", "nuclei"}, {"skipped", e.what()}});
  }

  try {
    const auto lat = two_sided_ideals(a, job.budget);
    json cards = json::array();
    for (const auto& id : lat.ideals) cards.push_back(id.cardinality);
    out.push_back({{"type", "ideals"}, {"count", lat.ideals.size()}, {"cardinalities", cards}, {"trivial_only", lat.only_trivial()}});
    summary += lat.only_trivial() ? "; ideals: trivial only" : "; ideals: " + std::to_string(lat.ideals.size());
  } catch (const BudgetExceeded& e) {
    out.push_back({{"type", "ideals"}, {"skipped", e.what()}});
    summary += "; ideals: over budget";
  } catch (const UnsupportedCoefficientRing& e) {
    out.push_back({{"type", "ideals"}, {"skipped", e.what()}});
    summary += "; ideals: not computed";
  }
  out.push_back({{"type", "summary"}, {"text", summary}});
  return out;
}

Records component_records(const QuotientAlgebra& q, const Job& job) {
  Records out;
  const auto comps = decompose_quotient(q, job.budget);
  for (const auto& c : comps)
    out.push_back({{"type", "component"},
                   {"label", c.label},
                   {"center_cardinality", c.center_cardinality},
                   {"coefficient_ring", c.coefficient.ring.cardinality()},
                   {"coefficient_field", c.coefficient.ring.is_field()},
                   {"elements", c.cardinality()},
                   {"slots", c.slots},
                   {"slots_cyclic", c.slots_cyclic},
                   {"sigma_bar_order", c.sigma_bar.order()},
                   {"modulus_bar", c.algebra.ring().to_string(c.algebra.modulus())}});
  out.push_back({{"type", "decomposition"}, {"components", comps.size()}, {"elements", q.cardinality()}});
  return out;
}

// Inner algebra of the iterated quotient and determinant measurements.
Records iterated_extras(const IteratedQuotient& q, const RunOptions& opt) {
  Records out;
  const auto& d = q.inner;
  std::string witness;
  for (std::uint64_t i = 1; i < d.cardinality() && witness.empty(); ++i) {
    const auto x = d.element(i);
    if (d.base().is_zero(det_exact(d.base(), d.right_matrix(x)))) witness = d.to_string(x);
  }
  out.push_back({{"type", "inner"},
                 {"cardinality", d.cardinality()},
                 {"division", witness.empty()},
                 {"split", !witness.empty()},
                 {"zero_divisor", witness}});

  const auto fix_sigma = fixed_subring(q.sigma_bar);
  const auto fix_rho = fixed_subring(q.rho_bar);
  std::vector<bool> in_sigma(q.coefficients.cardinality()), in_rho(q.coefficients.cardinality());
  for (auto e : fix_sigma.elements) in_sigma[e] = true;
  for (auto e : fix_rho.elements) in_rho[e] = true;
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<std::uint32_t> u(0, static_cast<std::uint32_t>(q.coefficients.cardinality() - 1));
  const int samples = 200;
  int nonzero = 0, sigma_hits = 0, rho_hits = 0;
  for (int s = 0; s < samples; ++s) {
    IteratedQuotientPetit::Element x;
    for (int j = 0; j < q.target.degree(); ++j) {
      InnerQuotient::Element dj;
      for (int i = 0; i < d.degree(); ++i) dj.push_back(u(rng));
      x.push_back(std::move(dj));
    }
    const auto det = det_exact(q.coefficients, iterated_matrix(q.target, x));
    nonzero += det != 0;
    sigma_hits += in_sigma[det];
    rho_hits += in_rho[det];
  }
  out.push_back({{"type", "determinants"},
                 {"samples", samples},
                 {"nonzero", nonzero},
                 {"in_fixed_ring_sigma", sigma_hits},
                 {"in_fixed_ring_rho", rho_hits},
                 {"fixed_ring_sigma", fix_sigma.cardinality()},
                 {"fixed_ring_rho", fix_rho.cardinality()}});
  return out;
}

OuterCode build_outer(const QuotientAlgebra& q, const CodeConfig& code, std::uint64_t budget) {
  const auto s = symbol_space(q);
  const auto len = static_cast<std::size_t>(code.length);
  if (code.outer == "parity") return parity_code(s, len, budget);
  if (code.outer == "repetition") return repetition_code(s, len, budget);
  if (code.outer == "free") return free_code(s, len, budget);
  std::vector<std::vector<FiniteQuotientRing::Element>> base;
  for (const auto& row : code.base_code) {
    std::vector<FiniteQuotientRing::Element> r;
    for (const auto& e : row) r.push_back(q.coefficients.project(e));
    base.push_back(std::move(r));
  }
  return prescribed_distance_code(q, base, len, budget);
}

FieldElement code_alpha(const Job& job) {
  if (job.code->alpha) return *job.code->alpha;
  if (job.ideal->generators.size() != 1)
    throw ConfigError("/code/alpha: the bound needs a principal ideal (alpha); the ideal has " +
                      std::to_string(job.ideal->generators.size()) + " generators");
  return job.ideal->generators[0];
}

struct CodeSetup {
  std::shared_ptr<const NaturalOrder> order;
  QuotientAlgebra q;
  OuterCode outer;
  std::size_t embedding;
};

CodeSetup code_setup(const Job& job) {
  if (!job.code) throw ConfigError("/code: missing");
  if (!job.ideal) throw ConfigError("/ideal: missing");
  if (job.is_iterated()) throw ConfigError("/algebra/kind: coset codebooks are produced for cyclic algebras");
  auto order = make_cyclic_order(job);
  auto q = reduce_mod(order, *job.ideal, job.budget);
  auto outer = build_outer(q, *job.code, job.budget);
  const auto emb = embedding_index(order->field(), job.code->embedding);
  return {order, std::move(q), std::move(outer), emb};
}

json box_record(const CodeSetup& cs, const Job& job, const RunOptions& opt) {
  const auto alpha = code_alpha(job);
  const auto rep = enumerate_coset_box(cs.q, cs.outer, job.code->box, job.code->box_coordinates, cs.embedding, alpha, opt.threads,
                                       job.budget * 100);
  return {{"type", "box"},
          {"box", job.code->box},
          {"box_coordinates", job.code->box_coordinates},
          {"box_elements", rep.box_elements},
          {"codewords", rep.codewords},
          {"min_inner_det", rep.min_inner_det},
          {"delta_min_estimate", rep.min_sigma_det},
          {"argmin", rep.argmin},
          {"d_H", rep.d_h},
          {"alpha_abs", rep.alpha_abs},
          {"n", rep.n},
          {"key_bound", rep.bound},
          {"bound_holds", rep.bound_holds()}};
}

}  // namespace

Records cmd_presets() {
  Records out;
  for (const auto& name : job_preset_names())
    out.push_back({{"type", "preset"}, {"name", name}, {"description", job_preset_description(name)}});
  return out;
}

Records cmd_analyze(const Job& job, const RunOptions& opt) {
  Records out;
  if (job.is_iterated()) {
    auto o = make_iterated_order(job);
    out.push_back(algebra_record(job, *o));
    if (!job.ideal) return out;
    auto q = reduce_mod(o, *job.ideal, job.budget);
    out.push_back(quotient_record(q));
    for (auto& r : finite_analysis(q.target, job, opt)) out.push_back(std::move(r));
    return out;
  }
  auto o = make_cyclic_order(job);
  out.push_back(algebra_record(job, *o));
  if (!job.ideal) return out;
  auto q = reduce_mod(o, *job.ideal, job.budget);
  out.push_back(quotient_record(q));
  for (auto& r : finite_analysis(q.target, job, opt)) out.push_back(std::move(r));
  return out;
}

Records cmd_quotient(const Job& job, const RunOptions& opt) {
  if (!job.ideal) throw ConfigError("/ideal: missing");
  Records out;
  if (job.is_iterated()) {
    auto o = make_iterated_order(job);
    auto q = reduce_mod(o, *job.ideal, job.budget);
    out.push_back(quotient_record(q));
    for (auto& r : iterated_extras(q, opt)) out.push_back(std::move(r));
    return out;
  }
  auto o = make_cyclic_order(job);
  auto q = reduce_mod(o, *job.ideal, job.budget);
  out.push_back(quotient_record(q));
  try {
    const auto sr = splitting_report(q.coefficients, center_subfield(job), job.budget);
    out.push_back({{"type", "splitting"},
                   {"e", sr.e},
                   {"f", sr.f},
                   {"g", sr.g},
                   {"degree", sr.degree},
                   {"consistent", sr.consistent},
                   {"residue_fields", sr.residue_field_cardinalities}});
  } catch (const InvalidArgument& e) {
    out.push_back({{"type", "splitting"}, {"skipped", e.what()}});
  }
  for (auto& r : component_records(q, job)) out.push_back(std::move(r));
  return out;
}

Records cmd_decompose(const Job& job, const RunOptions&) {
  if (!job.ideal) throw ConfigError("/ideal: missing");
  if (job.is_iterated()) throw ConfigError("/algebra/kind: decomposition is implemented for cyclic algebras");
  auto q = reduce_mod(make_cyclic_order(job), *job.ideal, job.budget);
  return component_records(q, job);
}

Records cmd_codebook(const Job& job, const RunOptions& opt) {
  const auto cs = code_setup(job);
  Records out;
  out.push_back({{"type", "code"},
                 {"outer", cs.outer.kind},
                 {"L", cs.outer.length},
                 {"words", cs.outer.words.size()},
                 {"d_H", hamming_distance(cs.outer)}});
  for (auto& r : codebook_records(cs.q, cs.outer, cs.embedding)) {
    r["type"] = "codeword";
    out.push_back(std::move(r));
  }
  out.push_back(box_record(cs, job, opt));
  return out;
}

Records cmd_bound(const Job& job, const RunOptions& opt) {
  const auto cs = code_setup(job);
  return {box_record(cs, job, opt)};
}

std::string render_records(const Records& r) {
  std::string out;
  for (const auto& rec : r) out += rec.dump() + "\n";
  return out;
}

std::string render_text(const Records& r) {
  std::ostringstream os;
  for (const auto& rec : r) {
    const std::string type = rec.value("type", std::string("record"));
    if (type == "summary") {
      os << rec.at("text").get<std::string>() << "\n";
      continue;
    }
    os << "[" << type << "]\n";
    for (const auto& [key, value] : rec.items()) {
      if (key == "type") continue;
      os << "  " << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    }
  }
  return os.str();
}

}  // namespace petit::cli
