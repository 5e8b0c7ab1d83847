#include "petit/finite/decompose.hpp"

#include <algorithm>
#include <set>

#include "petit/exact/modp_poly.hpp"
#include "petit/number_field/presets.hpp"
#include "petit/util/error.hpp"

namespace petit {

using Elem = FiniteQuotientRing::Element;

std::vector<Elem> idempotents(const FiniteQuotientRing& q, std::uint64_t budget) {
  if (q.cardinality() > budget)
    throw BudgetExceeded("idempotent search over " + std::to_string(q.cardinality()) + " elements exceeds budget " +
                         std::to_string(budget));
  std::vector<Elem> out;
  for (std::uint64_t x = 0; x < q.cardinality(); ++x)
    if (q.mul(static_cast<Elem>(x), static_cast<Elem>(x)) == x) out.push_back(static_cast<Elem>(x));
  return out;
}

CrtComponent make_component(const FiniteQuotientRing& q, Elem e, std::uint64_t budget) {
  if (q.mul(e, e) != e) throw InvalidArgument("make_component needs an idempotent");
  CrtComponent c{e, q.with_extra_generators({q.lift(q.sub(q.one(), e))}, budget), {}, {}};
  c.projection.resize(q.cardinality());
  for (std::uint64_t x = 0; x < q.cardinality(); ++x) c.projection[x] = c.ring.project(q.lift(static_cast<Elem>(x)));
  c.embedding.resize(c.ring.cardinality());
  for (std::uint64_t y = 0; y < c.ring.cardinality(); ++y)
    c.embedding[y] = q.mul(q.project(c.ring.lift(static_cast<Elem>(y))), e);
  return c;
}

std::vector<CrtComponent> crt_decompose(const FiniteQuotientRing& q, std::uint64_t budget) {
  auto ids = idempotents(q, budget);
  std::vector<Elem> primitive;
  for (Elem e : ids) {
    if (e == 0) continue;
    bool prim = true;
    for (Elem f : ids)
      if (f != 0 && f != e && q.mul(e, f) == f) {
        prim = false;
        break;
      }
    if (prim) primitive.push_back(e);
  }
  Elem sum = 0;
  for (Elem e : primitive) sum = q.add(sum, e);
  if (sum != q.one()) throw AxiomViolation("primitive idempotents do not sum to 1");

  std::vector<CrtComponent> out;
  for (Elem e : primitive) out.push_back(make_component(q, e, budget));
  std::uint64_t prod = 1;
  for (const auto& c : out) prod *= c.ring.cardinality();
  if (prod != q.cardinality()) throw AxiomViolation("component cardinalities do not multiply to |Q|");
  return out;
}

std::size_t image_component(const std::vector<CrtComponent>& components, const InducedMap& sigma_bar, std::size_t j) {
  const Elem img = sigma_bar(components.at(j).idempotent);
  for (std::size_t i = 0; i < components.size(); ++i)
    if (components[i].idempotent == img) return i;
  throw AxiomViolation("sigma_bar does not permute the primitive idempotents");
}

std::vector<std::size_t> order_by_orbits(std::vector<CrtComponent>& components, const InducedMap& sigma_bar) {
  std::vector<bool> used(components.size(), false);
  std::vector<CrtComponent> ordered;
  std::vector<std::size_t> lengths;
  for (std::size_t start = 0; start < components.size(); ++start) {
    if (used[start]) continue;
    std::size_t j = start, len = 0;
    while (!used[j]) {
      used[j] = true;
      ordered.push_back(components[j]);
      ++len;
      j = image_component(components, sigma_bar, j);
    }
    if (j != start) throw AxiomViolation("sigma_bar orbit on idempotents is not a cycle");
    lengths.push_back(len);
  }
  components = std::move(ordered);
  return lengths;
}

std::vector<Elem> nilradical(const FiniteQuotientRing& q) {
  std::vector<Elem> out;
  for (std::uint64_t x = 0; x < q.cardinality(); ++x)
    if (q.pow(static_cast<Elem>(x), q.cardinality()) == 0) out.push_back(static_cast<Elem>(x));
  return out;
}

bool is_local(const FiniteQuotientRing& q) {
  std::vector<Elem> non_units;
  for (std::uint64_t x = 0; x < q.cardinality(); ++x)
    if (!q.inverse(static_cast<Elem>(x))) non_units.push_back(static_cast<Elem>(x));
  std::set<Elem> s(non_units.begin(), non_units.end());
  for (Elem a : non_units)
    for (Elem b : non_units)
      if (!s.count(q.add(a, b))) return false;
  return !non_units.empty() || q.cardinality() > 1;
}

namespace {

int exact_log(std::uint64_t base, std::uint64_t x) {
  if (base < 2) return -1;
  int k = 0;
  std::uint64_t v = 1;
  while (v < x) {
    v *= base;
    ++k;
  }
  return v == x ? k : -1;
}

}  // namespace

SplittingReport splitting_report(const FiniteQuotientRing& q, const std::string& subfield, std::uint64_t budget) {
  const NumberField& k = q.field();
  const Subfield& s = k.subfield(subfield);
  auto base_field = std::make_shared<const NumberField>(k.subfield_as_field(subfield));
  IntegralIdeal base_ideal;
  base_ideal.label = q.ideal().label;
  for (const auto& g : q.ideal().generators) base_ideal.generators.push_back(k.restrict_to(g, s));
  FiniteQuotientRing base = FiniteQuotientRing::build(base_field, base_ideal, budget);
  if (!base.is_field()) throw InvalidArgument("the ideal " + q.ideal().label + " is not prime in the subfield ring");

  SplittingReport r;
  r.base_residue_cardinality = base.cardinality();
  r.degree = static_cast<int>(k.degree() / s.basis_indices.size());
  auto comps = crt_decompose(q, budget);
  r.g = static_cast<int>(comps.size());
  bool uniform = true;
  for (std::size_t j = 0; j < comps.size(); ++j) {
    const auto& c = comps[j].ring;
    const std::uint64_t nil = nilradical(c).size();
    const std::uint64_t res = c.cardinality() / nil;
    const int f = exact_log(base.cardinality(), res);
    const int e = exact_log(res, c.cardinality());
    r.component_cardinalities.push_back(c.cardinality());
    r.residue_field_cardinalities.push_back(res);
    if (j == 0) {
      r.e = e;
      r.f = f;
    } else if (e != r.e || f != r.f) {
      uniform = false;
    }
  }
  r.consistent = uniform && r.e > 0 && r.f > 0 && r.e * r.f * r.g == r.degree;
  return r;
}

FixedSubring fixed_subring(const InducedMap& m) {
  const auto& q = m.ring;
  FixedSubring out;
  for (std::uint64_t x = 0; x < q.cardinality(); ++x)
    if (m(static_cast<Elem>(x)) == x) out.elements.push_back(static_cast<Elem>(x));
  std::set<Elem> s(out.elements.begin(), out.elements.end());
  out.closed = s.count(q.one()) > 0;
  for (Elem a : out.elements) {
    if (!out.closed) break;
    for (Elem b : out.elements)
      if (!s.count(q.add(a, b)) || !s.count(q.mul(a, b))) {
        out.closed = false;
        break;
      }
  }
  out.is_field = out.closed && out.elements.size() > 1;
  for (Elem a : out.elements) {
    if (!out.is_field) break;
    if (a == 0) continue;
    auto inv = q.inverse(a);
    out.is_field = inv && s.count(*inv);
  }
  return out;
}

GaloisField galois_field(std::uint64_t p, int k) {
  ModPPoly g = first_irreducible(p, k);
  std::vector<long> coeffs;
  for (auto c : g.coefficients()) coeffs.push_back(static_cast<long>(c));
  auto field = std::make_shared<const NumberField>(
      monogenic_order("GF(" + std::to_string(p) + "^" + std::to_string(k) + ")", coeffs));
  IntegralIdeal ideal;
  ideal.generators.push_back(field->from_integer(BigInt(static_cast<unsigned long>(p))));
  ideal.label = "<" + std::to_string(p) + ">";
  FiniteQuotientRing ring = FiniteQuotientRing::build(field, ideal);
  return GaloisField{ring, frobenius(ring), coeffs};
}

}  // namespace petit
