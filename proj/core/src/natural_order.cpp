#include "petit/order/natural_order.hpp"

#include <limits>

#include "petit/util/error.hpp"

namespace petit {

namespace {

std::uint64_t checked_power(std::uint64_t base, std::size_t e) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (base != 0 && out > std::numeric_limits<std::uint64_t>::max() / base) return 0;
    out *= base;
  }
  return out;
}

void require_integral(const NumberField& k, const FieldElement& x, const std::string& what) {
  if (!x.is_integral()) throw CoefficientsNotIntegral(what + " = " + k.to_string(x) + " is not integral");
}

const std::string& center_name(const NumberField& k, const std::string& declared, const FieldAutomorphism& s) {
  if (!declared.empty()) {
    (void)k.subfield(declared);
    return declared;
  }
  if (s.fixed_subfield.empty()) throw ConfigError("no center subfield given and " + s.name + " declares no fixed field");
  return s.fixed_subfield;
}

OrderAlgebra build_order_algebra(const CyclicOrderSpec& spec) {
  if (!spec.field) throw ConfigError("natural order needs a field");
  const NumberField& k = *spec.field;
  if (!k.has_automorphism(spec.sigma)) throw ConfigError("unknown automorphism '" + spec.sigma + "'");
  const FieldAutomorphism& s = k.automorphism(spec.sigma);
  for (std::size_t i = 0; i < s.images.size(); ++i) require_integral(k, s.images[i], spec.sigma + "(b" + std::to_string(i) + ")");

  SkewPolyRing<NumberFieldRing>::Map delta;
  if (!spec.delta.empty()) {
    const FieldDerivation& d = k.derivation(spec.delta);
    if (d.automorphism != spec.sigma)
      throw ConfigError("derivation '" + d.name + "' is twisted by '" + d.automorphism + "', not '" + spec.sigma + "'");
    for (std::size_t i = 0; i < d.images.size(); ++i) require_integral(k, d.images[i], d.name + "(b" + std::to_string(i) + ")");
    delta = [f = spec.field, &d](const FieldElement& x) { return f->apply(d, x); };
  }

  const Subfield& center = k.subfield(center_name(k, spec.center, s));
  for (auto i : center.basis_indices) {
    const FieldElement b = k.basis(i);
    if (!k.is_fixed_by(b, s)) throw ConfigError("center basis element " + k.basis_labels()[i] + " is moved by " + s.name);
    if (delta && !delta(b).is_zero()) throw ConfigError("center basis element " + k.basis_labels()[i] + " has nonzero derivative");
  }

  for (std::size_t i = 0; i < spec.modulus.size(); ++i) require_integral(k, spec.modulus[i], "coefficient " + std::to_string(i) + " of f");

  NumberFieldRing ring(spec.field, true);
  SkewPolyRing<NumberFieldRing> skew(ring, [f = spec.field, &s](const FieldElement& x) { return f->apply(s, x); }, delta);
  return OrderAlgebra(skew, skew.make(spec.modulus));
}

}  // namespace

NaturalOrder::NaturalOrder(CyclicOrderSpec spec) : spec_(std::move(spec)), algebra_(build_order_algebra(spec_)) {
  // Closure on Z-basis products; with f monic and integral this is automatic,
  // the loop guards against a basis that is not closed under sigma or delta.
  const NumberField& k = field();
  const int m = degree();
  for (int i = 0; i < m; ++i)
    for (std::size_t l = 0; l < k.degree(); ++l)
      for (int j = 0; j < m; ++j) {
        auto p = algebra_.mul(algebra_.t_power(i), algebra_.monomial(k.basis(l), j));
        if (!contains(p)) throw CoefficientsNotIntegral("t^" + std::to_string(i) + " o b" + std::to_string(l) + " t^" + std::to_string(j) + " leaves the order");
      }
}

bool NaturalOrder::contains(const Element& x) const {
  if (x.size() != static_cast<std::size_t>(degree())) return false;
  for (const auto& c : x)
    if (!c.is_integral()) return false;
  return true;
}

NaturalOrder::Element NaturalOrder::make(const std::vector<std::vector<long>>& coords) const {
  if (coords.size() != static_cast<std::size_t>(degree()))
    throw ShapeMismatch("expected " + std::to_string(degree()) + " coefficient vectors");
  Element out;
  for (const auto& c : coords) out.push_back(field().make_integral(c));
  return out;
}

DivisionStatus NaturalOrder::division_status(std::string* reason) const {
  const auto& f = algebra_.modulus().coeffs;
  for (std::size_t i = 1; i + 1 < f.size(); ++i)
    if (!f[i].is_zero()) {
      if (reason) *reason = "f is not of the form t^m - d";
      return DivisionStatus::Unknown;
    }
  if (!spec_.delta.empty()) {
    if (reason) *reason = "criteria assume delta = 0";
    return DivisionStatus::Unknown;
  }
  return number_field_division_status(field(), sigma(), field().neg(f[0]), degree(), reason);
}

// ---------------------------------------------------------------------------

QuotientPetit::Element QuotientAlgebra::psi(const NaturalOrder::Element& x) const {
  QuotientPetit::Element out;
  out.reserve(x.size());
  for (const auto& c : x) out.push_back(coefficients.project(c));
  return out;
}

NaturalOrder::Element QuotientAlgebra::lift(const QuotientPetit::Element& y) const {
  NaturalOrder::Element out;
  out.reserve(y.size());
  for (auto c : y) out.push_back(coefficients.lift(c));
  return out;
}

bool QuotientAlgebra::in_ideal_lattice(const NaturalOrder::Element& x) const {
  for (const auto& c : x)
    if (!c.is_integral() || coefficients.project(c) != 0) return false;
  return true;
}

std::uint64_t QuotientAlgebra::cardinality() const {
  return checked_power(coefficients.cardinality(), static_cast<std::size_t>(target.degree()));
}

QuotientAlgebra reduce_mod(std::shared_ptr<const NaturalOrder> order, const IntegralIdeal& ideal, std::uint64_t budget) {
  const NumberField& k = order->field();
  validate_ideal(k, ideal);
  const FieldAutomorphism& s = order->sigma();
  const Subfield& center = k.subfield(center_name(k, order->spec().center, s));
  for (const auto& g : ideal.generators)
    if (!k.in_subfield(g, center))
      throw ConfigError("ideal generator " + k.to_string(g) + " is not in the center subfield " + center.name);

  FiniteQuotientRing q = FiniteQuotientRing::build(order->spec().field, ideal, budget);
  InducedMap sb = induce_automorphism(s, q);
  std::optional<InducedMap> db;
  SkewPolyRing<FiniteQuotientRing>::Map dmap;
  if (!order->spec().delta.empty()) {
    db = induce_derivation(k.derivation(order->spec().delta), sb, q);
    dmap = [m = *db](FiniteQuotientRing::Element x) { return m(x); };
  }
  SkewPolyRing<FiniteQuotientRing> skew(q, [m = sb](FiniteQuotientRing::Element x) { return m(x); }, dmap);
  std::vector<FiniteQuotientRing::Element> fbar;
  for (const auto& c : order->algebra().modulus().coeffs) fbar.push_back(q.project(c));
  QuotientPetit target(skew, skew.make(std::move(fbar)));
  return QuotientAlgebra{.source = std::move(order),
                         .ideal = ideal,
                         .experimental_ideal = ideal.generators.size() > 1,
                         .coefficients = q,
                         .sigma_bar = sb,
                         .delta_bar = db,
                         .target = std::move(target)};
}

FiniteQuotientRing center_quotient(const NaturalOrder& order, const IntegralIdeal& ideal, std::uint64_t budget) {
  const NumberField& k = order.field();
  const std::string& name = center_name(k, order.spec().center, order.sigma());
  const Subfield& sub = k.subfield(name);
  auto f = std::make_shared<const NumberField>(k.subfield_as_field(name));
  IntegralIdeal restricted{.subring = {}, .generators = {}, .factorization = {}, .label = ideal.label};
  for (const auto& g : ideal.generators) restricted.generators.push_back(k.restrict_to(g, sub));
  return FiniteQuotientRing::build(f, restricted, budget);
}

std::uint64_t QuotientComponent::cardinality() const {
  return checked_power(coefficient.ring.cardinality(), static_cast<std::size_t>(algebra.degree()));
}

std::vector<QuotientComponent> decompose_quotient(const QuotientAlgebra& q, std::uint64_t budget) {
  const NaturalOrder& order = *q.source;
  const NumberField& k = order.field();
  const Subfield& sub = k.subfield(center_name(k, order.spec().center, order.sigma()));
  FiniteQuotientRing cq = center_quotient(order, q.ideal, budget);
  auto central = crt_decompose(cq, budget);

  std::vector<QuotientComponent> out;
  std::uint64_t product = 1;
  for (std::size_t i = 0; i < central.size(); ++i) {
    const auto e = q.coefficients.project(k.extend_from(cq.lift(central[i].idempotent), sub));
    CrtComponent cc = make_component(q.coefficients, e, budget);
    InducedMap sb = induce_automorphism(order.sigma(), cc.ring);
    SkewPolyRing<FiniteQuotientRing>::Map dmap;
    if (!order.spec().delta.empty()) {
      InducedMap db = induce_derivation(k.derivation(order.spec().delta), sb, cc.ring);
      dmap = [db](FiniteQuotientRing::Element x) { return db(x); };
    }
    SkewPolyRing<FiniteQuotientRing> skew(cc.ring, [sb](FiniteQuotientRing::Element x) { return sb(x); }, dmap);
    std::vector<FiniteQuotientRing::Element> fbar;
    for (const auto& c : order.algebra().modulus().coeffs) fbar.push_back(cc.ring.project(c));
    QuotientPetit alg(skew, skew.make(std::move(fbar)));

    auto slots = crt_decompose(cc.ring, budget);
    auto orbits = order_by_orbits(slots, sb);

    QuotientComponent qc{.label = "q" + std::to_string(i + 1),
                         .center_idempotent = central[i].idempotent,
                         .coefficient = std::move(cc),
                         .center_cardinality = central[i].ring.cardinality(),
                         .sigma_bar = sb,
                         .algebra = std::move(alg),
                         .slots = slots.size(),
                         .slots_cyclic = orbits.size() == 1};
    const auto c = qc.cardinality();
    product = (c == 0 || product > std::numeric_limits<std::uint64_t>::max() / c) ? 0 : product * c;
    out.push_back(std::move(qc));
  }
  const auto total = q.cardinality();
  if (total != 0 && product != 0 && product != total)
    throw AxiomViolation("component cardinalities multiply to " + std::to_string(product) + ", expected " + std::to_string(total));
  return out;
}

// ---------------------------------------------------------------------------

std::vector<FieldElement> characteristic_polynomial(const NumberField& k, const Matrix<FieldElement>& a) {
  const std::size_t n = a.size();
  std::vector<FieldElement> p(n + 1, k.zero());
  p[n] = k.one();
  Matrix<FieldElement> m(n, std::vector<FieldElement>(n, k.zero()));  // M_0 = 0
  for (std::size_t step = 1; step <= n; ++step) {
    // M_k = A M_{k-1} + c_{n-k+1} I,  c_{n-k} = -tr(A M_k) / k
    Matrix<FieldElement> next(n, std::vector<FieldElement>(n, k.zero()));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        FieldElement acc = k.zero();
        for (std::size_t l = 0; l < n; ++l) acc = k.add(acc, k.mul(a[r][l], m[l][c]));
        next[r][c] = acc;
      }
    for (std::size_t r = 0; r < n; ++r) next[r][r] = k.add(next[r][r], p[n - step + 1]);
    m = std::move(next);
    FieldElement tr = k.zero();
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t l = 0; l < n; ++l) tr = k.add(tr, k.mul(a[r][l], m[l][r]));
    p[n - step] = k.scale(tr, BigRational(-1, static_cast<long>(step)));
  }
  return p;
}

namespace {

template <class Alg, class Embed>
bool annihilates(const Alg& alg, const typename Alg::Element& a, const std::vector<FieldElement>& p, Embed embed) {
  auto power = alg.one();
  auto acc = alg.zero();
  for (std::size_t k = 0; k < p.size(); ++k) {
    acc = alg.add(acc, alg.mul(alg.scalar(embed(p[k])), power));
    power = alg.mul(power, a);
  }
  return alg.is_zero(acc);
}

}  // namespace

bool charpoly_annihilation_check(const NaturalOrder& order, const NaturalOrder::Element& a) {
  const auto p = characteristic_polynomial(order.field(), right_multiplication_matrix(order.algebra(), a));
  return annihilates(order.algebra(), a, p, [](const FieldElement& x) { return x; });
}

// ---------------------------------------------------------------------------

namespace {

InnerOrder build_inner(const IteratedOrderSpec& spec) {
  if (!spec.field) throw ConfigError("iterated order needs a field");
  const NumberField& k = *spec.field;
  for (const auto* name : {&spec.rho, &spec.sigma})
    if (!k.has_automorphism(*name)) throw ConfigError("unknown automorphism '" + *name + "'");
  const FieldAutomorphism& rho = k.automorphism(spec.rho);
  const FieldAutomorphism& sigma = k.automorphism(spec.sigma);
  if (rho.order != spec.n) throw SpecMismatch(rho.name + " has order " + std::to_string(rho.order) + ", expected n = " + std::to_string(spec.n));
  if (sigma.order != spec.m) throw SpecMismatch(sigma.name + " has order " + std::to_string(sigma.order) + ", expected m = " + std::to_string(spec.m));
  for (std::size_t i = 0; i < k.degree(); ++i) {
    const FieldElement b = k.basis(i);
    if (k.apply(rho, k.apply(sigma, b)) != k.apply(sigma, k.apply(rho, b)))
      throw SpecMismatch(rho.name + " and " + sigma.name + " do not commute");
  }
  require_integral(k, spec.c, "c");
  require_integral(k, spec.d, "d");
  if (!k.is_fixed_by(spec.c, sigma)) throw SpecMismatch("c = " + k.to_string(spec.c) + " is moved by " + sigma.name);
  if (!spec.center.empty()) {
    const Subfield& f0 = k.subfield(spec.center);
    if (!k.in_subfield(spec.c, f0)) throw SpecMismatch("c is not in " + f0.name);
    for (auto i : f0.basis_indices)
      if (!k.is_fixed_by(k.basis(i), rho) || !k.is_fixed_by(k.basis(i), sigma))
        throw ConfigError("center " + f0.name + " is not fixed by " + rho.name + " and " + sigma.name);
  }
  return InnerOrder(NumberFieldRing(spec.field, true), [f = spec.field, &rho](const FieldElement& x) { return f->apply(rho, x); },
                    spec.n, spec.c);
}

IteratedAlgebra build_outer(const IteratedOrderSpec& spec, const InnerOrder& inner) {
  const NumberField& k = *spec.field;
  const FieldAutomorphism& sigma = k.automorphism(spec.sigma);
  SkewPolyRing<InnerOrder> skew(inner, inner.coefficientwise([f = spec.field, &sigma](const FieldElement& x) { return f->apply(sigma, x); }));
  std::vector<InnerOrder::Element> f(static_cast<std::size_t>(spec.m + 1), inner.zero());
  f[0] = inner.neg(inner.embed(spec.d));
  f.back() = inner.one();
  return IteratedAlgebra(skew, skew.make(std::move(f)));
}

}  // namespace

IteratedOrder::IteratedOrder(IteratedOrderSpec spec)
    : spec_(std::move(spec)), inner_(build_inner(spec_)), algebra_(build_outer(spec_, inner_)) {}

bool IteratedOrder::contains(const Element& x) const {
  if (x.size() != static_cast<std::size_t>(spec_.m)) return false;
  for (const auto& dj : x) {
    if (dj.size() != static_cast<std::size_t>(spec_.n)) return false;
    for (const auto& c : dj)
      if (!c.is_integral()) return false;
  }
  return true;
}

IteratedQuotientPetit::Element IteratedQuotient::psi(const IteratedOrder::Element& x) const {
  IteratedQuotientPetit::Element out;
  for (const auto& dj : x) {
    InnerQuotient::Element y;
    for (const auto& c : dj) y.push_back(coefficients.project(c));
    out.push_back(std::move(y));
  }
  return out;
}

IteratedOrder::Element IteratedQuotient::lift(const IteratedQuotientPetit::Element& y) const {
  IteratedOrder::Element out;
  for (const auto& dj : y) {
    std::vector<FieldElement> x;
    for (auto c : dj) x.push_back(coefficients.lift(c));
    out.push_back(std::move(x));
  }
  return out;
}

bool IteratedQuotient::in_ideal_lattice(const IteratedOrder::Element& x) const {
  for (const auto& dj : x)
    for (const auto& c : dj)
      if (!c.is_integral() || coefficients.project(c) != 0) return false;
  return true;
}

std::uint64_t IteratedQuotient::cardinality() const {
  return checked_power(coefficients.cardinality(), static_cast<std::size_t>(inner.degree() * target.degree()));
}

IteratedQuotient reduce_mod(std::shared_ptr<const IteratedOrder> order, const IntegralIdeal& ideal, std::uint64_t budget) {
  const NumberField& k = order->field();
  const auto& spec = order->spec();
  validate_ideal(k, ideal);
  const FieldAutomorphism& rho = k.automorphism(spec.rho);
  const FieldAutomorphism& sigma = k.automorphism(spec.sigma);
  for (const auto& g : ideal.generators) {
    if (!spec.center.empty() && !k.in_subfield(g, k.subfield(spec.center)))
      throw ConfigError("ideal generator " + k.to_string(g) + " is not in " + spec.center);
    if (!k.is_fixed_by(g, rho) || !k.is_fixed_by(g, sigma))
      throw ConfigError("ideal generator " + k.to_string(g) + " is not central");
  }
  FiniteQuotientRing q = FiniteQuotientRing::build(spec.field, ideal, budget);
  InducedMap rb = induce_automorphism(rho, q);
  InducedMap sb = induce_automorphism(sigma, q);
  InnerQuotient inner(q, [rb](FiniteQuotientRing::Element x) { return rb(x); }, spec.n, q.project(spec.c));
  SkewPolyRing<InnerQuotient> skew(inner, inner.coefficientwise([sb](FiniteQuotientRing::Element x) { return sb(x); }));
  std::vector<InnerQuotient::Element> f(static_cast<std::size_t>(spec.m + 1), inner.zero());
  f[0] = inner.neg(inner.embed(q.project(spec.d)));
  f.back() = inner.one();
  IteratedQuotientPetit target(skew, skew.make(std::move(f)));
  return IteratedQuotient{.source = std::move(order),
                          .ideal = ideal,
                          .coefficients = q,
                          .rho_bar = rb,
                          .sigma_bar = sb,
                          .inner = std::move(inner),
                          .target = std::move(target)};
}

bool charpoly_annihilation_check(const IteratedOrder& order, const IteratedOrder::Element& a) {
  const auto p = characteristic_polynomial(order.field(), iterated_matrix(order.algebra(), a));
  return annihilates(order.algebra(), a, p, [&](const FieldElement& x) { return order.inner().embed(x); });
}

}  // namespace petit
