#include "petit/finite/quotient_ring.hpp"

#include <numeric>
#include <sstream>

#include "petit/exact/modp_poly.hpp"
#include "petit/util/error.hpp"

namespace petit {

namespace {

constexpr std::uint64_t kTableLimit = 1024;

}  // namespace

FiniteQuotientRing FiniteQuotientRing::build(std::shared_ptr<const NumberField> field, const IntegralIdeal& ideal,
                                             std::uint64_t budget) {
  validate_ideal(*field, ideal);
  const NumberField& k = *field;
  const std::size_t n = k.degree();
  auto impl = std::make_shared<Impl>();
  impl->field = field;
  impl->ideal = ideal;
  for (const auto& g : ideal.generators)
    for (std::size_t i = 0; i < n; ++i) impl->relations.push_back(k.mul(g, k.basis(i)));

  IntMatrix m(impl->relations.size(), n);
  for (std::size_t r = 0; r < impl->relations.size(); ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = impl->relations[r].coords[c].get_num();
  impl->smith = smith_normal_form(m);
  auto diag = impl->smith.diagonal();
  if (diag.size() < n) throw InvalidArgument("relation lattice has rank below the degree; quotient is infinite");
  std::uint64_t card = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (diag[i] == 0) throw InvalidArgument("quotient by " + ideal.label + " is infinite");
    if (diag[i] == 1) continue;
    if (!diag[i].fits_ulong_p() || diag[i].get_ui() > budget)
      throw BudgetExceeded("elementary divisor " + diag[i].get_str() + " exceeds the budget");
    const std::uint64_t d = diag[i].get_ui();
    if (card > budget / d) throw BudgetExceeded("quotient cardinality exceeds the budget of " + std::to_string(budget));
    card *= d;
    impl->active.push_back(i);
    impl->moduli.push_back(d);
  }
  if (card > 0xffffffffULL) throw BudgetExceeded("quotient cardinality does not fit the element encoding");
  impl->cardinality = card;
  std::uint64_t place = 1;
  for (auto d : impl->moduli) {
    impl->radix.push_back(place);
    place *= d;
  }

  FiniteQuotientRing q;
  q.impl_ = impl;
  impl->one = q.project(k.one());
  const std::size_t r = impl->moduli.size();
  impl->C.assign(r, std::vector<Element>(r, 0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      impl->C[i][j] = q.project(k.mul(q.lift(q.residue_basis(i)), q.lift(q.residue_basis(j))));

  std::uint64_t ch = 1;
  auto one_c = q.coords(impl->one);
  for (std::size_t i = 0; i < r; ++i) {
    const std::uint64_t ord = impl->moduli[i] / std::gcd(impl->moduli[i], one_c[i]);
    ch = std::lcm(ch, ord);
  }
  impl->characteristic = ch;

  if (card <= kTableLimit) {
    impl->table.resize(card * card);
    for (std::uint64_t a = 0; a < card; ++a)
      for (std::uint64_t b = 0; b < card; ++b)
        impl->table[a * card + b] = q.mul_slow(static_cast<Element>(a), static_cast<Element>(b));
    impl->inverse_table.assign(card, 0);
    for (std::uint64_t a = 0; a < card; ++a)
      for (std::uint64_t b = 0; b < card; ++b)
        if (impl->table[a * card + b] == impl->one) {
          impl->inverse_table[a] = static_cast<Element>(b);
          break;
        }
  }
  return q;
}

FiniteQuotientRing FiniteQuotientRing::with_extra_generators(const std::vector<FieldElement>& extra,
                                                             std::uint64_t budget) const {
  IntegralIdeal bigger = impl_->ideal;
  bigger.subring.clear();
  bigger.factorization.clear();
  for (const auto& e : extra) bigger.generators.push_back(e);
  bigger.label = impl_->ideal.label + " + extra";
  return build(impl_->field, bigger, budget);
}

std::vector<std::uint64_t> FiniteQuotientRing::coords(Element a) const {
  std::vector<std::uint64_t> c(impl_->moduli.size());
  std::uint64_t v = a;
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] = v % impl_->moduli[i];
    v /= impl_->moduli[i];
  }
  return c;
}

FiniteQuotientRing::Element FiniteQuotientRing::from_coords(const std::vector<std::uint64_t>& c) const {
  if (c.size() != impl_->moduli.size()) throw ShapeMismatch("wrong number of residue coordinates");
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < c.size(); ++i) v += (c[i] % impl_->moduli[i]) * impl_->radix[i];
  return static_cast<Element>(v);
}

FiniteQuotientRing::Element FiniteQuotientRing::residue_basis(std::size_t i) const {
  return static_cast<Element>(impl_->radix.at(i));
}

FiniteQuotientRing::Element FiniteQuotientRing::add(Element a, Element b) const {
  std::uint64_t out = 0, x = a, y = b;
  for (std::size_t i = 0; i < impl_->moduli.size(); ++i) {
    const std::uint64_t d = impl_->moduli[i];
    out += ((x % d + y % d) % d) * impl_->radix[i];
    x /= d;
    y /= d;
  }
  return static_cast<Element>(out);
}

FiniteQuotientRing::Element FiniteQuotientRing::neg(Element a) const {
  std::uint64_t out = 0, x = a;
  for (std::size_t i = 0; i < impl_->moduli.size(); ++i) {
    const std::uint64_t d = impl_->moduli[i];
    out += ((d - x % d) % d) * impl_->radix[i];
    x /= d;
  }
  return static_cast<Element>(out);
}

FiniteQuotientRing::Element FiniteQuotientRing::sub(Element a, Element b) const { return add(a, neg(b)); }

FiniteQuotientRing::Element FiniteQuotientRing::scalar(std::int64_t k, Element a) const {
  std::uint64_t out = 0, x = a;
  for (std::size_t i = 0; i < impl_->moduli.size(); ++i) {
    const auto d = static_cast<std::int64_t>(impl_->moduli[i]);
    const std::int64_t km = ((k % d) + d) % d;
    out += static_cast<std::uint64_t>(static_cast<unsigned __int128>(km) * (x % d) % d) * impl_->radix[i];
    x /= impl_->moduli[i];
  }
  return static_cast<Element>(out);
}

FiniteQuotientRing::Element FiniteQuotientRing::mul_slow(Element a, Element b) const {
  auto ca = coords(a), cb = coords(b);
  const std::size_t r = ca.size();
  Element acc = 0;
  for (std::size_t i = 0; i < r; ++i) {
    if (ca[i] == 0) continue;
    for (std::size_t j = 0; j < r; ++j) {
      if (cb[j] == 0) continue;
      const std::uint64_t kk = ca[i] * cb[j] % impl_->characteristic;
      acc = add(acc, scalar(static_cast<std::int64_t>(kk), impl_->C[i][j]));
    }
  }
  return acc;
}

FiniteQuotientRing::Element FiniteQuotientRing::mul(Element a, Element b) const {
  if (!impl_->table.empty()) return impl_->table[static_cast<std::uint64_t>(a) * impl_->cardinality + b];
  return mul_slow(a, b);
}

FiniteQuotientRing::Element FiniteQuotientRing::pow(Element a, std::uint64_t e) const {
  Element r = one(), b = a;
  while (e) {
    if (e & 1u) r = mul(r, b);
    b = mul(b, b);
    e >>= 1u;
  }
  return r;
}

std::optional<FiniteQuotientRing::Element> FiniteQuotientRing::inverse(Element a) const {
  if (impl_->cardinality == 1) return Element{0};
  if (a == 0) return std::nullopt;
  if (!impl_->inverse_table.empty()) {
    const Element inv = impl_->inverse_table[a];
    if (inv == 0) return std::nullopt;
    return inv;
  }
  // Units have finite multiplicative order; a^k = 1 gives a^(k-1) = a^-1.
  Element prev = one(), p = a;
  for (std::uint64_t k = 1; k <= impl_->cardinality; ++k) {
    if (p == impl_->one) return prev;
    prev = p;
    p = mul(p, a);
  }
  return std::nullopt;
}

bool FiniteQuotientRing::is_field() const {
  if (impl_->field_flag) return *impl_->field_flag;
  bool f = impl_->cardinality > 1;
  for (std::uint64_t a = 1; a < impl_->cardinality && f; ++a) f = inverse(static_cast<Element>(a)).has_value();
  impl_->field_flag = f;
  return f;
}

std::vector<FiniteQuotientRing::Element> FiniteQuotientRing::additive_generators() const {
  std::vector<Element> out;
  for (std::size_t i = 0; i < impl_->moduli.size(); ++i) out.push_back(residue_basis(i));
  return out;
}

std::string FiniteQuotientRing::to_string(Element a) const {
  auto c = coords(a);
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  os << ']';
  return os.str();
}

FiniteQuotientRing::Element FiniteQuotientRing::project(const FieldElement& x) const {
  const NumberField& k = *impl_->field;
  if (x.coords.size() != k.degree()) throw ShapeMismatch("projection of an element of the wrong field");
  if (!x.is_integral()) throw CoefficientsNotIntegral("cannot reduce non-integral " + k.to_string(x));
  const IntMatrix& V = impl_->smith.V;
  std::uint64_t out = 0;
  for (std::size_t a = 0; a < impl_->active.size(); ++a) {
    const std::size_t col = impl_->active[a];
    BigInt y = 0;
    for (std::size_t i = 0; i < k.degree(); ++i) y += x.coords[i].get_num() * V(i, col);
    out += mod_floor(y, BigInt(static_cast<unsigned long>(impl_->moduli[a]))).get_ui() * impl_->radix[a];
  }
  return static_cast<Element>(out);
}

FieldElement FiniteQuotientRing::lift(Element a) const {
  const NumberField& k = *impl_->field;
  auto c = coords(a);
  const IntMatrix& Vi = impl_->smith.V_inv;
  FieldElement x = k.zero();
  for (std::size_t t = 0; t < impl_->active.size(); ++t) {
    if (c[t] == 0) continue;
    const std::size_t row = impl_->active[t];
    for (std::size_t j = 0; j < k.degree(); ++j) x.coords[j] += BigRational(BigInt(static_cast<unsigned long>(c[t])) * Vi(row, j));
  }
  return x;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<FiniteQuotientRing::Element> expand_table(const FiniteQuotientRing& q,
                                                      const std::vector<FiniteQuotientRing::Element>& images) {
  std::vector<FiniteQuotientRing::Element> table(q.cardinality());
  for (std::uint64_t x = 0; x < q.cardinality(); ++x) {
    auto c = q.coords(static_cast<FiniteQuotientRing::Element>(x));
    FiniteQuotientRing::Element acc = 0;
    for (std::size_t i = 0; i < c.size(); ++i)
      if (c[i]) acc = q.add(acc, q.scalar(static_cast<std::int64_t>(c[i]), images[i]));
    table[x] = acc;
  }
  return table;
}

// Residue basis vector i has additive order d_i; its image must too (divide it).
void check_additive(const FiniteQuotientRing& q, const std::vector<FiniteQuotientRing::Element>& images,
                    const std::string& name) {
  for (std::size_t i = 0; i < images.size(); ++i)
    if (q.scalar(static_cast<std::int64_t>(q.moduli()[i]), images[i]) != 0)
      throw NotWellDefined("'" + name + "' is not additive on residue basis vector " + std::to_string(i));
}

void check_multiplicative(const InducedMap& m) {
  const auto& q = m.ring;
  if (m(q.one()) != q.one()) throw NotWellDefined("'" + m.name + "' does not fix 1");
  const std::size_t r = q.moduli().size();
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      auto a = q.residue_basis(i), b = q.residue_basis(j);
      if (m(q.mul(a, b)) != q.mul(m(a), m(b)))
        throw NotWellDefined("'" + m.name + "' is not multiplicative on residue basis pair (" + std::to_string(i) + ", " +
                             std::to_string(j) + ")");
    }
}

}  // namespace

bool InducedMap::is_identity() const {
  for (std::uint64_t x = 0; x < table.size(); ++x)
    if (table[x] != x) return false;
  return true;
}

int InducedMap::order() const {
  std::vector<FiniteQuotientRing::Element> cur = table;
  for (int k = 1; k <= static_cast<int>(table.size()) + 1; ++k) {
    bool id = true;
    for (std::uint64_t x = 0; x < cur.size() && id; ++x) id = cur[x] == x;
    if (id) return k;
    for (auto& v : cur) v = table[v];
  }
  throw NotWellDefined("'" + name + "' is not bijective");
}

InducedMap induce_automorphism(const FieldAutomorphism& sigma, const FiniteQuotientRing& q) {
  const NumberField& k = q.field();
  for (const auto& rel : q.relations()) {
    FieldElement img = k.apply(sigma, rel);
    if (!img.is_integral() || q.project(img) != 0)
      throw NotWellDefined("'" + sigma.name + "' does not stabilize the ideal: the lattice vector " + k.to_string(rel) +
                           " maps to " + k.to_string(img));
  }
  InducedMap m{q, {}, InducedMap::Kind::Automorphism, sigma.name + "_bar", {}};
  for (std::size_t i = 0; i < q.moduli().size(); ++i) m.basis_images.push_back(q.project(k.apply(sigma, q.lift(q.residue_basis(i)))));
  check_additive(q, m.basis_images, m.name);
  m.table = expand_table(q, m.basis_images);
  check_multiplicative(m);
  return m;
}

InducedMap induce_derivation(const FieldDerivation& delta, const InducedMap& sigma_bar, const FiniteQuotientRing& q) {
  const NumberField& k = q.field();
  for (const auto& rel : q.relations()) {
    FieldElement img = k.apply(delta, rel);
    if (!img.is_integral() || q.project(img) != 0)
      throw NotWellDefined("'" + delta.name + "' does not stabilize the ideal: the lattice vector " + k.to_string(rel) +
                           " maps to " + k.to_string(img));
  }
  InducedMap m{q, {}, InducedMap::Kind::Derivation, delta.name + "_bar", {}};
  for (std::size_t i = 0; i < q.moduli().size(); ++i) m.basis_images.push_back(q.project(k.apply(delta, q.lift(q.residue_basis(i)))));
  check_additive(q, m.basis_images, m.name);
  m.table = expand_table(q, m.basis_images);
  const std::size_t r = q.moduli().size();
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      auto a = q.residue_basis(i), b = q.residue_basis(j);
      if (m(q.mul(a, b)) != q.add(q.mul(sigma_bar(a), m(b)), q.mul(m(a), b)))
        throw NotWellDefined("'" + m.name + "' violates the twisted Leibniz rule on (" + std::to_string(i) + ", " +
                             std::to_string(j) + ")");
    }
  return m;
}

InducedMap map_from_function(const FiniteQuotientRing& q, InducedMap::Kind kind, std::string name,
                             const std::function<FiniteQuotientRing::Element(FiniteQuotientRing::Element)>& f) {
  InducedMap m{q, {}, kind, std::move(name), {}};
  for (std::size_t i = 0; i < q.moduli().size(); ++i) m.basis_images.push_back(f(q.residue_basis(i)));
  check_additive(q, m.basis_images, m.name);
  m.table = expand_table(q, m.basis_images);
  for (std::uint64_t x = 0; x < q.cardinality(); ++x)
    if (m.table[x] != f(static_cast<FiniteQuotientRing::Element>(x)))
      throw NotWellDefined("'" + m.name + "' is not additive");
  if (kind != InducedMap::Kind::Derivation) check_multiplicative(m);
  return m;
}

InducedMap identity_map(const FiniteQuotientRing& q) {
  return map_from_function(q, InducedMap::Kind::Automorphism, "id", [](auto x) { return x; });
}

InducedMap zero_derivation(const FiniteQuotientRing& q) {
  return map_from_function(q, InducedMap::Kind::Derivation, "zero", [](auto) { return FiniteQuotientRing::Element{0}; });
}

InducedMap frobenius(const FiniteQuotientRing& q) {
  const std::uint64_t p = q.characteristic();
  if (!is_prime(p)) throw NotAFiniteField("characteristic " + std::to_string(p) + " is not prime");
  return map_from_function(q, InducedMap::Kind::Automorphism, "frobenius", [&](auto x) { return q.pow(x, p); });
}

InducedMap compose(const InducedMap& a, const InducedMap& b) {
  if (!a.ring.same_as(b.ring)) throw InvalidArgument("composing maps on different rings");
  InducedMap m{a.ring, {}, a.kind, a.name + "*" + b.name, {}};
  for (auto img : b.basis_images) m.basis_images.push_back(a(img));
  m.table.resize(a.table.size());
  for (std::size_t x = 0; x < a.table.size(); ++x) m.table[x] = a.table[b.table[x]];
  return m;
}

}  // namespace petit
