#include "petit/number_field/number_field.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "petit/util/error.hpp"

namespace petit {

bool FieldElement::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](const BigRational& c) { return c == 0; });
}

bool FieldElement::is_integral() const {
  return std::all_of(coords.begin(), coords.end(), [](const BigRational& c) { return is_integer(c); });
}

NumberField::NumberField(std::string name, std::vector<std::string> basis,
                         std::vector<std::vector<std::vector<BigInt>>> mul_table,
                         std::vector<FieldAutomorphism> automorphisms, std::vector<FieldDerivation> derivations,
                         std::vector<Subfield> subfields, std::vector<Embedding> embeddings, std::string conjugation)
    : name_(std::move(name)),
      basis_(std::move(basis)),
      table_(std::move(mul_table)),
      automorphisms_(std::move(automorphisms)),
      derivations_(std::move(derivations)),
      subfields_(std::move(subfields)),
      embeddings_(std::move(embeddings)),
      conjugation_(std::move(conjugation)) {
  validate();
}

namespace {

std::string triple(std::size_t i, std::size_t j, std::size_t k) {
  return "(b" + std::to_string(i + 1) + ", b" + std::to_string(j + 1) + ", b" + std::to_string(k + 1) + ")";
}

std::string pair(std::size_t i, std::size_t j) {
  return "(b" + std::to_string(i + 1) + ", b" + std::to_string(j + 1) + ")";
}

}  // namespace

void NumberField::validate() {
  const std::size_t n = basis_.size();
  if (n == 0) throw ConfigError("field '" + name_ + "' has an empty basis");
  if (table_.size() != n) throw ConfigError("mul_table has " + std::to_string(table_.size()) + " rows, expected " + std::to_string(n));
  for (const auto& row : table_) {
    if (row.size() != n) throw ConfigError("mul_table row has wrong length");
    for (const auto& v : row)
      if (v.size() != n) throw ConfigError("mul_table entry has wrong length");
  }
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      if (table_[0][j][k] != (j == k ? 1 : 0))
        throw AxiomViolation("b1 is not the identity: b1*b" + std::to_string(j + 1) + " != b" + std::to_string(j + 1));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (table_[i][j] != table_[j][i]) throw AxiomViolation("not commutative on " + pair(i, j));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (mul(mul(basis(i), basis(j)), basis(k)) != mul(basis(i), mul(basis(j), basis(k))))
          throw AxiomViolation("not associative on " + triple(i, j, k));

  for (const auto& s : subfields_) {
    if (s.basis_indices.empty() || s.basis_indices[0] != 0)
      throw ConfigError("subfield '" + s.name + "' must list basis index 0 first");
    for (auto i : s.basis_indices)
      if (i >= n) throw ConfigError("subfield '" + s.name + "' index out of range");
    for (auto i : s.basis_indices)
      for (auto j : s.basis_indices)
        if (!in_subfield(mul(basis(i), basis(j)), s))
          throw AxiomViolation("subfield '" + s.name + "' not closed on " + pair(i, j));
  }

  for (auto& a : automorphisms_) {
    if (a.images.size() != n) throw ConfigError("automorphism '" + a.name + "' needs " + std::to_string(n) + " images");
    for (auto& img : a.images)
      if (img.coords.size() != n) throw ConfigError("automorphism '" + a.name + "' image has wrong length");
    if (a.images[0] != one()) throw BadAutomorphism("'" + a.name + "' does not fix 1");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (apply(a, mul(basis(i), basis(j))) != mul(a.images[i], a.images[j]))
          throw BadAutomorphism("'" + a.name + "' is not multiplicative on " + pair(i, j));
    QMatrix m(n, QVector(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m[j][i] = a.images[i].coords[j];
    if (rank(m) != n) throw BadAutomorphism("'" + a.name + "' is not bijective");
    if (a.order < 1) throw ConfigError("automorphism '" + a.name + "' has nonpositive order");
    for (int k = 1; k <= a.order; ++k) {
      bool identity = true;
      for (std::size_t i = 0; i < n && identity; ++i) identity = apply_power(a, basis(i), k) == basis(i);
      if (identity != (k == a.order))
        throw BadAutomorphism("'" + a.name + "' does not have order " + std::to_string(a.order) + " (power " +
                              std::to_string(k) + (identity ? " is the identity)" : " is not the identity)"));
    }
    if (!a.fixed_subfield.empty()) {
      const Subfield& s = subfield(a.fixed_subfield);
      for (auto i : s.basis_indices)
        if (apply(a, basis(i)) != basis(i))
          throw BadAutomorphism("'" + a.name + "' moves b" + std::to_string(i + 1) + " of fixed subfield '" + s.name + "'");
    }
  }

  for (const auto& d : derivations_) {
    if (d.images.size() != n) throw ConfigError("derivation '" + d.name + "' needs " + std::to_string(n) + " images");
    const FieldAutomorphism& s = automorphism(d.automorphism);
    if (!d.images[0].is_zero()) throw AxiomViolation("derivation '" + d.name + "' does not vanish on 1");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        FieldElement lhs = apply(d, mul(basis(i), basis(j)));
        FieldElement rhs = add(mul(apply(s, basis(i)), d.images[j]), mul(d.images[i], basis(j)));
        if (lhs != rhs) throw AxiomViolation("derivation '" + d.name + "' violates the Leibniz rule on " + pair(i, j));
      }
  }

  for (const auto& e : embeddings_) {
    if (e.images.size() != n) throw ConfigError("embedding '" + e.name + "' needs " + std::to_string(n) + " images");
    if (std::abs(e.images[0] - 1.0) > 1e-9) throw ConfigError("embedding '" + e.name + "' does not send b1 to 1");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        std::complex<double> rhs = 0;
        for (std::size_t k = 0; k < n; ++k) rhs += table_[i][j][k].get_d() * e.images[k];
        const std::complex<double> lhs = e.images[i] * e.images[j];
        if (std::abs(lhs - rhs) > 1e-9 * std::max(1.0, std::abs(rhs)))
          throw ConfigError("embedding '" + e.name + "' is not a ring homomorphism on " + pair(i, j));
      }
  }

  if (!conjugation_.empty()) {
    if (embeddings_.empty()) throw ConfigError("conjugation declared without an embedding");
    const FieldAutomorphism& c = automorphism(conjugation_);
    for (std::size_t i = 0; i < n; ++i)
      if (std::abs(embed(c.images[i]) - std::conj(embeddings_[0].images[i])) > 1e-9)
        throw ConfigError("automorphism '" + conjugation_ + "' is not complex conjugation on b" + std::to_string(i + 1));
  }
}

void NumberField::check_dimension(const FieldElement& a) const {
  if (a.coords.size() != degree())
    throw ShapeMismatch("element has " + std::to_string(a.coords.size()) + " coordinates, field degree is " +
                        std::to_string(degree()));
}

FieldElement NumberField::zero() const { return FieldElement{std::vector<BigRational>(degree(), BigRational(0))}; }

FieldElement NumberField::one() const { return basis(0); }

FieldElement NumberField::basis(std::size_t i) const {
  FieldElement e = zero();
  e.coords.at(i) = 1;
  return e;
}

FieldElement NumberField::from_integer(const BigInt& v) const { return from_rational(BigRational(v)); }

FieldElement NumberField::from_rational(const BigRational& v) const {
  FieldElement e = zero();
  e.coords[0] = v;
  return e;
}

FieldElement NumberField::make(std::vector<BigRational> coords) const {
  FieldElement e{std::move(coords)};
  check_dimension(e);
  return e;
}

FieldElement NumberField::make_integral(const std::vector<long>& coords) const {
  FieldElement e = zero();
  if (coords.size() != degree()) throw ShapeMismatch("wrong number of integral coordinates");
  for (std::size_t i = 0; i < coords.size(); ++i) e.coords[i] = coords[i];
  return e;
}

FieldElement NumberField::add(const FieldElement& a, const FieldElement& b) const {
  check_dimension(a);
  check_dimension(b);
  FieldElement r = a;
  for (std::size_t i = 0; i < degree(); ++i) r.coords[i] += b.coords[i];
  return r;
}

FieldElement NumberField::sub(const FieldElement& a, const FieldElement& b) const {
  check_dimension(a);
  check_dimension(b);
  FieldElement r = a;
  for (std::size_t i = 0; i < degree(); ++i) r.coords[i] -= b.coords[i];
  return r;
}

FieldElement NumberField::neg(const FieldElement& a) const {
  FieldElement r = a;
  for (auto& c : r.coords) c = -c;
  return r;
}

FieldElement NumberField::mul(const FieldElement& a, const FieldElement& b) const {
  check_dimension(a);
  check_dimension(b);
  const std::size_t n = degree();
  FieldElement r = zero();
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coords[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b.coords[j] == 0) continue;
      const BigRational ab = a.coords[i] * b.coords[j];
      for (std::size_t k = 0; k < n; ++k)
        if (table_[i][j][k] != 0) r.coords[k] += ab * table_[i][j][k];
    }
  }
  return r;
}

FieldElement NumberField::scale(const FieldElement& a, const BigRational& k) const {
  FieldElement r = a;
  for (auto& c : r.coords) c *= k;
  return r;
}

FieldElement NumberField::pow(const FieldElement& a, unsigned e) const {
  FieldElement r = one(), b = a;
  while (e) {
    if (e & 1u) r = mul(r, b);
    b = mul(b, b);
    e >>= 1u;
  }
  return r;
}

QMatrix NumberField::multiplication_matrix(const FieldElement& a) const {
  const std::size_t n = degree();
  QMatrix m(n, QVector(n));
  for (std::size_t j = 0; j < n; ++j) {
    FieldElement col = mul(a, basis(j));
    for (std::size_t i = 0; i < n; ++i) m[i][j] = col.coords[i];
  }
  return m;
}

FieldElement NumberField::inverse(const FieldElement& a) const {
  check_dimension(a);
  if (a.is_zero()) throw ZeroInverse("inverse of zero in field '" + name_ + "'");
  auto x = solve(multiplication_matrix(a), one().coords);
  if (!x) throw AxiomViolation("multiplication by a nonzero element is singular; '" + name_ + "' is not a field");
  return FieldElement{*x};
}

BigRational NumberField::norm(const FieldElement& a) const {
  QMatrix m = multiplication_matrix(a);
  const std::size_t n = m.size();
  BigRational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(m[p], m[k]);
      det = -det;
    }
    det *= m[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m[i][k] == 0) continue;
      const BigRational f = m[i][k] / m[k][k];
      for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return det;
}

BigRational NumberField::trace(const FieldElement& a) const {
  QMatrix m = multiplication_matrix(a);
  BigRational t = 0;
  for (std::size_t i = 0; i < m.size(); ++i) t += m[i][i];
  return t;
}

const FieldAutomorphism& NumberField::automorphism(const std::string& name) const {
  for (const auto& a : automorphisms_)
    if (a.name == name) return a;
  throw ConfigError("unknown automorphism '" + name + "' in field '" + name_ + "'");
}

bool NumberField::has_automorphism(const std::string& name) const {
  return std::any_of(automorphisms_.begin(), automorphisms_.end(), [&](const auto& a) { return a.name == name; });
}

FieldElement NumberField::apply(const FieldAutomorphism& s, const FieldElement& x) const {
  check_dimension(x);
  FieldElement r = zero();
  for (std::size_t i = 0; i < degree(); ++i)
    if (x.coords[i] != 0) r = add(r, scale(s.images[i], x.coords[i]));
  return r;
}

FieldElement NumberField::apply_power(const FieldAutomorphism& s, const FieldElement& x, int k) const {
  k %= s.order;
  if (k < 0) k += s.order;
  FieldElement r = x;
  for (int i = 0; i < k; ++i) r = apply(s, r);
  return r;
}

bool NumberField::is_fixed_by(const FieldElement& x, const FieldAutomorphism& s) const { return apply(s, x) == x; }

const FieldDerivation& NumberField::derivation(const std::string& name) const {
  for (const auto& d : derivations_)
    if (d.name == name) return d;
  throw ConfigError("unknown derivation '" + name + "' in field '" + name_ + "'");
}

FieldElement NumberField::apply(const FieldDerivation& d, const FieldElement& x) const {
  check_dimension(x);
  FieldElement r = zero();
  for (std::size_t i = 0; i < degree(); ++i)
    if (x.coords[i] != 0) r = add(r, scale(d.images[i], x.coords[i]));
  return r;
}

const Subfield& NumberField::subfield(const std::string& name) const {
  for (const auto& s : subfields_)
    if (s.name == name) return s;
  throw ConfigError("unknown subfield '" + name + "' in field '" + name_ + "'");
}

bool NumberField::in_subfield(const FieldElement& x, const Subfield& s) const {
  for (std::size_t i = 0; i < degree(); ++i)
    if (x.coords[i] != 0 && std::find(s.basis_indices.begin(), s.basis_indices.end(), i) == s.basis_indices.end())
      return false;
  return true;
}

NumberField NumberField::subfield_as_field(const std::string& name) const {
  const Subfield& s = subfield(name);
  const std::size_t r = s.basis_indices.size();
  std::vector<std::string> labels;
  for (auto i : s.basis_indices) labels.push_back(basis_[i]);
  std::vector<std::vector<std::vector<BigInt>>> table(r, std::vector<std::vector<BigInt>>(r, std::vector<BigInt>(r)));
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b)
      for (std::size_t c = 0; c < r; ++c) table[a][b][c] = table_[s.basis_indices[a]][s.basis_indices[b]][s.basis_indices[c]];
  std::vector<Embedding> embs;
  for (const auto& e : embeddings_) {
    Embedding re{e.name, {}};
    for (auto i : s.basis_indices) re.images.push_back(e.images[i]);
    embs.push_back(std::move(re));
  }
  return NumberField(name_ + "/" + name, labels, table, {}, {}, {Subfield{"Q", {0}}}, embs);
}

FieldElement NumberField::restrict_to(const FieldElement& x, const Subfield& s) const {
  if (!in_subfield(x, s)) throw InvalidArgument(to_string(x) + " is not in subfield '" + s.name + "'");
  FieldElement y{std::vector<BigRational>(s.basis_indices.size())};
  for (std::size_t a = 0; a < s.basis_indices.size(); ++a) y.coords[a] = x.coords[s.basis_indices[a]];
  return y;
}

FieldElement NumberField::extend_from(const FieldElement& y, const Subfield& s) const {
  if (y.coords.size() != s.basis_indices.size()) throw ShapeMismatch("subfield element has wrong length");
  FieldElement x = zero();
  for (std::size_t a = 0; a < s.basis_indices.size(); ++a) x.coords[s.basis_indices[a]] = y.coords[a];
  return x;
}

bool NumberField::power_independence(const FieldElement& d, int m, const Subfield& s) const {
  if (m < 1) return true;
  // Independence over the subfield is independence over Q of all products
  // d^k * s_j with s_j running over the subfield's basis.
  QMatrix rows;
  FieldElement power = one();
  for (int k = 0; k < m; ++k) {
    for (auto j : s.basis_indices) rows.push_back(mul(power, basis(j)).coords);
    power = mul(power, d);
  }
  return rank(rows) == rows.size();
}

std::complex<double> NumberField::embed(const FieldElement& x, std::size_t which) const {
  if (embeddings_.empty()) throw EmbeddingMissing("field '" + name_ + "' has no complex embedding");
  const Embedding& e = embeddings_.at(which);
  std::complex<double> acc = 0;
  for (std::size_t i = 0; i < degree(); ++i)
    if (x.coords[i] != 0) acc += x.coords[i].get_d() * e.images[i];
  return acc;
}

std::string NumberField::to_string(const FieldElement& x) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < degree(); ++i) {
    const BigRational& c = x.coords[i];
    if (c == 0) continue;
    const bool negative = c < 0;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    const BigRational a = abs(c);
    if (i == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << '*';
      os << basis_[i];
    }
  }
  return first ? "0" : os.str();
}

}  // namespace petit
