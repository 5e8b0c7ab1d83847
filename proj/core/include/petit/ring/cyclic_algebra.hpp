#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "petit/ring/concepts.hpp"
#include "petit/ring/number_field_ring.hpp"
#include "petit/util/error.hpp"

namespace petit {

/// Coefficient rings exposing additive coordinates in a product of cyclic groups.
template <class R>
concept FiniteCoordinateRing = FiniteRing<R> && requires(const R& r, const typename R::Element& a,
                                                         const std::vector<std::uint64_t>& c) {
  { r.moduli() } -> std::convertible_to<std::vector<std::uint64_t>>;
  { r.coords(a) } -> std::convertible_to<std::vector<std::uint64_t>>;
  { r.from_coords(c) } -> std::convertible_to<typename R::Element>;
};

/// The cyclic algebra (K/F, rho, c) = K + K e + ... + K e^{n-1} with
/// e x = rho(x) e and e^n = c, over a commutative base ring standing in for K
/// (a number field, its ring of integers, or a finite quotient of it).
template <CoefficientRing Base>
class CyclicAlgebraRing {
 public:
  using BaseElement = typename Base::Element;
  using Element = std::vector<BaseElement>;
  using Map = std::function<BaseElement(const BaseElement&)>;

  /// Throws AxiomViolation unless rho has order dividing n on the additive
  /// generators, rho is multiplicative on them and rho(c) = c.
  CyclicAlgebraRing(Base base, Map rho, int n, BaseElement c, std::string label = "e")
      : base_(std::move(base)), rho_(std::move(rho)), n_(n), c_(std::move(c)), label_(std::move(label)) {
    if (n_ < 1) throw InvalidArgument("cyclic algebra degree must be positive");
    if (!base_.is_commutative()) throw UnsupportedCoefficientRing("cyclic algebra needs a commutative base");
    if (!base_.equal(rho_(c_), c_)) throw AxiomViolation("rho does not fix c = " + base_.to_string(c_));
    const auto gens = base_.additive_generators();
    for (const auto& g : gens) {
      if (!base_.equal(rho_pow(g, n_), g)) throw AxiomViolation("rho^n is not the identity");
      for (const auto& h : gens)
        if (!base_.equal(rho_(base_.mul(g, h)), base_.mul(rho_(g), rho_(h))))
          throw AxiomViolation("rho is not multiplicative");
    }
  }

  const Base& base() const { return base_; }
  int degree() const { return n_; }
  const BaseElement& constant() const { return c_; }
  const std::string& label() const { return label_; }
  BaseElement rho(const BaseElement& x) const { return rho_(x); }
  BaseElement rho_pow(BaseElement x, int k) const {
    for (int i = 0; i < k; ++i) x = rho_(x);
    return x;
  }

  Element zero() const { return Element(static_cast<std::size_t>(n_), base_.zero()); }
  Element one() const { return embed(base_.one()); }
  Element embed(const BaseElement& k) const {
    Element out = zero();
    out[0] = k;
    return out;
  }
  /// k e^i
  Element monomial(const BaseElement& k, int i) const {
    Element out = zero();
    out[static_cast<std::size_t>(i)] = k;
    return out;
  }

  Element add(const Element& a, const Element& b) const {
    Element out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = base_.add(a[i], b[i]);
    return out;
  }
  Element sub(const Element& a, const Element& b) const {
    Element out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = base_.sub(a[i], b[i]);
    return out;
  }
  Element neg(const Element& a) const {
    Element out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = base_.neg(a[i]);
    return out;
  }
  /// (x e^i)(y e^j) = x rho^i(y) e^{i+j}, folding e^n = c.
  Element mul(const Element& a, const Element& b) const {
    Element out = zero();
    for (int j = 0; j < n_; ++j) {
      if (base_.is_zero(b[static_cast<std::size_t>(j)])) continue;
      BaseElement y = b[static_cast<std::size_t>(j)];
      for (int i = 0; i < n_; ++i) {
        if (i > 0) y = rho_(y);
        if (base_.is_zero(a[static_cast<std::size_t>(i)])) continue;
        BaseElement term = base_.mul(a[static_cast<std::size_t>(i)], y);
        int k = i + j;
        if (k >= n_) {
          term = base_.mul(term, c_);
          k -= n_;
        }
        out[static_cast<std::size_t>(k)] = base_.add(out[static_cast<std::size_t>(k)], term);
      }
    }
    return out;
  }
  bool is_zero(const Element& a) const {
    for (const auto& x : a)
      if (!base_.is_zero(x)) return false;
    return true;
  }
  bool equal(const Element& a, const Element& b) const {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (!base_.equal(a[i], b[i])) return false;
    return true;
  }

  /// Base-coordinate matrix of v -> v a, column i = coordinates of e^i a.
  Matrix<BaseElement> right_matrix(const Element& a) const {
    Matrix<BaseElement> m(static_cast<std::size_t>(n_), std::vector<BaseElement>(static_cast<std::size_t>(n_)));
    for (int i = 0; i < n_; ++i) {
      Element col = mul(monomial(base_.one(), i), a);
      for (int r = 0; r < n_; ++r) m[static_cast<std::size_t>(r)][static_cast<std::size_t>(i)] = col[static_cast<std::size_t>(r)];
    }
    return m;
  }

  /// Two-sided inverse when it exists; solves y a = 1 over the base.
  std::optional<Element> inverse(const Element& a) const {
    if (is_zero(a)) return std::nullopt;
    if constexpr (std::is_same_v<Base, NumberFieldRing>) {
      NumberFieldRing k(base_.field_ptr(), false);
      auto y = solve_left(k, a);
      if (!y) return std::nullopt;
      if (base_.integral())
        for (const auto& x : *y)
          if (!x.is_integral()) return std::nullopt;
      return y;
    } else {
      return solve_left(base_, a);
    }
  }

  std::vector<Element> additive_generators() const {
    std::vector<Element> out;
    for (int i = 0; i < n_; ++i)
      for (const auto& g : base_.additive_generators()) out.push_back(monomial(g, i));
    return out;
  }
  bool is_finite() const { return base_.is_finite(); }
  bool is_commutative() const { return n_ == 1; }
  std::string to_string(const Element& a) const {
    std::string out;
    for (int i = 0; i < n_; ++i) {
      if (base_.is_zero(a[static_cast<std::size_t>(i)])) continue;
      if (!out.empty()) out += " + ";
      out += "(" + base_.to_string(a[static_cast<std::size_t>(i)]) + ")";
      if (i > 0) out += "*" + label_ + (i > 1 ? "^" + std::to_string(i) : "");
    }
    return out.empty() ? "0" : out;
  }

  /// Extends a base map coefficient-wise: x_0 + x_1 e + ... -> s(x_0) + s(x_1) e + ...
  std::function<Element(const Element&)> coefficientwise(Map s) const {
    return [s = std::move(s)](const Element& x) {
      Element out;
      out.reserve(x.size());
      for (const auto& v : x) out.push_back(s(v));
      return out;
    };
  }

  // Finite interface, available when the base is finite.
  std::uint64_t cardinality() const
    requires FiniteRing<Base>
  {
    std::uint64_t q = 1;
    for (int i = 0; i < n_; ++i) q *= base_.cardinality();
    return q;
  }
  Element element(std::uint64_t idx) const
    requires FiniteRing<Base>
  {
    Element out;
    for (int i = 0; i < n_; ++i) {
      out.push_back(base_.element(idx % base_.cardinality()));
      idx /= base_.cardinality();
    }
    return out;
  }
  std::uint64_t index(const Element& a) const
    requires FiniteRing<Base>
  {
    std::uint64_t idx = 0;
    for (int i = n_ - 1; i >= 0; --i) idx = idx * base_.cardinality() + base_.index(a[static_cast<std::size_t>(i)]);
    return idx;
  }
  /// A degree-n cyclic algebra over a finite field is never a field for n > 1.
  bool is_field() const
    requires FiniteRing<Base>
  {
    return n_ == 1 && base_.is_field();
  }
  std::uint64_t characteristic() const
    requires FiniteRing<Base>
  {
    return base_.characteristic();
  }
  std::vector<std::uint64_t> moduli() const
    requires FiniteCoordinateRing<Base>
  {
    std::vector<std::uint64_t> out;
    for (int i = 0; i < n_; ++i)
      for (auto d : base_.moduli()) out.push_back(d);
    return out;
  }
  std::vector<std::uint64_t> coords(const Element& a) const
    requires FiniteCoordinateRing<Base>
  {
    std::vector<std::uint64_t> out;
    for (const auto& x : a)
      for (auto v : base_.coords(x)) out.push_back(v);
    return out;
  }
  Element from_coords(const std::vector<std::uint64_t>& c) const
    requires FiniteCoordinateRing<Base>
  {
    const std::size_t r = base_.moduli().size();
    Element out;
    for (int i = 0; i < n_; ++i)
      out.push_back(base_.from_coords(std::vector<std::uint64_t>(c.begin() + static_cast<std::ptrdiff_t>(i * r),
                                                                 c.begin() + static_cast<std::ptrdiff_t>((i + 1) * r))));
    return out;
  }

 private:
  // Gaussian elimination for y with right_matrix(a) y = coords(1), pivoting on units.
  template <class Ring>
  std::optional<Element> solve_left(const Ring& ring, const Element& a) const {
    const std::size_t n = static_cast<std::size_t>(n_);
    Matrix<BaseElement> m = right_matrix(a);
    for (auto& row : m) row.push_back(ring.zero());
    m[0][n] = ring.one();
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t piv = n;
      std::optional<BaseElement> inv;
      for (std::size_t r = col; r < n && piv == n; ++r) {
        if (ring.is_zero(m[r][col])) continue;
        inv = ring.inverse(m[r][col]);
        if (inv) piv = r;
      }
      if (piv == n) {
        if constexpr (FiniteRing<Base>) {
          return brute_force_inverse(a);
        } else {
          return std::nullopt;
        }
      }
      std::swap(m[piv], m[col]);
      for (auto& v : m[col]) v = ring.mul(*inv, v);
      for (std::size_t r = 0; r < n; ++r) {
        if (r == col || ring.is_zero(m[r][col])) continue;
        const BaseElement f = m[r][col];
        for (std::size_t k = col; k <= n; ++k) m[r][k] = ring.sub(m[r][k], ring.mul(f, m[col][k]));
      }
    }
    Element y;
    for (std::size_t r = 0; r < n; ++r) y.push_back(m[r][n]);
    if (!equal(mul(y, a), one()) || !equal(mul(a, y), one())) return std::nullopt;
    return y;
  }

  std::optional<Element> brute_force_inverse(const Element& a) const
    requires FiniteRing<Base>
  {
    const std::uint64_t total = cardinality();
    if (total > 10'000'000) throw BudgetExceeded("inverse search in a cyclic algebra over a non-field");
    for (std::uint64_t i = 0; i < total; ++i) {
      Element y = element(i);
      if (equal(mul(y, a), one()) && equal(mul(a, y), one())) return y;
    }
    return std::nullopt;
  }

  Base base_;
  Map rho_;
  int n_;
  BaseElement c_;
  std::string label_;
};

}  // namespace petit
