#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "petit/ring/concepts.hpp"
#include "petit/util/error.hpp"

namespace petit {

/// Degree of a skew polynomial; the zero polynomial has degree minus infinity,
/// which compares below every natural number.
class Degree {
 public:
  static Degree minus_infinity() { return Degree(); }
  explicit Degree(int d) : value_(d) {}

  bool is_minus_infinity() const { return value_ == kNegInf; }
  int value() const {
    if (is_minus_infinity()) throw InvalidArgument("degree of the zero polynomial has no integer value");
    return value_;
  }
  friend auto operator<=>(const Degree&, const Degree&) = default;
  friend Degree operator+(Degree a, Degree b) {
    if (a.is_minus_infinity() || b.is_minus_infinity()) return minus_infinity();
    return Degree(a.value_ + b.value_);
  }
  std::string to_string() const { return is_minus_infinity() ? "-inf" : std::to_string(value_); }

 private:
  Degree() : value_(kNegInf) {}
  static constexpr int kNegInf = std::numeric_limits<int>::min();
  int value_;
};

/// Coefficients low to high with no trailing zeros.
template <class E>
struct SkewPoly {
  std::vector<E> coeffs;

  Degree degree() const { return coeffs.empty() ? Degree::minus_infinity() : Degree(static_cast<int>(coeffs.size()) - 1); }
  bool is_zero() const { return coeffs.empty(); }
  friend bool operator==(const SkewPoly&, const SkewPoly&) = default;
};

/// S[t; sigma, delta] with t a = sigma(a) t + delta(a).
template <CoefficientRing R>
class SkewPolyRing {
 public:
  using Coeff = typename R::Element;
  using Poly = SkewPoly<Coeff>;
  using Map = std::function<Coeff(const Coeff&)>;

  /// An empty delta means delta = 0. sigma is checked on pairs of additive
  /// generators for additivity-compatible multiplicativity and delta for the
  /// twisted Leibniz rule; AxiomViolation on failure.
  SkewPolyRing(R ring, Map sigma, Map delta = {}, std::string name = "t")
      : ring_(std::move(ring)), sigma_(std::move(sigma)), delta_(std::move(delta)), var_(std::move(name)) {
    if (!sigma_) throw InvalidArgument("sigma must be provided");
    const auto gens = ring_.additive_generators();
    std::vector<Coeff> probe = gens;
    probe.push_back(ring_.one());
    if (!ring_.equal(sigma_(ring_.one()), ring_.one())) throw AxiomViolation("sigma(1) != 1");
    for (const auto& a : probe)
      for (const auto& b : probe) {
        if (!ring_.equal(sigma_(ring_.mul(a, b)), ring_.mul(sigma_(a), sigma_(b))))
          throw AxiomViolation("sigma is not multiplicative on " + ring_.to_string(a) + ", " + ring_.to_string(b));
        if (!ring_.equal(sigma_(ring_.add(a, b)), ring_.add(sigma_(a), sigma_(b))))
          throw AxiomViolation("sigma is not additive");
        if (delta_) {
          const Coeff lhs = delta_(ring_.mul(a, b));
          const Coeff rhs = ring_.add(ring_.mul(sigma_(a), delta_(b)), ring_.mul(delta_(a), b));
          if (!ring_.equal(lhs, rhs))
            throw AxiomViolation("delta violates the twisted Leibniz rule on " + ring_.to_string(a) + ", " +
                                 ring_.to_string(b));
        }
      }
  }

  const R& coefficients() const { return ring_; }
  const std::string& variable() const { return var_; }
  bool has_derivation() const { return static_cast<bool>(delta_); }

  Coeff sigma(const Coeff& a) const { return sigma_(a); }
  Coeff sigma_pow(Coeff a, int k) const {
    for (int i = 0; i < k; ++i) a = sigma_(a);
    return a;
  }
  Coeff delta(const Coeff& a) const { return delta_ ? delta_(a) : ring_.zero(); }

  Poly zero() const { return {}; }
  Poly one() const { return constant(ring_.one()); }
  Poly t() const { return monomial(ring_.one(), 1); }
  Poly constant(const Coeff& c) const { return make({c}); }
  Poly monomial(const Coeff& c, int k) const {
    std::vector<Coeff> v(static_cast<std::size_t>(k) + 1, ring_.zero());
    v.back() = c;
    return make(std::move(v));
  }
  Poly make(std::vector<Coeff> c) const {
    while (!c.empty() && ring_.is_zero(c.back())) c.pop_back();
    return Poly{std::move(c)};
  }
  const Coeff& leading(const Poly& p) const {
    if (p.is_zero()) throw InvalidArgument("zero polynomial has no leading coefficient");
    return p.coeffs.back();
  }
  Coeff coefficient(const Poly& p, std::size_t i) const { return i < p.coeffs.size() ? p.coeffs[i] : ring_.zero(); }
  bool is_monic(const Poly& p) const { return !p.is_zero() && ring_.equal(leading(p), ring_.one()); }

  Poly add(const Poly& a, const Poly& b) const {
    std::vector<Coeff> c(std::max(a.coeffs.size(), b.coeffs.size()), ring_.zero());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = ring_.add(coefficient(a, i), coefficient(b, i));
    return make(std::move(c));
  }
  Poly sub(const Poly& a, const Poly& b) const {
    std::vector<Coeff> c(std::max(a.coeffs.size(), b.coeffs.size()), ring_.zero());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = ring_.sub(coefficient(a, i), coefficient(b, i));
    return make(std::move(c));
  }
  Poly neg(const Poly& a) const { return sub(zero(), a); }
  /// c * p (left scalar multiplication, coefficient-wise).
  Poly scale_left(const Coeff& c, const Poly& p) const {
    std::vector<Coeff> out;
    out.reserve(p.coeffs.size());
    for (const auto& x : p.coeffs) out.push_back(ring_.mul(c, x));
    return make(std::move(out));
  }
  /// t * p = sum sigma(p_k) t^{k+1} + delta(p_k) t^k.
  Poly times_t(const Poly& p) const {
    std::vector<Coeff> out(p.coeffs.size() + 1, ring_.zero());
    for (std::size_t k = 0; k < p.coeffs.size(); ++k) {
      out[k + 1] = ring_.add(out[k + 1], sigma_(p.coeffs[k]));
      if (delta_) out[k] = ring_.add(out[k], delta_(p.coeffs[k]));
    }
    return make(std::move(out));
  }
  Poly mul(const Poly& g, const Poly& h) const {
    if (g.is_zero() || h.is_zero()) return zero();
    std::vector<Coeff> acc(g.coeffs.size() + h.coeffs.size() - 1, ring_.zero());
    Poly ti = h;  // t^i * h
    for (std::size_t i = 0; i < g.coeffs.size(); ++i) {
      if (i > 0) ti = times_t(ti);
      if (ring_.is_zero(g.coeffs[i])) continue;
      for (std::size_t k = 0; k < ti.coeffs.size(); ++k)
        acc[k] = ring_.add(acc[k], ring_.mul(g.coeffs[i], ti.coeffs[k]));
    }
    return make(std::move(acc));
  }
  bool equal(const Poly& a, const Poly& b) const {
    if (a.coeffs.size() != b.coeffs.size()) return false;
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
      if (!ring_.equal(a.coeffs[i], b.coeffs[i])) return false;
    return true;
  }

  /// g = q f + r with deg r < deg f. Throws NonInvertibleLeadingCoefficient.
  std::pair<Poly, Poly> right_divmod(const Poly& g, const Poly& f) const {
    if (f.is_zero()) throw InvalidArgument("division by the zero polynomial");
    const int m = f.degree().value();
    std::optional<Coeff> lead_inv;
    if (!ring_.equal(leading(f), ring_.one())) {
      lead_inv = ring_.inverse(leading(f));
      if (!lead_inv) throw NonInvertibleLeadingCoefficient(ring_.to_string(leading(f)));
    }
    Poly r = g;
    std::vector<Coeff> q;
    while (!r.is_zero() && r.degree().value() >= m) {
      const int k = r.degree().value() - m;
      // the leading coefficient of t^k f is sigma^k(u)
      Coeff factor = leading(r);
      if (lead_inv) {
        auto inv = ring_.inverse(sigma_pow(leading(f), k));
        if (!inv) throw NonInvertibleLeadingCoefficient(ring_.to_string(sigma_pow(leading(f), k)));
        factor = ring_.mul(factor, *inv);
      }
      if (q.size() <= static_cast<std::size_t>(k)) q.resize(static_cast<std::size_t>(k) + 1, ring_.zero());
      q[static_cast<std::size_t>(k)] = ring_.add(q[static_cast<std::size_t>(k)], factor);
      r = sub(r, mul(monomial(factor, k), f));
    }
    return {make(std::move(q)), r};
  }
  Poly mod_r(const Poly& g, const Poly& f) const { return right_divmod(g, f).second; }
  bool right_divides(const Poly& h, const Poly& g) const { return mod_r(g, h).is_zero(); }

  /// f a in R f for every additive generator a, and f t in R f.
  bool is_invariant(const Poly& f) const {
    if (!ring_.is_finite() && !(f.coeffs.size() >= 2 && is_monic(f)))
      throw UnsupportedCoefficientRing("invariance needs a finite coefficient ring or a monic modulus");
    for (const auto& a : ring_.additive_generators())
      if (!mod_r(mul(f, constant(a)), f).is_zero()) return false;
    return mod_r(mul(f, t()), f).is_zero();
  }

  std::string to_string(const Poly& p) const {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
      if (ring_.is_zero(p.coeffs[i])) continue;
      if (!out.empty()) out += " + ";
      const bool unit = ring_.equal(p.coeffs[i], ring_.one());
      if (i == 0) {
        out += ring_.to_string(p.coeffs[i]);
        continue;
      }
      if (!unit) out += "(" + ring_.to_string(p.coeffs[i]) + ")*";
      out += var_;
      if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
  }

 private:
  R ring_;
  Map sigma_;
  Map delta_;
  std::string var_;
};

/// Calls visit(h) for every monic polynomial of degree k over a finite ring,
/// in index order of its lower coefficients; stops early when visit returns true.
template <FiniteRing R, class Visit>
bool for_each_monic(const SkewPolyRing<R>& ring, int k, Visit&& visit) {
  const R& s = ring.coefficients();
  const std::uint64_t q = s.cardinality();
  std::vector<std::uint64_t> digits(static_cast<std::size_t>(k), 0);
  while (true) {
    std::vector<typename R::Element> c;
    c.reserve(static_cast<std::size_t>(k) + 1);
    for (auto d : digits) c.push_back(s.element(d));
    c.push_back(s.one());
    if (visit(ring.make(std::move(c)))) return true;
    std::size_t i = 0;
    while (i < digits.size() && ++digits[i] == q) digits[i++] = 0;
    if (i == digits.size()) return false;
  }
}

/// Number of monic candidates of degrees 1..m-1 (saturating).
template <FiniteRing R>
std::uint64_t right_factor_candidates(const SkewPolyRing<R>& ring, int m) {
  const std::uint64_t q = ring.coefficients().cardinality();
  std::uint64_t total = 0, pw = 1;
  for (int k = 1; k < m; ++k) {
    if (pw > std::numeric_limits<std::uint64_t>::max() / q) return std::numeric_limits<std::uint64_t>::max();
    pw *= q;
    total += pw;
  }
  return total;
}

/// A monic right factor of f of degree 1..deg f - 1, or nothing.
template <FiniteRing R>
std::optional<typename SkewPolyRing<R>::Poly> find_right_factor(const SkewPolyRing<R>& ring,
                                                                 const typename SkewPolyRing<R>::Poly& f,
                                                                 std::uint64_t budget = 10'000'000) {
  if (!ring.coefficients().is_field()) throw NotAFiniteField("coefficient ring is not a field");
  if (f.is_zero() || f.degree().value() < 1) throw InvalidArgument("irreducibility needs deg f >= 1");
  const int m = f.degree().value();
  if (right_factor_candidates(ring, m) > budget)
    throw BudgetExceeded("right-factor search needs more than " + std::to_string(budget) + " candidates");
  std::optional<typename SkewPolyRing<R>::Poly> found;
  for (int k = 1; k < m && !found; ++k)
    for_each_monic(ring, k, [&](const auto& h) {
      if (ring.right_divides(h, f)) found = h;
      return found.has_value();
    });
  return found;
}

/// Exhaustive monic right-factor search over a finite field. A factorization
/// f = g h over a division ring can always be rescaled to make h monic.
template <FiniteRing R>
bool is_irreducible_finite(const SkewPolyRing<R>& ring, const typename SkewPolyRing<R>::Poly& f,
                           std::uint64_t budget = 10'000'000) {
  return !find_right_factor(ring, f, budget).has_value();
}

/// Right roots a of f, i.e. t - a right-divides f.
template <FiniteRing R>
std::vector<typename R::Element> right_roots(const SkewPolyRing<R>& ring, const typename SkewPolyRing<R>::Poly& f) {
  const R& s = ring.coefficients();
  std::vector<typename R::Element> out;
  for (std::uint64_t i = 0; i < s.cardinality(); ++i) {
    const auto a = s.element(i);
    if (ring.right_divides(ring.make({s.neg(a), s.one()}), f)) out.push_back(a);
  }
  return out;
}

/// {g : deg g < deg f, f g in R f}, enumerated over a finite ring.
template <FiniteRing R>
std::vector<typename SkewPolyRing<R>::Poly> right_nucleus_by_modulus(const SkewPolyRing<R>& ring,
                                                                       const typename SkewPolyRing<R>::Poly& f,
                                                                       std::uint64_t budget = 1'000'000) {
  const R& s = ring.coefficients();
  const int m = f.degree().value();
  std::uint64_t total = 1;
  for (int i = 0; i < m; ++i) {
    if (total > budget / s.cardinality()) throw BudgetExceeded("right nucleus enumeration exceeds budget");
    total *= s.cardinality();
  }
  std::vector<typename SkewPolyRing<R>::Poly> out;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::vector<typename R::Element> c;
    std::uint64_t v = idx;
    for (int i = 0; i < m; ++i) {
      c.push_back(s.element(v % s.cardinality()));
      v /= s.cardinality();
    }
    auto g = ring.make(std::move(c));
    if (ring.mod_r(ring.mul(f, g), f).is_zero()) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace petit
