#pragma once

#include <concepts>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace petit {

/// Interface shared by every coefficient ring: number-field orders, finite
/// quotient rings and cyclic algebras over either.
template <class R>
concept CoefficientRing = requires(const R& r, const typename R::Element& a, const typename R::Element& b) {
  typename R::Element;
  { r.zero() } -> std::convertible_to<typename R::Element>;
  { r.one() } -> std::convertible_to<typename R::Element>;
  { r.add(a, b) } -> std::convertible_to<typename R::Element>;
  { r.sub(a, b) } -> std::convertible_to<typename R::Element>;
  { r.neg(a) } -> std::convertible_to<typename R::Element>;
  { r.mul(a, b) } -> std::convertible_to<typename R::Element>;
  { r.is_zero(a) } -> std::convertible_to<bool>;
  { r.equal(a, b) } -> std::convertible_to<bool>;
  { r.inverse(a) } -> std::convertible_to<std::optional<typename R::Element>>;
  { r.additive_generators() } -> std::convertible_to<std::vector<typename R::Element>>;
  { r.is_finite() } -> std::convertible_to<bool>;
  { r.is_commutative() } -> std::convertible_to<bool>;
  { r.to_string(a) } -> std::convertible_to<std::string>;
};

/// Finite rings additionally enumerate their elements by index.
template <class R>
concept FiniteRing = CoefficientRing<R> && requires(const R& r, const typename R::Element& a, std::uint64_t i) {
  { r.cardinality() } -> std::convertible_to<std::uint64_t>;
  { r.element(i) } -> std::convertible_to<typename R::Element>;
  { r.index(a) } -> std::convertible_to<std::uint64_t>;
  { r.is_field() } -> std::convertible_to<bool>;
  { r.characteristic() } -> std::convertible_to<std::uint64_t>;
};

template <class E>
using Matrix = std::vector<std::vector<E>>;

template <CoefficientRing R>
Matrix<typename R::Element> identity_matrix(const R& ring, std::size_t n) {
  Matrix<typename R::Element> m(n, std::vector<typename R::Element>(n, ring.zero()));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = ring.one();
  return m;
}

template <CoefficientRing R>
Matrix<typename R::Element> matrix_mul(const R& ring, const Matrix<typename R::Element>& a,
                                       const Matrix<typename R::Element>& b) {
  const std::size_t n = a.size(), k = b.size(), c = k ? b[0].size() : 0;
  Matrix<typename R::Element> out(n, std::vector<typename R::Element>(c, ring.zero()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (ring.is_zero(a[i][l])) continue;
      for (std::size_t j = 0; j < c; ++j) out[i][j] = ring.add(out[i][j], ring.mul(a[i][l], b[l][j]));
    }
  return out;
}

template <CoefficientRing R>
std::vector<typename R::Element> matrix_apply(const R& ring, const Matrix<typename R::Element>& a,
                                              const std::vector<typename R::Element>& v) {
  std::vector<typename R::Element> out(a.size(), ring.zero());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] = ring.add(out[i], ring.mul(a[i][j], v[j]));
  return out;
}

}  // namespace petit
