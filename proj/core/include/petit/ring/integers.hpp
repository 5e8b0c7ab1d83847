#pragma once

#include <optional>
#include <string>
#include <vector>

#include "petit/exact/bigint.hpp"

namespace petit {

/// The ring Z.
struct IntegerRing {
  using Element = BigInt;
  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  bool is_zero(const Element& a) const { return a == 0; }
  bool equal(const Element& a, const Element& b) const { return a == b; }
  std::optional<Element> inverse(const Element& a) const {
    if (a == 1 || a == -1) return a;
    return std::nullopt;
  }
  std::vector<Element> additive_generators() const { return {Element(1)}; }
  bool is_finite() const { return false; }
  bool is_commutative() const { return true; }
  std::string to_string(const Element& a) const { return a.get_str(); }
};

/// The field Q.
struct RationalField {
  using Element = BigRational;
  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  bool is_zero(const Element& a) const { return a == 0; }
  bool equal(const Element& a, const Element& b) const { return a == b; }
  std::optional<Element> inverse(const Element& a) const {
    if (a == 0) return std::nullopt;
    return Element(1 / a);
  }
  std::vector<Element> additive_generators() const { return {Element(1)}; }
  bool is_finite() const { return false; }
  bool is_commutative() const { return true; }
  std::string to_string(const Element& a) const { return a.get_str(); }
};

}  // namespace petit
