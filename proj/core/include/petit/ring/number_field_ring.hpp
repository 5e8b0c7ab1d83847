#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "petit/number_field/number_field.hpp"

namespace petit {

/// A number field K, or its ring of integers O_K when integral is set, as a
/// coefficient ring. Copies share the underlying field.
class NumberFieldRing {
 public:
  using Element = FieldElement;

  NumberFieldRing(std::shared_ptr<const NumberField> field, bool integral)
      : field_(std::move(field)), integral_(integral) {}

  const NumberField& field() const { return *field_; }
  const std::shared_ptr<const NumberField>& field_ptr() const { return field_; }
  bool integral() const { return integral_; }

  Element zero() const { return field_->zero(); }
  Element one() const { return field_->one(); }
  Element add(const Element& a, const Element& b) const { return field_->add(a, b); }
  Element sub(const Element& a, const Element& b) const { return field_->sub(a, b); }
  Element neg(const Element& a) const { return field_->neg(a); }
  Element mul(const Element& a, const Element& b) const { return field_->mul(a, b); }
  bool is_zero(const Element& a) const { return a.is_zero(); }
  bool equal(const Element& a, const Element& b) const { return a == b; }
  /// In O_K only units are invertible.
  std::optional<Element> inverse(const Element& a) const {
    if (a.is_zero()) return std::nullopt;
    Element inv = field_->inverse(a);
    if (integral_ && !inv.is_integral()) return std::nullopt;
    return inv;
  }
  std::vector<Element> additive_generators() const {
    std::vector<Element> out;
    for (std::size_t i = 0; i < field_->degree(); ++i) out.push_back(field_->basis(i));
    return out;
  }
  bool is_finite() const { return false; }
  bool is_commutative() const { return true; }
  std::string to_string(const Element& a) const { return field_->to_string(a); }

 private:
  std::shared_ptr<const NumberField> field_;
  bool integral_;
};

}  // namespace petit
