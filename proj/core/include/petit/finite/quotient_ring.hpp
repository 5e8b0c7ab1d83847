#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "petit/exact/int_matrix.hpp"
#include "petit/number_field/ideal.hpp"
#include "petit/number_field/number_field.hpp"

namespace petit {

/// The finite ring O_K / I O_K in Smith-normal-form coordinates. Elements are
/// indices in mixed radix over the nontrivial elementary divisors d_1..d_r
/// (first coordinate fastest), so element(i) = i. Copies share state.
class FiniteQuotientRing {
 public:
  using Element = std::uint32_t;

  /// Throws ZeroIdeal, BudgetExceeded (cardinality above budget) or
  /// InvalidArgument for an infinite quotient.
  static FiniteQuotientRing build(std::shared_ptr<const NumberField> field, const IntegralIdeal& ideal,
                                  std::uint64_t budget = 1'000'000);

  // Coefficient-ring interface.
  Element zero() const { return 0; }
  Element one() const { return impl_->one; }
  Element add(Element a, Element b) const;
  Element sub(Element a, Element b) const;
  Element neg(Element a) const;
  Element mul(Element a, Element b) const;
  bool is_zero(Element a) const { return a == 0; }
  bool equal(Element a, Element b) const { return a == b; }
  std::optional<Element> inverse(Element a) const;
  std::vector<Element> additive_generators() const;
  bool is_finite() const { return true; }
  bool is_commutative() const { return true; }
  std::string to_string(Element a) const;

  // Finite-ring interface.
  std::uint64_t cardinality() const { return impl_->cardinality; }
  Element element(std::uint64_t i) const { return static_cast<Element>(i); }
  std::uint64_t index(Element a) const { return a; }
  bool is_field() const;
  std::uint64_t characteristic() const { return impl_->characteristic; }

  const std::vector<std::uint64_t>& moduli() const { return impl_->moduli; }
  std::vector<std::uint64_t> coords(Element a) const;
  Element from_coords(const std::vector<std::uint64_t>& c) const;
  Element scalar(std::int64_t k, Element a) const;
  Element pow(Element a, std::uint64_t e) const;

  const NumberField& field() const { return *impl_->field; }
  const std::shared_ptr<const NumberField>& field_ptr() const { return impl_->field; }
  const IntegralIdeal& ideal() const { return impl_->ideal; }
  /// Generators of the Z-lattice I O_K, as elements of O_K.
  const std::vector<FieldElement>& relations() const { return impl_->relations; }
  const SmithForm& smith() const { return impl_->smith; }

  /// pi: O_K -> Q; throws CoefficientsNotIntegral for non-integral input.
  Element project(const FieldElement& x) const;
  /// Canonical lift with least nonnegative residues in SNF coordinates.
  FieldElement lift(Element a) const;

  /// Product of the residue basis vectors eps_i * eps_j.
  Element structure_constant(std::size_t i, std::size_t j) const { return impl_->C[i][j]; }
  Element residue_basis(std::size_t i) const;

  /// Ideal generators plus extra elements (used to build CRT components).
  FiniteQuotientRing with_extra_generators(const std::vector<FieldElement>& extra, std::uint64_t budget) const;

  bool same_as(const FiniteQuotientRing& o) const { return impl_ == o.impl_; }

 private:
  struct Impl {
    std::shared_ptr<const NumberField> field;
    IntegralIdeal ideal;
    std::vector<FieldElement> relations;
    SmithForm smith;
    std::vector<std::size_t> active;  ///< SNF columns with d_i > 1
    std::vector<std::uint64_t> moduli;
    std::vector<std::uint64_t> radix;  ///< place values
    std::uint64_t cardinality = 1;
    std::uint64_t characteristic = 1;
    Element one = 0;
    std::vector<std::vector<Element>> C;
    std::vector<Element> table;  ///< full multiplication table when small
    std::vector<Element> inverse_table;  ///< 0 marks a non-unit (except for the zero ring)
    mutable std::optional<bool> field_flag;
  };
  std::shared_ptr<const Impl> impl_;

  Element mul_slow(Element a, Element b) const;
};

/// sigma-bar or delta-bar on a finite quotient ring, stored by the images of
/// the residue basis.
struct InducedMap {
  enum class Kind { Automorphism, Derivation, Endomorphism };

  FiniteQuotientRing ring;
  std::vector<FiniteQuotientRing::Element> basis_images;
  Kind kind = Kind::Automorphism;
  std::string name;
  std::vector<FiniteQuotientRing::Element> table;  ///< full image table

  FiniteQuotientRing::Element operator()(FiniteQuotientRing::Element x) const { return table[x]; }
  bool is_identity() const;
  int order() const;  ///< for automorphisms; throws if not bijective
};

/// Induces sigma on O_K/I O_K; throws NotWellDefined with a witness lattice
/// vector when sigma does not stabilize I O_K, or when the induced map fails
/// multiplicativity.
InducedMap induce_automorphism(const FieldAutomorphism& sigma, const FiniteQuotientRing& q);

/// Induces delta on the quotient and checks the twisted Leibniz rule against sigma_bar.
InducedMap induce_derivation(const FieldDerivation& delta, const InducedMap& sigma_bar, const FiniteQuotientRing& q);

InducedMap identity_map(const FiniteQuotientRing& q);
InducedMap zero_derivation(const FiniteQuotientRing& q);

/// Map defined by its action on residue basis vectors; validated as an
/// additive map (and multiplicative for automorphisms/endomorphisms).
InducedMap map_from_function(const FiniteQuotientRing& q, InducedMap::Kind kind, std::string name,
                             const std::function<FiniteQuotientRing::Element(FiniteQuotientRing::Element)>& f);

/// x -> x^p with p the characteristic; requires a prime characteristic.
InducedMap frobenius(const FiniteQuotientRing& q);

InducedMap compose(const InducedMap& a, const InducedMap& b);  ///< a after b

}  // namespace petit
