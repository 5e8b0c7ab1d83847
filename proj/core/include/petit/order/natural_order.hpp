#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "petit/algebra/petit_algebra.hpp"
#include "petit/finite/decompose.hpp"
#include "petit/finite/quotient_ring.hpp"
#include "petit/number_field/ideal.hpp"
#include "petit/ring/cyclic_algebra.hpp"
#include "petit/ring/number_field_ring.hpp"

namespace petit {

/// Lambda = O_K[t; sigma, delta] / O_K[t; sigma, delta] f.
struct CyclicOrderSpec {
  std::shared_ptr<const NumberField> field;
  std::string sigma;
  std::string delta;                  ///< empty for delta = 0
  std::vector<FieldElement> modulus;  ///< f, low to high, monic
  std::string center;                 ///< subfield whose ring of integers is O_F
};

using OrderAlgebra = PetitAlgebra<NumberFieldRing>;
using QuotientPetit = PetitAlgebra<FiniteQuotientRing>;

class NaturalOrder {
 public:
  using Element = OrderAlgebra::Element;

  /// Throws CoefficientsNotIntegral, NonMonicModulus, ConfigError.
  explicit NaturalOrder(CyclicOrderSpec spec);

  const CyclicOrderSpec& spec() const { return spec_; }
  const NumberField& field() const { return *spec_.field; }
  const OrderAlgebra& algebra() const { return algebra_; }
  const FieldAutomorphism& sigma() const { return field().automorphism(spec_.sigma); }
  int degree() const { return algebra_.degree(); }
  /// Z-rank m [K : Q].
  std::size_t rank() const { return static_cast<std::size_t>(degree()) * field().degree(); }
  bool contains(const Element& x) const;
  /// Element with the given integer coordinates, coefficient of t^j first by j.
  Element make(const std::vector<std::vector<long>>& coords) const;

  /// Sufficient division criteria for t^m - d; unknown for other shapes.
  DivisionStatus division_status(std::string* reason = nullptr) const;

 private:
  CyclicOrderSpec spec_;
  OrderAlgebra algebra_;
};

/// Lambda / I Lambda realized as S_fbar over O_K / I O_K.
struct QuotientAlgebra {
  std::shared_ptr<const NaturalOrder> source;
  IntegralIdeal ideal;
  bool experimental_ideal = false;  ///< more than one generator: representatives not canonical
  FiniteQuotientRing coefficients;
  InducedMap sigma_bar;
  std::optional<InducedMap> delta_bar;
  QuotientPetit target;

  QuotientPetit::Element psi(const NaturalOrder::Element& x) const;
  /// Canonical lift with least nonnegative SNF residues.
  NaturalOrder::Element lift(const QuotientPetit::Element& y) const;
  /// Every coefficient lies in I O_K.
  bool in_ideal_lattice(const NaturalOrder::Element& x) const;
  /// |O_K / I O_K|^m
  std::uint64_t cardinality() const;
};

/// Throws ZeroIdeal, NotWellDefined, BudgetExceeded.
QuotientAlgebra reduce_mod(std::shared_ptr<const NaturalOrder> order, const IntegralIdeal& ideal,
                           std::uint64_t budget = 1'000'000);

/// O_F / I for the center subring of the order.
FiniteQuotientRing center_quotient(const NaturalOrder& order, const IntegralIdeal& ideal, std::uint64_t budget = 1'000'000);

/// One factor O_K / q^s O_K of the coefficient quotient cut out by a
/// primitive idempotent of O_F / I, with its Petit algebra.
struct QuotientComponent {
  std::string label;
  FiniteQuotientRing::Element center_idempotent;  ///< in O_F / I
  CrtComponent coefficient;                       ///< inside O_K / I O_K
  std::uint64_t center_cardinality = 0;           ///< |O_F / q^s|
  InducedMap sigma_bar;
  QuotientPetit algebra;
  std::size_t slots = 0;        ///< CRT factors of the component coefficient ring
  bool slots_cyclic = false;    ///< sigma_bar permutes them in one orbit
  std::uint64_t cardinality() const;
};

/// Decomposition of Lambda / I Lambda along the prime-power factors of I in
/// O_F; component cardinalities multiply to |Lambda / I Lambda|.
std::vector<QuotientComponent> decompose_quotient(const QuotientAlgebra& q, std::uint64_t budget = 1'000'000);

/// Characteristic polynomial over K (coefficients low to high, monic) by the
/// Faddeev-LeVerrier recursion.
std::vector<FieldElement> characteristic_polynomial(const NumberField& k, const Matrix<FieldElement>& a);

/// Evaluates the characteristic polynomial of gamma(a) at a with left-to-right
/// powers a^{k+1} = a^k o a; true when the result is 0.
bool charpoly_annihilation_check(const NaturalOrder& order, const NaturalOrder::Element& a);

// ---------------------------------------------------------------------------
// Iterated (generalized cyclic) orders over D = (K/F, rho, c).

struct IteratedOrderSpec {
  std::shared_ptr<const NumberField> field;
  std::string rho;     ///< inner automorphism generating Gal(K/F)
  int n = 2;           ///< inner degree
  FieldElement c;      ///< e^n = c, in O_F0
  std::string sigma;   ///< outer automorphism, extended coefficient-wise
  int m = 2;           ///< outer degree
  FieldElement d;      ///< f = t^m - d, d in K
  std::string center;  ///< subfield F0
};

using InnerOrder = CyclicAlgebraRing<NumberFieldRing>;
using IteratedAlgebra = PetitAlgebra<InnerOrder>;
using InnerQuotient = CyclicAlgebraRing<FiniteQuotientRing>;
using IteratedQuotientPetit = PetitAlgebra<InnerQuotient>;

class IteratedOrder {
 public:
  using Element = IteratedAlgebra::Element;

  /// Checks that rho and sigma commute, sigma(c) = c, c and d integral, and
  /// the declared orders of rho and sigma; SpecMismatch or CoefficientsNotIntegral.
  explicit IteratedOrder(IteratedOrderSpec spec);

  const IteratedOrderSpec& spec() const { return spec_; }
  const NumberField& field() const { return *spec_.field; }
  const InnerOrder& inner() const { return inner_; }
  const IteratedAlgebra& algebra() const { return algebra_; }
  std::size_t rank() const { return static_cast<std::size_t>(spec_.m * spec_.n) * field().degree(); }
  bool contains(const Element& x) const;

 private:
  IteratedOrderSpec spec_;
  InnerOrder inner_;
  IteratedAlgebra algebra_;
};

struct IteratedQuotient {
  std::shared_ptr<const IteratedOrder> source;
  IntegralIdeal ideal;
  FiniteQuotientRing coefficients;
  InducedMap rho_bar;
  InducedMap sigma_bar;
  InnerQuotient inner;
  IteratedQuotientPetit target;

  IteratedQuotientPetit::Element psi(const IteratedOrder::Element& x) const;
  IteratedOrder::Element lift(const IteratedQuotientPetit::Element& y) const;
  bool in_ideal_lattice(const IteratedOrder::Element& x) const;
  std::uint64_t cardinality() const;  ///< |O_K / I O_K|^{mn}; 0 if it overflows
};

IteratedQuotient reduce_mod(std::shared_ptr<const IteratedOrder> order, const IntegralIdeal& ideal,
                            std::uint64_t budget = 1'000'000);

bool charpoly_annihilation_check(const IteratedOrder& order, const IteratedOrder::Element& a);

}  // namespace petit
