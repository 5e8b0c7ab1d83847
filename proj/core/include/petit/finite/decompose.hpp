#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "petit/finite/quotient_ring.hpp"

namespace petit {

/// One factor of Q = Q_1 x ... x Q_g, cut out by a primitive idempotent e.
struct CrtComponent {
  FiniteQuotientRing::Element idempotent;
  FiniteQuotientRing ring;  ///< O_K / (I O_K + (1 - e) O_K)
  std::vector<FiniteQuotientRing::Element> projection;  ///< Q -> component, indexed by element
  std::vector<FiniteQuotientRing::Element> embedding;   ///< component -> e Q

  FiniteQuotientRing::Element project(FiniteQuotientRing::Element x) const { return projection[x]; }
  FiniteQuotientRing::Element embed(FiniteQuotientRing::Element y) const { return embedding[y]; }
};

/// All idempotents of Q in index order (exhaustive; budget caps |Q|).
std::vector<FiniteQuotientRing::Element> idempotents(const FiniteQuotientRing& q, std::uint64_t budget = 1'000'000);

/// The component O_K / (I O_K + (1 - e) O_K) for an idempotent e of Q.
CrtComponent make_component(const FiniteQuotientRing& q, FiniteQuotientRing::Element e, std::uint64_t budget = 1'000'000);

/// Components for the complete system of primitive orthogonal idempotents,
/// ordered by idempotent index.
std::vector<CrtComponent> crt_decompose(const FiniteQuotientRing& q, std::uint64_t budget = 1'000'000);

/// Reorders components so that sigma_bar maps component j onto component
/// j+1 (mod g) within every sigma_bar-orbit; orbits are kept in order of
/// their first member. Returns the orbit lengths.
std::vector<std::size_t> order_by_orbits(std::vector<CrtComponent>& components, const InducedMap& sigma_bar);

/// Index of the component whose idempotent is sigma_bar(e_j).
std::size_t image_component(const std::vector<CrtComponent>& components, const InducedMap& sigma_bar, std::size_t j);

/// Nilpotent elements of a finite commutative ring.
std::vector<FiniteQuotientRing::Element> nilradical(const FiniteQuotientRing& q);

/// True when the ring has exactly one maximal ideal, i.e. the non-units form
/// an additive subgroup.
bool is_local(const FiniteQuotientRing& q);

struct SplittingReport {
  int e = 0;
  int f = 0;
  int g = 0;
  int degree = 0;  ///< m = [K : F]
  std::uint64_t base_residue_cardinality = 0;  ///< |O_F / q|
  std::vector<std::uint64_t> component_cardinalities;
  std::vector<std::uint64_t> residue_field_cardinalities;
  bool consistent = false;  ///< e f g = m
  bool unramified() const { return e == 1; }
};

/// Splitting data of the prime q of the subfield ring O_F in the quotient
/// Q = O_K / q O_K. Throws InvalidArgument when O_F / q is not a field.
SplittingReport splitting_report(const FiniteQuotientRing& q, const std::string& subfield, std::uint64_t budget = 1'000'000);

/// Elements fixed by an induced map, with closure data.
struct FixedSubring {
  std::vector<FiniteQuotientRing::Element> elements;
  bool closed = false;  ///< under +, *, and containing 1
  bool is_field = false;
  std::uint64_t cardinality() const { return elements.size(); }
};

FixedSubring fixed_subring(const InducedMap& m);

/// F_{p^k} as Z[x]/(g) modulo p for the first monic g of degree k irreducible
/// mod p, returned with its Frobenius.
struct GaloisField {
  FiniteQuotientRing ring;
  InducedMap frobenius;
  std::vector<long> modulus;  ///< g, low to high
};

GaloisField galois_field(std::uint64_t p, int k);

}  // namespace petit
