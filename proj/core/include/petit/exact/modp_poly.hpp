#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace petit {

bool is_prime(std::uint64_t n);

/// Dense univariate polynomial over the prime field F_p, coefficients low to high.
class ModPPoly {
 public:
  /// Rejects non-prime p; reduces coefficients into [0, p) and trims leading zeros.
  ModPPoly(std::uint64_t p, std::vector<std::int64_t> coefficients);

  static ModPPoly monomial(std::uint64_t p, std::size_t degree, std::uint64_t coefficient = 1);

  std::uint64_t modulus() const { return p_; }
  const std::vector<std::uint64_t>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::uint64_t leading() const { return coeffs_.empty() ? 0 : coeffs_.back(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

  ModPPoly monic() const;

  friend ModPPoly operator+(const ModPPoly& a, const ModPPoly& b);
  friend ModPPoly operator-(const ModPPoly& a, const ModPPoly& b);
  friend ModPPoly operator*(const ModPPoly& a, const ModPPoly& b);
  friend bool operator==(const ModPPoly& a, const ModPPoly& b) = default;

  /// Euclidean division; b must be nonzero.
  std::pair<ModPPoly, ModPPoly> divmod(const ModPPoly& b) const;

  std::uint64_t evaluate(std::uint64_t x) const;
  std::string to_string(char var = 'x') const;

 private:
  ModPPoly(std::uint64_t p, std::vector<std::uint64_t> reduced, int);
  void trim();

  std::uint64_t p_;
  std::vector<std::uint64_t> coeffs_;
};

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p);

struct ModPFactor {
  ModPPoly factor;
  int multiplicity;
};

/// Factorization into monic irreducibles (the unit is dropped). Candidate
/// divisors are enumerated exhaustively by increasing degree, so the search is
/// capped at p^(deg/2) <= search_limit.
std::vector<ModPFactor> factor_mod_p(const ModPPoly& f, std::uint64_t search_limit = 1'000'000);

bool is_irreducible_mod_p(const ModPPoly& f, std::uint64_t search_limit = 1'000'000);

/// Smallest monic irreducible polynomial of the given degree, in lexicographic
/// order of the coefficient vector (c_0 fastest).
ModPPoly first_irreducible(std::uint64_t p, int degree);

}  // namespace petit
