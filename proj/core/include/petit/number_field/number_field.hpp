#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "petit/exact/bigint.hpp"
#include "petit/exact/linalg.hpp"

namespace petit {

/// Element of a number field as rational coordinates over the integral basis.
struct FieldElement {
  std::vector<BigRational> coords;

  bool is_zero() const;
  bool is_integral() const;
  friend bool operator==(const FieldElement&, const FieldElement&) = default;
};

/// Ring automorphism given by the images of the basis. images[i] holds the
/// coordinates of sigma(b_i).
struct FieldAutomorphism {
  std::string name;
  std::vector<FieldElement> images;
  int order = 1;
  std::string fixed_subfield;  ///< empty when not declared
};

/// sigma-derivation: additive map with delta(ab) = sigma(a) delta(b) + delta(a) b.
struct FieldDerivation {
  std::string name;
  std::string automorphism;
  std::vector<FieldElement> images;
};

/// Subfield spanned by a subset of the integral basis.
struct Subfield {
  std::string name;
  std::vector<std::size_t> basis_indices;
};

/// Complex embedding given by the numeric images of the basis.
struct Embedding {
  std::string name;
  std::vector<std::complex<double>> images;
};

class NumberField {
 public:
  /// Validates every invariant; throws AxiomViolation, BadAutomorphism or
  /// ConfigError on failure.
  NumberField(std::string name, std::vector<std::string> basis, std::vector<std::vector<std::vector<BigInt>>> mul_table,
              std::vector<FieldAutomorphism> automorphisms, std::vector<FieldDerivation> derivations,
              std::vector<Subfield> subfields, std::vector<Embedding> embeddings, std::string conjugation = {});

  const std::string& name() const { return name_; }
  std::size_t degree() const { return basis_.size(); }
  const std::vector<std::string>& basis_labels() const { return basis_; }
  /// c_{ijk}: b_i b_j = sum_k c_{ijk} b_k
  const BigInt& structure_constant(std::size_t i, std::size_t j, std::size_t k) const { return table_[i][j][k]; }

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement basis(std::size_t i) const;
  FieldElement from_integer(const BigInt& v) const;
  FieldElement from_rational(const BigRational& v) const;
  FieldElement make(std::vector<BigRational> coords) const;
  FieldElement make_integral(const std::vector<long>& coords) const;

  FieldElement add(const FieldElement& a, const FieldElement& b) const;
  FieldElement sub(const FieldElement& a, const FieldElement& b) const;
  FieldElement neg(const FieldElement& a) const;
  FieldElement mul(const FieldElement& a, const FieldElement& b) const;
  FieldElement scale(const FieldElement& a, const BigRational& k) const;
  FieldElement pow(const FieldElement& a, unsigned e) const;
  /// Throws ZeroInverse for 0.
  FieldElement inverse(const FieldElement& a) const;

  /// Matrix of y -> a*y on coordinate columns.
  QMatrix multiplication_matrix(const FieldElement& a) const;
  BigRational norm(const FieldElement& a) const;
  BigRational trace(const FieldElement& a) const;

  const FieldAutomorphism& automorphism(const std::string& name) const;
  const std::vector<FieldAutomorphism>& automorphisms() const { return automorphisms_; }
  bool has_automorphism(const std::string& name) const;
  FieldElement apply(const FieldAutomorphism& s, const FieldElement& x) const;
  FieldElement apply_power(const FieldAutomorphism& s, const FieldElement& x, int k) const;
  bool is_fixed_by(const FieldElement& x, const FieldAutomorphism& s) const;

  const FieldDerivation& derivation(const std::string& name) const;
  const std::vector<FieldDerivation>& derivations() const { return derivations_; }
  FieldElement apply(const FieldDerivation& d, const FieldElement& x) const;

  const Subfield& subfield(const std::string& name) const;
  const std::vector<Subfield>& subfields() const { return subfields_; }
  bool in_subfield(const FieldElement& x, const Subfield& s) const;
  /// The subfield as a number field on its own basis indices.
  NumberField subfield_as_field(const std::string& name) const;
  /// Coordinates of x (in the subfield) on the subfield's basis, and back.
  FieldElement restrict_to(const FieldElement& x, const Subfield& s) const;
  FieldElement extend_from(const FieldElement& y, const Subfield& s) const;

  /// Whether 1, d, ..., d^(m-1) are linearly independent over the subfield.
  bool power_independence(const FieldElement& d, int m, const Subfield& s) const;

  bool has_embedding() const { return !embeddings_.empty(); }
  const std::vector<Embedding>& embeddings() const { return embeddings_; }
  /// Throws EmbeddingMissing when no embedding is configured.
  std::complex<double> embed(const FieldElement& x, std::size_t which = 0) const;
  /// Name of an automorphism acting as complex conjugation under the default
  /// embedding, or empty.
  const std::string& conjugation() const { return conjugation_; }

  std::string to_string(const FieldElement& x) const;

 private:
  void validate();
  void check_dimension(const FieldElement& a) const;

  std::string name_;
  std::vector<std::string> basis_;
  std::vector<std::vector<std::vector<BigInt>>> table_;
  std::vector<FieldAutomorphism> automorphisms_;
  std::vector<FieldDerivation> derivations_;
  std::vector<Subfield> subfields_;
  std::vector<Embedding> embeddings_;
  std::string conjugation_;
};

}  // namespace petit
