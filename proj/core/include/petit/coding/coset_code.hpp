#pragma once

#include <complex>
#include <cstdint>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "petit/order/natural_order.hpp"
#include "petit/util/error.hpp"

namespace petit {

using ComplexMatrix = std::vector<std::vector<std::complex<double>>>;

// ---------------------------------------------------------------------------
// Inner code

/// gamma(x) for a cyclic order, M(x) for an iterated one; exact entries in O_K.
Matrix<FieldElement> inner_matrix(const NaturalOrder& order, const NaturalOrder::Element& x);
Matrix<FieldElement> inner_matrix(const IteratedOrder& order, const IteratedOrder::Element& x);
/// Same, throwing ZeroElement for x = 0 (codeword use).
Matrix<FieldElement> codeword_matrix(const NaturalOrder& order, const NaturalOrder::Element& x);

/// Index of the named embedding (empty name: the default). EmbeddingMissing
/// when the field has none or the name is unknown.
std::size_t embedding_index(const NumberField& k, const std::string& name);
ComplexMatrix embed_matrix(const NumberField& k, const Matrix<FieldElement>& m, std::size_t embedding);
/// Partial-pivoting LU determinant.
std::complex<double> complex_det(ComplexMatrix m);

struct DetValue {
  FieldElement exact;
  double abs2 = 0;  ///< |embedding(det)|^2
};

/// Exact determinant over K, then embedded; the numeric determinant of the
/// embedded matrix must agree to 1e-9 relative or AxiomViolation is thrown.
DetValue exact_determinant(const NumberField& k, const Matrix<FieldElement>& m, std::size_t embedding);

struct MinDet {
  double value = 0;
  std::size_t argmin = 0;
  std::size_t considered = 0;  ///< nonzero matrices
};

/// Minimum of |det X|^2 over the nonzero matrices of the list; EmptyCode if none.
MinDet min_det(const NumberField& k, const std::vector<Matrix<FieldElement>>& matrices, std::size_t embedding);

/// min_det_inner * min(d_H^2, |alpha|^{2n})
double key_bound(double min_det_inner, std::size_t d_h, double alpha_abs, int n);
/// |alpha| taken in the given embedding of K.
double key_bound(double min_det_inner, std::size_t d_h, const NumberField& k, const FieldElement& alpha, int n,
                 std::size_t embedding);

// ---------------------------------------------------------------------------
// Outer codes over a quotient. A symbol is the coordinate vector of a quotient
// element over the coefficient ring (m entries, or m n for iterated).

using Symbol = std::vector<FiniteQuotientRing::Element>;
using Word = std::vector<Symbol>;

struct SymbolSpace {
  FiniteQuotientRing ring;
  std::size_t size = 0;

  std::uint64_t cardinality() const;  ///< 0 on overflow
  Symbol element(std::uint64_t i) const;
  std::uint64_t index(const Symbol& s) const;
  Symbol add(const Symbol& a, const Symbol& b) const;
  Symbol zero() const { return Symbol(size, 0); }
  bool is_zero(const Symbol& s) const;
};

SymbolSpace symbol_space(const QuotientAlgebra& q);
SymbolSpace symbol_space(const IteratedQuotient& q);

struct OuterCode {
  std::string kind;
  std::size_t length = 0;
  SymbolSpace space;
  std::vector<Word> words;
  bool additive = true;

  bool contains(const Word& w) const;
};

/// Repetition (x, ..., x); parity (x_1, ..., x_{L-1}, x_1 + ... + x_{L-1});
/// free: all L-tuples. BudgetExceeded if the code has more than budget words.
OuterCode repetition_code(const SymbolSpace& s, std::size_t length, std::uint64_t budget = 1'000'000);
OuterCode parity_code(const SymbolSpace& s, std::size_t length, std::uint64_t budget = 1'000'000);
OuterCode free_code(const SymbolSpace& s, std::size_t length, std::uint64_t budget = 1'000'000);

/// The K-bar-span B of the generator rows supplies the first coordinates
/// (x_{1,0}, ..., x_{L,0}); every other coordinate ranges freely. NotAField
/// if the coefficient quotient is not a field.
OuterCode prescribed_distance_code(const QuotientAlgebra& q, const std::vector<std::vector<FiniteQuotientRing::Element>>& base,
                                   std::size_t length, std::uint64_t budget = 1'000'000);
/// Span of the generator rows over the coefficient field.
std::vector<std::vector<FiniteQuotientRing::Element>> linear_span(const FiniteQuotientRing& field,
                                                                  const std::vector<std::vector<FiniteQuotientRing::Element>>& rows,
                                                                  std::uint64_t budget = 1'000'000);

/// Minimum distance: minimum nonzero weight for additive codes, pairwise
/// otherwise. EmptyCode for fewer than two words.
std::size_t hamming_distance(const OuterCode& c);
/// Pairwise scan regardless of additivity.
std::size_t hamming_distance_pairwise(const OuterCode& c);

// ---------------------------------------------------------------------------
// Coset code

Word project_codeword(const QuotientAlgebra& q, const std::vector<NaturalOrder::Element>& xs);
Word project_codeword(const IteratedQuotient& q, const std::vector<IteratedOrder::Element>& xs);
/// Canonical lift; NotInOuterCode when w is not a codeword.
std::vector<NaturalOrder::Element> lift_codeword(const QuotientAlgebra& q, const OuterCode& c, const Word& w);
std::vector<IteratedOrder::Element> lift_codeword(const IteratedQuotient& q, const OuterCode& c, const Word& w);

/// One line-delimited record per outer codeword: index, Lambda coordinates,
/// matrix entries (basis coordinates), exact determinants, numeric |det|^2.
std::vector<nlohmann::json> codebook_records(const QuotientAlgebra& q, const OuterCode& c, std::size_t embedding,
                                             std::size_t limit = SIZE_MAX);

/// Exhaustive coset code over a coefficient box: every Lambda element whose
/// coefficients have the listed basis coordinates in [-box, box] (others 0),
/// and every L-tuple of them projecting into the outer code.
struct BoxEnumeration {
  std::size_t box_elements = 0;
  std::size_t codewords = 0;        ///< nonzero tuples
  double min_inner_det = 0;         ///< min |det gamma(x)|^2 over nonzero box elements (exact, embedded)
  double min_sigma_det = 0;         ///< min det(sum_l X_l X_l^H) over nonzero tuples
  std::vector<std::size_t> argmin;  ///< box indices of a minimizing tuple
  std::size_t d_h = 0;
  double alpha_abs = 0;
  int n = 0;                        ///< matrix size
  double bound = 0;                 ///< key_bound(min_inner_det, d_h, |alpha|, n)
  bool bound_holds(double rel_tol = 1e-6) const { return min_sigma_det >= bound * (1 - rel_tol); }
};

BoxEnumeration enumerate_coset_box(const QuotientAlgebra& q, const OuterCode& c, int box, std::vector<std::size_t> coordinates,
                                   std::size_t embedding, const FieldElement& alpha, unsigned threads = 1,
                                   std::uint64_t budget = 100'000'000);

}  // namespace petit
