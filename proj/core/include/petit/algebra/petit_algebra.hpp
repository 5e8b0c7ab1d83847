#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "petit/ring/cyclic_algebra.hpp"
#include "petit/skew/skew_poly.hpp"

namespace petit {

enum class DivisionStatus { Proved, Refuted, Unknown };

inline std::string to_string(DivisionStatus s) {
  switch (s) {
    case DivisionStatus::Proved: return "proved";
    case DivisionStatus::Refuted: return "refuted";
    default: return "unknown";
  }
}

/// S_f = R_m with g o h = g h mod_r f, for monic f of degree m >= 2 in
/// R = S[t; sigma, delta]. Elements are coefficient vectors of length m.
template <CoefficientRing R>
class PetitAlgebra {
 public:
  using Coeff = typename R::Element;
  using Element = std::vector<Coeff>;
  using Poly = SkewPoly<Coeff>;

  PetitAlgebra(SkewPolyRing<R> ring, Poly f) : ring_(std::move(ring)), f_(std::move(f)) {
    if (f_.is_zero() || !ring_.is_monic(f_)) throw NonMonicModulus("modulus " + ring_.to_string(f_) + " is not monic");
    if (f_.degree().value() < 2) throw NonMonicModulus("modulus must have degree at least 2");
    m_ = f_.degree().value();
  }

  const SkewPolyRing<R>& ring() const { return ring_; }
  const R& coefficients() const { return ring_.coefficients(); }
  const Poly& modulus() const { return f_; }
  int degree() const { return m_; }

  Element zero() const { return Element(static_cast<std::size_t>(m_), coefficients().zero()); }
  Element one() const { return scalar(coefficients().one()); }
  Element scalar(const Coeff& c) const { return monomial(c, 0); }
  Element t_power(int j) const { return monomial(coefficients().one(), j); }
  /// c t^j for j < m.
  Element monomial(const Coeff& c, int j) const {
    Element out = zero();
    out.at(static_cast<std::size_t>(j)) = c;
    return out;
  }
  /// Reduces an arbitrary polynomial mod_r f.
  Element from_poly(const Poly& p) const {
    Poly r = ring_.mod_r(p, f_);
    Element out = zero();
    for (std::size_t i = 0; i < r.coeffs.size(); ++i) out[i] = r.coeffs[i];
    return out;
  }
  Poly to_poly(const Element& x) const { return ring_.make(x); }

  Element add(const Element& a, const Element& b) const {
    Element out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = coefficients().add(a[i], b[i]);
    return out;
  }
  Element sub(const Element& a, const Element& b) const {
    Element out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = coefficients().sub(a[i], b[i]);
    return out;
  }
  Element neg(const Element& a) const { return sub(zero(), a); }
  Element mul(const Element& a, const Element& b) const { return from_poly(ring_.mul(to_poly(a), to_poly(b))); }
  /// [x, y, z] = (x y) z - x (y z)
  Element associator(const Element& x, const Element& y, const Element& z) const {
    return sub(mul(mul(x, y), z), mul(x, mul(y, z)));
  }
  bool is_zero(const Element& a) const {
    for (const auto& c : a)
      if (!coefficients().is_zero(c)) return false;
    return true;
  }
  bool equal(const Element& a, const Element& b) const {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (!coefficients().equal(a[i], b[i])) return false;
    return true;
  }
  std::string to_string(const Element& a) const { return ring_.to_string(to_poly(a)); }

  /// a t^j over the additive generators a of the coefficient ring.
  std::vector<Element> additive_generators() const {
    std::vector<Element> out;
    for (int j = 0; j < m_; ++j)
      for (const auto& a : coefficients().additive_generators()) out.push_back(monomial(a, j));
    return out;
  }

  /// The associator is additive in every slot, so vanishing on generator
  /// triples decides associativity for finite rings; over infinite rings the
  /// flag is invariance of f.
  bool is_associative() const {
    if (!associative_) {
      if (coefficients().is_finite()) {
        bool ok = true;
        const auto gens = additive_generators();
        for (std::size_t i = 0; i < gens.size() && ok; ++i)
          for (std::size_t j = 0; j < gens.size() && ok; ++j)
            for (std::size_t k = 0; k < gens.size() && ok; ++k)
              ok = is_zero(associator(gens[i], gens[j], gens[k]));
        associative_ = ok;
      } else {
        associative_ = ring_.is_invariant(f_);
      }
    }
    return *associative_;
  }

  /// f = t^m - d with delta = 0.
  bool is_cyclic_form() const {
    if (ring_.has_derivation()) return false;
    for (int i = 1; i < m_; ++i)
      if (!coefficients().is_zero(f_.coeffs[static_cast<std::size_t>(i)])) return false;
    return true;
  }
  /// d in f = t^m - d; ShapeMismatch otherwise.
  Coeff cyclic_constant() const {
    if (!is_cyclic_form()) throw ShapeMismatch("modulus " + ring_.to_string(f_) + " is not of the form t^m - d");
    return coefficients().neg(f_.coeffs[0]);
  }

 private:
  SkewPolyRing<R> ring_;
  Poly f_;
  int m_ = 0;
  mutable std::optional<bool> associative_;
};

/// Matrix of g -> g o x on coefficient columns: column j holds the
/// coordinates of t^j o x, so coordinates(g o x) = M coordinates(g) because
/// coefficients of g act from the left.
template <CoefficientRing R>
Matrix<typename R::Element> right_multiplication_matrix(const PetitAlgebra<R>& a, const typename PetitAlgebra<R>::Element& x) {
  const auto m = static_cast<std::size_t>(a.degree());
  Matrix<typename R::Element> out(m, std::vector<typename R::Element>(m, a.coefficients().zero()));
  for (std::size_t j = 0; j < m; ++j) {
    auto col = a.mul(a.t_power(static_cast<int>(j)), x);
    for (std::size_t r = 0; r < m; ++r) out[r][j] = col[r];
  }
  return out;
}

/// gamma(x) for f = t^m - d over a commutative coefficient ring.
template <CoefficientRing R>
Matrix<typename R::Element> gamma(const PetitAlgebra<R>& a, const typename PetitAlgebra<R>::Element& x) {
  if (!a.coefficients().is_commutative()) throw ShapeMismatch("gamma needs a commutative coefficient ring");
  (void)a.cyclic_constant();
  return right_multiplication_matrix(a, x);
}

/// Closed form of gamma(x): entry (r, j) is sigma^j(x_{r-j}) for r >= j and
/// sigma^j(x_{m+r-j}) sigma^r(d) otherwise, since t^{m+r} = sigma^r(d) t^r mod_r f.
template <CoefficientRing R>
Matrix<typename R::Element> gamma_closed_form(const PetitAlgebra<R>& a, const typename PetitAlgebra<R>::Element& x) {
  const auto& s = a.coefficients();
  const auto d = a.cyclic_constant();
  const int m = a.degree();
  Matrix<typename R::Element> out(static_cast<std::size_t>(m), std::vector<typename R::Element>(static_cast<std::size_t>(m)));
  for (int r = 0; r < m; ++r)
    for (int j = 0; j < m; ++j) {
      auto& e = out[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
      if (r >= j)
        e = a.ring().sigma_pow(x[static_cast<std::size_t>(r - j)], j);
      else
        e = s.mul(a.ring().sigma_pow(x[static_cast<std::size_t>(m + r - j)], j), a.ring().sigma_pow(d, r));
    }
  return out;
}

/// Division status of (K/F, sigma, d) over a number field: proved when m is
/// prime and d lies outside the fixed field, or when 1, d, ..., d^{m-1} are
/// independent over it; refuted is never claimed.
DivisionStatus number_field_division_status(const NumberField& k, const FieldAutomorphism& sigma,
                                            const FieldElement& d, int m, std::string* reason = nullptr);

// ---------------------------------------------------------------------------
// Generalized cyclic algebras (D, sigma, d) with D = (K/F, rho, c).

/// Coordinates of an element of S_f over D as a vector over the base of D,
/// index j * n + i for the coefficient of e^i t^j.
template <CoefficientRing Base>
std::vector<typename Base::Element> flatten(const PetitAlgebra<CyclicAlgebraRing<Base>>& a,
                                            const typename PetitAlgebra<CyclicAlgebraRing<Base>>::Element& x) {
  std::vector<typename Base::Element> out;
  for (const auto& dj : x)
    for (const auto& k : dj) out.push_back(k);
  return out;
}

/// M(x): (mn) x (mn) matrix over the base with column j n + i the coordinates
/// of (e^i t^j) o x, so coordinates(g o x) = M(x) coordinates(g).
template <CoefficientRing Base>
Matrix<typename Base::Element> iterated_matrix(const PetitAlgebra<CyclicAlgebraRing<Base>>& a,
                                               const typename PetitAlgebra<CyclicAlgebraRing<Base>>::Element& x) {
  const auto& d = a.coefficients();
  const std::size_t n = static_cast<std::size_t>(d.degree()), m = static_cast<std::size_t>(a.degree());
  if (x.size() != m) throw SpecMismatch("element has " + std::to_string(x.size()) + " coordinates, expected " + std::to_string(m));
  Matrix<typename Base::Element> out(m * n, std::vector<typename Base::Element>(m * n, d.base().zero()));
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      auto u = a.monomial(d.monomial(d.base().one(), static_cast<int>(i)), static_cast<int>(j));
      auto col = flatten(a, a.mul(u, x));
      for (std::size_t r = 0; r < m * n; ++r) out[r][j * n + i] = col[r];
    }
  return out;
}

/// M(x) assembled from blocks: block (r, j) is gamma_D of the outer gamma
/// entry, i.e. sigma^j(gamma_D(x_{r-j})) for r >= j and
/// gamma_D(sigma^r(d)) sigma^j(gamma_D(x_{m+r-j})) otherwise.
template <CoefficientRing Base>
Matrix<typename Base::Element> iterated_matrix_blocks(const PetitAlgebra<CyclicAlgebraRing<Base>>& a,
                                                      const typename PetitAlgebra<CyclicAlgebraRing<Base>>::Element& x) {
  const auto& D = a.coefficients();
  const auto& k = D.base();
  const auto dd = a.cyclic_constant();
  const int n = D.degree(), m = a.degree();
  Matrix<typename Base::Element> out(static_cast<std::size_t>(m * n),
                                     std::vector<typename Base::Element>(static_cast<std::size_t>(m * n), k.zero()));
  for (int r = 0; r < m; ++r)
    for (int j = 0; j < m; ++j) {
      Matrix<typename Base::Element> block;
      if (r >= j) {
        block = D.right_matrix(a.ring().sigma_pow(x[static_cast<std::size_t>(r - j)], j));
      } else {
        block = matrix_mul(k, D.right_matrix(a.ring().sigma_pow(dd, r)),
                           D.right_matrix(a.ring().sigma_pow(x[static_cast<std::size_t>(m + r - j)], j)));
      }
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
          out[static_cast<std::size_t>(r * n + u)][static_cast<std::size_t>(j * n + v)] =
              block[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
    }
  return out;
}

/// Scalar form for a central d: blocks d sigma^j(gamma_D(x_k)) above the
/// diagonal. Only valid when d commutes with D and is fixed by sigma;
/// SpecMismatch otherwise.
template <CoefficientRing Base>
Matrix<typename Base::Element> iterated_matrix_scalar(const PetitAlgebra<CyclicAlgebraRing<Base>>& a,
                                                      const typename PetitAlgebra<CyclicAlgebraRing<Base>>::Element& x) {
  const auto& D = a.coefficients();
  const auto& k = D.base();
  const auto dd = a.cyclic_constant();
  for (int i = 1; i < D.degree(); ++i)
    if (!k.is_zero(dd[static_cast<std::size_t>(i)])) throw SpecMismatch("d is not in the base field");
  const auto d0 = dd[0];
  if (!k.equal(D.rho(d0), d0) || !D.equal(a.ring().sigma(dd), dd))
    throw SpecMismatch("scalar form needs d fixed by rho and sigma");
  const int n = D.degree(), m = a.degree();
  Matrix<typename Base::Element> out(static_cast<std::size_t>(m * n),
                                     std::vector<typename Base::Element>(static_cast<std::size_t>(m * n), k.zero()));
  for (int r = 0; r < m; ++r)
    for (int j = 0; j < m; ++j) {
      const bool wrap = r < j;
      auto block = D.right_matrix(a.ring().sigma_pow(x[static_cast<std::size_t>(wrap ? m + r - j : r - j)], j));
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
          auto e = block[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
          out[static_cast<std::size_t>(r * n + u)][static_cast<std::size_t>(j * n + v)] = wrap ? k.mul(d0, e) : e;
        }
    }
  return out;
}

}  // namespace petit
