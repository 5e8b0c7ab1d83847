#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "petit/algebra/petit_algebra.hpp"
#include "petit/exact/determinant.hpp"
#include "petit/exact/linalg.hpp"
#include "petit/exact/modp_poly.hpp"

namespace petit {

enum class ScanMode { ExactLinear, Exhaustive, Sampled };

inline std::string to_string(ScanMode m) {
  switch (m) {
    case ScanMode::ExactLinear: return "exact-linear";
    case ScanMode::Exhaustive: return "exhaustive";
    default: return "sampled";
  }
}

/// Enumeration and additive coordinates of a finite Petit algebra. The flat
/// coordinate vector lists the coefficient-ring coordinates of x_0, ..., x_{m-1}.
template <FiniteCoordinateRing R>
class FiniteAlgebra {
 public:
  using Element = typename PetitAlgebra<R>::Element;
  using Coords = std::vector<std::uint64_t>;

  explicit FiniteAlgebra(const PetitAlgebra<R>& a) : a_(a) {
    for (int j = 0; j < a_.degree(); ++j)
      for (auto d : a_.coefficients().moduli()) moduli_.push_back(d);
    r_ = moduli_.size() / static_cast<std::size_t>(a_.degree());
    prime_ = moduli_.empty() ? 0 : moduli_[0];
    for (auto d : moduli_)
      if (d != prime_) prime_ = 0;
    if (prime_ && !is_prime(prime_)) prime_ = 0;
    long double card = 1;
    for (auto d : moduli_) card *= static_cast<long double>(d);
    cardinality_ = card > 9.0e18L ? 0 : static_cast<std::uint64_t>(card);
  }

  const PetitAlgebra<R>& algebra() const { return a_; }
  std::size_t dimension() const { return moduli_.size(); }
  /// Additive coordinates per coefficient.
  std::size_t coefficient_dimension() const { return r_; }
  const std::vector<std::uint64_t>& moduli() const { return moduli_; }
  /// 0 when the cardinality does not fit comfortably into 64 bits.
  std::uint64_t cardinality() const { return cardinality_; }
  /// p when the additive group is elementary abelian of exponent p, else 0.
  std::uint64_t prime() const { return prime_; }

  Coords coords(const Element& x) const {
    Coords out;
    out.reserve(moduli_.size());
    for (const auto& c : x)
      for (auto v : a_.coefficients().coords(c)) out.push_back(v);
    return out;
  }
  Element from_coords(const Coords& c) const {
    Element out;
    for (int j = 0; j < a_.degree(); ++j)
      out.push_back(a_.coefficients().from_coords(
          Coords(c.begin() + static_cast<std::ptrdiff_t>(static_cast<std::size_t>(j) * r_),
                 c.begin() + static_cast<std::ptrdiff_t>(static_cast<std::size_t>(j + 1) * r_))));
    return out;
  }
  Coords index_coords(std::uint64_t idx) const {
    Coords c(moduli_.size());
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
      c[i] = idx % moduli_[i];
      idx /= moduli_[i];
    }
    return c;
  }
  Element element(std::uint64_t idx) const { return from_coords(index_coords(idx)); }
  std::uint64_t index(const Element& x) const {
    const Coords c = coords(x);
    std::uint64_t idx = 0;
    for (std::size_t i = c.size(); i-- > 0;) idx = idx * moduli_[i] + c[i];
    return idx;
  }
  Element basis(std::size_t i) const {
    Coords c(moduli_.size(), 0);
    c[i] = 1;
    return from_coords(c);
  }

  /// T[i][j] = coords(b_i o b_j), computed on first use (elementary case).
  const std::vector<std::vector<Coords>>& structure() const {
    if (table_.empty()) {
      const std::size_t n = dimension();
      std::vector<Element> b;
      for (std::size_t i = 0; i < n; ++i) b.push_back(basis(i));
      table_.assign(n, std::vector<Coords>(n));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) table_[i][j] = coords(a_.mul(b[i], b[j]));
    }
    return table_;
  }
  /// u o v through the structure constants, mod p.
  Coords mul_coords(const Coords& u, const Coords& v) const {
    const auto& t = structure();
    const std::size_t n = dimension();
    Coords out(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (!u[i]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (!v[j]) continue;
        const std::uint64_t s = u[i] * v[j] % prime_;
        for (std::size_t k = 0; k < n; ++k) out[k] = (out[k] + s * t[i][j][k]) % prime_;
      }
    }
    return out;
  }
  /// Matrix of y -> x o y (columns = images of basis vectors), mod p.
  ModMatrix left_matrix(const Coords& x) const { return mult_matrix(x, true); }
  /// Matrix of y -> y o x, mod p.
  ModMatrix right_matrix(const Coords& x) const { return mult_matrix(x, false); }

 private:
  ModMatrix mult_matrix(const Coords& x, bool left) const {
    const auto& t = structure();
    const std::size_t n = dimension();
    ModMatrix m(n, std::vector<std::uint64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      if (!x[i]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const Coords& prod = left ? t[i][j] : t[j][i];
        for (std::size_t k = 0; k < n; ++k) m[k][j] = (m[k][j] + x[i] * prod[k]) % prime_;
      }
    }
    return m;
  }

  const PetitAlgebra<R>& a_;
  std::vector<std::uint64_t> moduli_;
  std::size_t r_ = 0;
  std::uint64_t prime_ = 0;
  std::uint64_t cardinality_ = 0;
  mutable std::vector<std::vector<Coords>> table_;
};

/// A nucleus-type subset described by its cardinality and, in linear mode,
/// an F_p-basis.
struct SubspaceReport {
  std::string name;
  ScanMode mode = ScanMode::ExactLinear;
  std::uint64_t cardinality = 0;  ///< estimate in sampled mode
  std::vector<std::vector<std::uint64_t>> basis;
  std::uint64_t samples = 0;
  std::uint64_t hits = 0;
  bool contains_scalars = false;  ///< S 1 is contained
  bool equals_scalars = false;
};

struct NucleiReport {
  SubspaceReport left, middle, right, nucleus, commutative, center;
  bool right_matches_modulus = true;  ///< Nuc_r = {g : f g in R f}, when checked
  bool right_checked = false;
};

namespace detail {

inline std::uint64_t ipow(std::uint64_t p, std::size_t k) {
  std::uint64_t v = 1;
  for (std::size_t i = 0; i < k; ++i) v *= p;
  return v;
}

}  // namespace detail

/// Left, middle, right nucleus, commutator and center. Elementary abelian
/// algebras use the kernel of the associator over F_p (exact); otherwise the
/// elements are enumerated when |A| (gens)^2 fits the budget, and sampled
/// with the given seed when it does not.
template <FiniteCoordinateRing R>
NucleiReport nuclei(const PetitAlgebra<R>& a, std::uint64_t budget = 1'000'000, std::uint64_t seed = 1) {
  FiniteAlgebra<R> v(a);
  const std::size_t n = v.dimension();
  const std::size_t r = v.coefficient_dimension();
  NucleiReport out;
  out.left.name = "left nucleus";
  out.middle.name = "middle nucleus";
  out.right.name = "right nucleus";
  out.nucleus.name = "nucleus";
  out.commutative.name = "commutator";
  out.center.name = "center";
  if (const std::uint64_t p = v.prime()) {
    const auto& t = v.structure();
    // assoc[i][j][k] = coords([b_i, b_j, b_k])
    std::vector<std::vector<std::vector<std::vector<std::uint64_t>>>> as(
        n, std::vector<std::vector<std::vector<std::uint64_t>>>(n, std::vector<std::vector<std::uint64_t>>(n)));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          // (b_i b_j) b_k - b_i (b_j b_k), expanded through the structure constants
          std::vector<std::uint64_t> acc(n, 0);
          for (std::size_t u = 0; u < n; ++u) {
            const std::uint64_t lu = t[i][j][u], ru = t[j][k][u];
            for (std::size_t c = 0; c < n; ++c)
              acc[c] = (acc[c] + lu * t[u][k][c] + (p - ru) * t[i][u][c]) % p;
          }
          as[i][j][k] = std::move(acc);
        }
    auto slot_rows = [&](int slot) {
      ModMatrix rows;
      for (std::size_t u = 0; u < n; ++u)
        for (std::size_t w = 0; w < n; ++w)
          for (std::size_t c = 0; c < n; ++c) {
            std::vector<std::uint64_t> row(n);
            for (std::size_t x = 0; x < n; ++x)
              row[x] = slot == 0 ? as[x][u][w][c] : slot == 1 ? as[u][x][w][c] : as[u][w][x][c];
            rows.push_back(std::move(row));
          }
      return rows;
    };
    ModMatrix comm;
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t c = 0; c < n; ++c) {
        std::vector<std::uint64_t> row(n);
        for (std::size_t x = 0; x < n; ++x) row[x] = (t[x][u][c] + p - t[u][x][c]) % p;
        comm.push_back(std::move(row));
      }
    auto fill = [&](SubspaceReport& rep, const ModMatrix& rows) {
      rep.mode = ScanMode::ExactLinear;
      rep.basis = kernel_mod_p(rows, n, p);
      rep.cardinality = detail::ipow(p, rep.basis.size());
      // scalars are the basis vectors of the t^0 block
      rep.contains_scalars = true;
      for (std::size_t s = 0; s < r && rep.contains_scalars; ++s)
        for (const auto& row : rows)
          if (row[s]) {
            rep.contains_scalars = false;
            break;
          }
      rep.equals_scalars = rep.contains_scalars && rep.basis.size() == r;
    };
    ModMatrix l = slot_rows(0), m = slot_rows(1), rr = slot_rows(2);
    fill(out.left, l);
    fill(out.middle, m);
    fill(out.right, rr);
    ModMatrix all = l;
    all.insert(all.end(), m.begin(), m.end());
    all.insert(all.end(), rr.begin(), rr.end());
    fill(out.nucleus, all);
    fill(out.commutative, comm);
    all.insert(all.end(), comm.begin(), comm.end());
    fill(out.center, all);
  } else {
    const auto gens = a.additive_generators();
    const std::uint64_t card = v.cardinality();
    const std::uint64_t per = gens.size() * gens.size() * 4;
    const bool exhaustive = card != 0 && card <= budget / std::max<std::uint64_t>(per, 1);
    std::mt19937_64 rng(seed);
    const std::uint64_t total = exhaustive ? card : std::max<std::uint64_t>(1, budget / std::max<std::uint64_t>(per, 1));
    std::uint64_t cnt[6] = {0, 0, 0, 0, 0, 0};
    for (std::uint64_t s = 0; s < total; ++s) {
      const auto x = exhaustive ? v.element(s) : [&] {
        std::vector<std::uint64_t> c(n);
        for (std::size_t i = 0; i < n; ++i) c[i] = rng() % v.moduli()[i];
        return v.from_coords(c);
      }();
      bool l = true, mm = true, rr = true, cm = true;
      for (const auto& g : gens) {
        if (cm && !a.equal(a.mul(x, g), a.mul(g, x))) cm = false;
        for (const auto& h : gens) {
          if (l && !a.is_zero(a.associator(x, g, h))) l = false;
          if (mm && !a.is_zero(a.associator(g, x, h))) mm = false;
          if (rr && !a.is_zero(a.associator(g, h, x))) rr = false;
        }
      }
      cnt[0] += l;
      cnt[1] += mm;
      cnt[2] += rr;
      cnt[3] += l && mm && rr;
      cnt[4] += cm;
      cnt[5] += l && mm && rr && cm;
    }
    SubspaceReport* reps[6] = {&out.left, &out.middle, &out.right, &out.nucleus, &out.commutative, &out.center};
    for (int i = 0; i < 6; ++i) {
      reps[i]->mode = exhaustive ? ScanMode::Exhaustive : ScanMode::Sampled;
      reps[i]->samples = total;
      reps[i]->hits = cnt[i];
      reps[i]->cardinality =
          exhaustive ? cnt[i]
                     : static_cast<std::uint64_t>(static_cast<long double>(card) * cnt[i] / static_cast<long double>(total));
    }
    // scalar containment checked directly on generators of S
    std::vector<typename PetitAlgebra<R>::Element> sg;
    for (const auto& s : a.coefficients().additive_generators()) sg.push_back(a.scalar(s));
    auto check = [&](int slot) {
      for (const auto& s : sg)
        for (const auto& g : gens)
          for (const auto& h : gens) {
            auto as = slot == 0 ? a.associator(s, g, h) : slot == 1 ? a.associator(g, s, h) : a.associator(g, h, s);
            if (!a.is_zero(as)) return false;
          }
      return true;
    };
    out.left.contains_scalars = check(0);
    out.middle.contains_scalars = check(1);
    out.right.contains_scalars = check(2);
    const std::uint64_t scal = a.coefficients().cardinality();
    for (SubspaceReport* rep : {&out.left, &out.middle, &out.right})
      rep->equals_scalars = exhaustive && rep->contains_scalars && rep->cardinality == scal;
  }
  // independent check of the right nucleus against {g : f g in R f}
  const std::uint64_t card = v.cardinality();
  if (card != 0 && card <= budget && out.right.mode != ScanMode::Sampled) {
    auto by_f = right_nucleus_by_modulus(a.ring(), a.modulus(), budget);
    out.right_checked = true;
    out.right_matches_modulus = by_f.size() == out.right.cardinality;
    if (out.right.mode == ScanMode::ExactLinear && out.right_matches_modulus) {
      const auto p = v.prime();
      for (const auto& g : by_f) {
        auto x = a.zero();
        for (std::size_t i = 0; i < g.coeffs.size(); ++i) x[i] = g.coeffs[i];
        ModMatrix sys = out.right.basis;
        const std::size_t before = rank_mod_p(sys, p);
        sys.push_back(v.coords(x));
        if (rank_mod_p(sys, p) != before) {
          out.right_matches_modulus = false;
          break;
        }
      }
    }
  }
  return out;
}

struct DivisionReport {
  DivisionStatus status = DivisionStatus::Unknown;
  std::string method;
  std::optional<bool> irreducible;          ///< exhaustive right-factor search
  std::string right_factor;                 ///< witness when reducible
  std::optional<bool> right_maps_regular;   ///< every R_y, y != 0, invertible
  std::optional<bool> left_maps_regular;    ///< every L_x, x != 0, injective
  std::string zero_divisor;                 ///< witness "x o y = 0"
  bool consistent = true;                   ///< all routes that ran agree
};

/// Decides division for a finite Petit algebra: via irreducibility of f when
/// the coefficient ring is a field, cross-checked by scans of all right and
/// left multiplication maps when |A| <= scan_limit. A coefficient ring with
/// zero divisors refutes division directly.
template <FiniteCoordinateRing R>
DivisionReport analyze_division(const PetitAlgebra<R>& a, std::uint64_t scan_limit = 65536,
                                std::uint64_t factor_budget = 10'000'000) {
  DivisionReport rep;
  const auto& s = a.coefficients();
  FiniteAlgebra<R> v(a);
  std::vector<std::string> methods;
  if (s.is_field()) {
    auto h = find_right_factor(a.ring(), a.modulus(), factor_budget);
    rep.irreducible = !h.has_value();
    if (h) rep.right_factor = a.ring().to_string(*h);
    methods.push_back("right-factor search");
  } else {
    // finite commutative non-fields and split cyclic algebras contain zero divisors
    const std::uint64_t q = s.cardinality();
    if (q <= 4096)
      for (std::uint64_t i = 1; i < q && rep.zero_divisor.empty(); ++i)
        for (std::uint64_t j = 1; j < q; ++j)
          if (s.is_zero(s.mul(s.element(i), s.element(j)))) {
            rep.zero_divisor = "(" + s.to_string(s.element(i)) + ") * (" + s.to_string(s.element(j)) + ") = 0 in the coefficient ring";
            break;
          }
    methods.push_back("coefficient ring is not a division ring");
  }
  const std::uint64_t card = v.cardinality();
  if (v.prime() && card != 0 && card <= scan_limit) {
    const std::uint64_t p = v.prime();
    const std::size_t n = v.dimension();
    bool right_ok = true, left_ok = true;
    for (std::uint64_t idx = 1; idx < card; ++idx) {
      const auto c = v.index_coords(idx);
      if (s.is_commutative()) {
        if (right_ok) {
          auto det = det_exact(s, right_multiplication_matrix(a, v.from_coords(c)));
          if (s.is_zero(det) || !s.inverse(det)) right_ok = false;
        }
      } else if (right_ok && rank_mod_p(v.right_matrix(c), p) < n) {
        right_ok = false;
      }
      if (left_ok) {
        auto lm = v.left_matrix(c);
        if (rank_mod_p(lm, p) < n) {
          left_ok = false;
          if (rep.zero_divisor.empty()) {
            auto ker = kernel_mod_p(lm, n, p);
            auto x = v.from_coords(c), y = v.from_coords(ker.at(0));
            if (!a.is_zero(a.mul(x, y))) throw AxiomViolation("left multiplication kernel does not annihilate");
            rep.zero_divisor = "(" + a.to_string(x) + ") o (" + a.to_string(y) + ") = 0";
          }
        }
      }
      if (!right_ok && !left_ok) break;
    }
    rep.right_maps_regular = right_ok;
    rep.left_maps_regular = left_ok;
    methods.push_back("multiplication-map scans");
  }
  std::vector<bool> verdicts;
  if (rep.irreducible) verdicts.push_back(*rep.irreducible);
  if (!s.is_field()) verdicts.push_back(false);
  if (rep.right_maps_regular) verdicts.push_back(*rep.right_maps_regular);
  if (rep.left_maps_regular) verdicts.push_back(*rep.left_maps_regular);
  rep.consistent = std::all_of(verdicts.begin(), verdicts.end(), [&](bool b) { return b == verdicts.front(); });
  if (verdicts.empty() || !rep.consistent)
    rep.status = DivisionStatus::Unknown;
  else
    rep.status = verdicts.front() ? DivisionStatus::Proved : DivisionStatus::Refuted;
  for (std::size_t i = 0; i < methods.size(); ++i) rep.method += (i ? ", " : "") + methods[i];
  return rep;
}

struct TwoSidedIdeal {
  std::vector<std::vector<std::uint64_t>> basis;  ///< F_p basis in reduced echelon form
  std::uint64_t cardinality = 0;
  std::string generator;  ///< a singleton generating it
};

struct IdealLattice {
  std::vector<TwoSidedIdeal> ideals;  ///< sorted by cardinality, {0} first and A last
  std::uint64_t multiplications = 0;
  bool only_trivial() const { return ideals.size() == 2; }
};

namespace detail {

// Reduced row echelon basis over F_p.
inline std::vector<std::vector<std::uint64_t>> echelon(std::vector<std::vector<std::uint64_t>> rows, std::uint64_t p) {
  std::size_t rank = 0;
  const std::size_t n = rows.empty() ? 0 : rows[0].size();
  for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    const std::uint64_t inv = mod_inverse(rows[rank][col], p);
    for (auto& x : rows[rank]) x = x * inv % p;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const std::uint64_t f = rows[r][col];
      for (std::size_t k = 0; k < n; ++k) rows[r][k] = (rows[r][k] + (p - f) * rows[rank][k]) % p;
    }
    ++rank;
  }
  rows.resize(rank);
  return rows;
}

}  // namespace detail

/// Two-sided ideals generated by single elements, found as closures under
/// addition and multiplication by basis elements on both sides, together with
/// {0} and A. Each multiplication counts against the budget.
template <FiniteCoordinateRing R>
IdealLattice two_sided_ideals(const PetitAlgebra<R>& a, std::uint64_t budget = 1'000'000) {
  FiniteAlgebra<R> v(a);
  const std::uint64_t p = v.prime();
  if (!p) throw UnsupportedCoefficientRing("ideal closure needs an elementary abelian additive group");
  const std::size_t n = v.dimension();
  const std::uint64_t card = v.cardinality();
  if (card == 0 || card > budget) throw BudgetExceeded("ideal enumeration over " + std::to_string(card) + " elements");
  IdealLattice lat;
  std::map<std::vector<std::vector<std::uint64_t>>, TwoSidedIdeal> found;
  auto spend = [&](std::uint64_t k) {
    lat.multiplications += k;
    if (lat.multiplications > budget)
      throw BudgetExceeded("ideal closure exceeded " + std::to_string(budget) + " multiplications");
  };
  std::vector<std::vector<std::uint64_t>> unit(n, std::vector<std::uint64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) unit[i][i] = 1;
  auto record = [&](std::vector<std::vector<std::uint64_t>> basis, const std::string& gen) {
    if (found.count(basis)) return;
    TwoSidedIdeal id;
    id.cardinality = detail::ipow(p, basis.size());
    id.basis = basis;
    id.generator = gen;
    found.emplace(std::move(basis), std::move(id));
  };
  record({}, "0");
  record(unit, "1");
  for (std::uint64_t idx = 1; idx < card; ++idx) {
    const auto x = v.index_coords(idx);
    spend(2 * n);
    if (rank_mod_p(v.left_matrix(x), p) == n || rank_mod_p(v.right_matrix(x), p) == n) continue;
    std::vector<std::vector<std::uint64_t>> span = detail::echelon({x}, p);
    std::vector<std::vector<std::uint64_t>> queue = {x};
    while (!queue.empty()) {
      auto y = queue.back();
      queue.pop_back();
      for (std::size_t j = 0; j < n; ++j) {
        spend(2);
        for (auto prod : {v.mul_coords(y, unit[j]), v.mul_coords(unit[j], y)}) {
          auto grown = span;
          grown.push_back(prod);
          grown = detail::echelon(std::move(grown), p);
          if (grown.size() > span.size()) {
            span = std::move(grown);
            queue.push_back(std::move(prod));
          }
        }
      }
    }
    record(span, a.to_string(v.from_coords(x)));
  }
  for (auto& kv : found) lat.ideals.push_back(std::move(kv.second));
  std::stable_sort(lat.ideals.begin(), lat.ideals.end(),
                   [](const TwoSidedIdeal& l, const TwoSidedIdeal& r) { return l.cardinality < r.cardinality; });
  return lat;
}

}  // namespace petit
