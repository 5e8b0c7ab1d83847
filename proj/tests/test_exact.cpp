#include <random>

#include "doctest.h"
#include "petit/exact/determinant.hpp"
#include "petit/exact/int_matrix.hpp"
#include "petit/exact/linalg.hpp"
#include "petit/exact/modp_poly.hpp"
#include "petit/ring/integers.hpp"

using namespace petit;

namespace {

void check_smith(const IntMatrix& m) {
  SmithForm s = smith_normal_form(m);
  CHECK(s.U * m * s.V == s.D);
  CHECK(s.D.is_diagonal());
  CHECK(abs(s.U.determinant()) == 1);
  CHECK(abs(s.V.determinant()) == 1);
  CHECK(s.V * s.V_inv == IntMatrix::identity(m.cols()));
  auto d = s.diagonal();
  for (std::size_t i = 0; i < d.size(); ++i) {
    CHECK(d[i] >= 0);
    if (i + 1 < d.size() && d[i] != 0) {
      CHECK(d[i + 1] % d[i] == 0);
    }
    if (i + 1 < d.size() && d[i] == 0) {
      CHECK(d[i + 1] == 0);
    }
  }
}

ModPPoly product(const std::vector<ModPFactor>& fs, std::uint64_t p) {
  ModPPoly acc(p, {1});
  for (const auto& f : fs)
    for (int k = 0; k < f.multiplicity; ++k) acc = acc * f.factor;
  return acc;
}

// Irreducible iff no root and no monic quadratic divisor: enough for degree <= 3.
bool naive_irreducible(const ModPPoly& f) {
  const auto p = f.modulus();
  if (f.degree() <= 1) return f.degree() == 1;
  for (int d = 1; 2 * d <= f.degree(); ++d) {
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::vector<std::int64_t> c(d + 1, 0);
      std::uint64_t v = idx;
      for (int i = 0; i < d; ++i) {
        c[i] = static_cast<std::int64_t>(v % p);
        v /= p;
      }
      c[d] = 1;
      if (f.divmod(ModPPoly(p, c)).second.is_zero()) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("smith normal form of the identity") {
  SmithForm s = smith_normal_form(IntMatrix::identity(2));
  CHECK(s.D == IntMatrix::identity(2));
  CHECK(s.U == IntMatrix::identity(2));
  CHECK(s.V == IntMatrix::identity(2));
}

TEST_CASE("smith normal form of diag(2,3) is diag(1,6)") {
  IntMatrix m{{2, 0}, {0, 3}};
  SmithForm s = smith_normal_form(m);
  CHECK(s.D == IntMatrix{{1, 0}, {0, 6}});
  check_smith(m);
}

TEST_CASE("relation matrix of (1+i) in Z[i]") {
  IntMatrix m{{1, -1}, {1, 1}};
  SmithForm s = smith_normal_form(m);
  CHECK(s.D == IntMatrix{{1, 0}, {0, 2}});
  CHECK(abs(m.determinant()) == 2);
}

TEST_CASE("smith normal form properties on random matrices") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> entry(-6, 6), dim(1, 5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = dim(rng), c = dim(rng);
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = entry(rng);
    check_smith(m);
    if (r == c) {
      BigInt prod = 1;
      for (const auto& d : smith_normal_form(m).diagonal()) prod *= d;
      CHECK(prod == abs(m.determinant()));
    }
  }
}

TEST_CASE("non-square and zero matrices") {
  check_smith(IntMatrix(3, 2));
  check_smith(IntMatrix{{4, 6, 8}});
  CHECK(smith_normal_form(IntMatrix{{4, 6, 8}}).D == IntMatrix{{2, 0, 0}});
}

TEST_CASE("factor x^2+1 mod 5") {
  auto fs = factor_mod_p(ModPPoly(5, {1, 0, 1}));
  REQUIRE(fs.size() == 2);
  CHECK(fs[0].factor == ModPPoly(5, {2, 1}));
  CHECK(fs[1].factor == ModPPoly(5, {3, 1}));
}

TEST_CASE("x^2+1 is irreducible mod 3 and x is irreducible mod 2") {
  CHECK(is_irreducible_mod_p(ModPPoly(3, {1, 0, 1})));
  auto fs = factor_mod_p(ModPPoly(2, {0, 1}));
  REQUIRE(fs.size() == 1);
  CHECK(fs[0].factor == ModPPoly(2, {0, 1}));
  CHECK(fs[0].multiplicity == 1);
}

TEST_CASE("ModPPoly rejects a composite modulus") { CHECK_THROWS_AS(ModPPoly(6, {1, 1}), InvalidArgument); }

TEST_CASE("factorizations reproduce the input and factors are irreducible") {
  std::mt19937_64 rng(11);
  for (std::uint64_t p : {2u, 3u, 5u, 7u}) {
    std::uniform_int_distribution<std::int64_t> coef(0, static_cast<std::int64_t>(p) - 1);
    for (int trial = 0; trial < 60; ++trial) {
      std::vector<std::int64_t> c(6);
      for (auto& x : c) x = coef(rng);
      c.back() = 1 + coef(rng) % (static_cast<std::int64_t>(p) - 1);
      ModPPoly f(p, c);
      auto fs = factor_mod_p(f);
      CHECK(product(fs, p) == f.monic());
      for (const auto& fac : fs) {
        CHECK(fac.factor.is_monic());
        if (fac.factor.degree() <= 3) {
          CHECK(naive_irreducible(fac.factor));
        }
      }
    }
  }
}

TEST_CASE("repeated factors") {
  ModPPoly f = ModPPoly(3, {1, 1}) * ModPPoly(3, {1, 1}) * ModPPoly(3, {1, 0, 1});
  auto fs = factor_mod_p(f);
  REQUIRE(fs.size() == 2);
  CHECK(fs[0].multiplicity == 2);
  CHECK(fs[1].factor == ModPPoly(3, {1, 0, 1}));
}

TEST_CASE("det_exact over Z agrees with the permutation expansion") {
  IntegerRing z;
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> entry(-4, 4);
  for (std::size_t n = 1; n <= 4; ++n)
    for (int trial = 0; trial < 50; ++trial) {
      Matrix<BigInt> m(n, std::vector<BigInt>(n));
      for (auto& row : m)
        for (auto& x : row) x = entry(rng);
      CHECK(det_exact(z, m) == det_permutation(z, m));
    }
  CHECK(det_exact(z, identity_matrix(z, 3)) == 1);
  CHECK_THROWS_AS(det_exact(z, Matrix<BigInt>{{1, 2}}), ShapeMismatch);
}

TEST_CASE("rational linear algebra") {
  QMatrix a{{BigRational(2), BigRational(1)}, {BigRational(4), BigRational(2)}};
  CHECK(rank(a) == 1);
  CHECK_FALSE(inverse(a).has_value());
  QMatrix b{{BigRational(1), BigRational(2)}, {BigRational(3), BigRational(4)}};
  auto inv = inverse(b);
  REQUIRE(inv);
  CHECK(q_mul(b, *inv) == q_identity(2));
  auto x = solve(b, {BigRational(5), BigRational(6)});
  REQUIRE(x);
  CHECK(q_apply(b, *x) == QVector{BigRational(5), BigRational(6)});
}

TEST_CASE("kernel mod p") {
  ModMatrix a{{1, 1, 0}, {0, 1, 1}};
  auto k = kernel_mod_p(a, 3, 2);
  REQUIRE(k.size() == 1);
  CHECK(k[0] == std::vector<std::uint64_t>{1, 1, 1});
  CHECK(rank_mod_p(a, 2) == 2);
}
