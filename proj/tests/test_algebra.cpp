#include <random>

#include "doctest.h"
#include "petit/algebra/analysis.hpp"
#include "petit/finite/decompose.hpp"
#include "petit/number_field/presets.hpp"
#include "petit/ring/number_field_ring.hpp"

using namespace petit;

namespace {

using E = FiniteQuotientRing::Element;
using FRing = SkewPolyRing<FiniteQuotientRing>;
using FAlg = PetitAlgebra<FiniteQuotientRing>;

struct FieldCase {
  GaloisField gf;
  FRing ring;
};

FieldCase field_case(int k) {
  auto gf = galois_field(2, k);
  InducedMap s = gf.frobenius;
  FRing r(gf.ring, [s](const E& x) { return s(x); });
  return {gf, r};
}

FAlg cyclic(const FieldCase& fc, int m, E d) {
  const auto& s = fc.gf.ring;
  auto f = fc.ring.sub(fc.ring.monomial(s.one(), m), fc.ring.constant(d));
  return FAlg(fc.ring, f);
}

E omega(const FieldCase& fc) { return fc.gf.ring.project(fc.gf.ring.field().basis(1)); }

std::shared_ptr<const NumberField> preset(const std::string& name) {
  return std::make_shared<const NumberField>(field_preset(name));
}

}  // namespace

TEST_CASE("nonassociative quaternion algebra over F2") {
  auto fc = field_case(2);
  const E w = omega(fc);
  auto a = cyclic(fc, 2, w);
  FiniteAlgebra<FiniteQuotientRing> v(a);
  CHECK(v.cardinality() == 16);
  CHECK(a.equal(a.mul(a.t_power(1), a.t_power(1)), a.scalar(w)));
  CHECK(a.equal(a.associator(a.t_power(1), a.t_power(1), a.t_power(1)), a.t_power(1)));
  for (std::uint64_t i = 0; i < 16; ++i)
    for (std::uint64_t j = 0; j < 16; ++j) {
      CHECK(a.is_zero(a.associator(a.one(), v.element(i), v.element(j))));
      CHECK(a.is_zero(a.associator(v.element(i), a.one(), v.element(j))));
      CHECK(a.is_zero(a.associator(v.element(i), v.element(j), a.one())));
    }
  CHECK_FALSE(a.is_associative());
  CHECK(cyclic(fc, 2, fc.gf.ring.one()).is_associative());
  CHECK_THROWS_AS(FAlg(fc.ring, fc.ring.make({1, 1})), NonMonicModulus);
  CHECK_THROWS_AS(FAlg(fc.ring, fc.ring.make({1, 1, w})), NonMonicModulus);
}

TEST_CASE("associativity flag equals invariance of f") {
  for (int k : {2, 4}) {
    auto fc = field_case(k);
    for_each_monic(fc.ring, 2, [&](const FRing::Poly& f) {
      FAlg a(fc.ring, f);
      CHECK(a.is_associative() == fc.ring.is_invariant(f));
      return false;
    });
  }
}

TEST_CASE("nuclei and center") {
  auto fc = field_case(2);
  auto a = cyclic(fc, 2, omega(fc));
  auto n = nuclei(a);
  CHECK(n.left.cardinality == 4);
  CHECK(n.middle.cardinality == 4);
  CHECK(n.right.cardinality == 4);
  CHECK(n.left.equals_scalars);
  CHECK(n.middle.equals_scalars);
  CHECK(n.right.equals_scalars);
  CHECK(n.center.cardinality == 2);
  CHECK(n.right_checked);
  CHECK(n.right_matches_modulus);

  auto assoc = nuclei(cyclic(fc, 2, fc.gf.ring.one()));
  CHECK(assoc.left.cardinality == 16);
  CHECK(assoc.nucleus.cardinality == 16);
  CHECK(assoc.center.cardinality == 2);  // split: M_2(F2)

  auto f16 = field_case(4);
  for (E c = 2; c < 16; c += 3) {
    auto b = cyclic(f16, 4, c);
    if (b.is_associative()) continue;
    auto nb = nuclei(b);
    CHECK(nb.left.contains_scalars);
    CHECK(nb.middle.contains_scalars);
    CHECK(nb.center.cardinality == 2);
    CHECK(nb.right_matches_modulus);
  }
}

TEST_CASE("division examples") {
  auto fc = field_case(2);
  auto a = cyclic(fc, 2, omega(fc));
  auto d = analyze_division(a);
  CHECK(d.status == DivisionStatus::Proved);
  CHECK(d.consistent);
  CHECK(*d.left_maps_regular);
  CHECK(*d.right_maps_regular);

  auto split = analyze_division(cyclic(fc, 2, fc.gf.ring.one()));
  CHECK(split.status == DivisionStatus::Refuted);
  CHECK_FALSE(split.zero_divisor.empty());

  auto f16 = field_case(4);
  auto r = analyze_division(cyclic(f16, 4, f16.gf.ring.one()));
  CHECK(r.status == DivisionStatus::Refuted);
  CHECK(r.consistent);
}

TEST_CASE("division, zero divisors and irreducibility agree") {
  struct Inst {
    int k;
    int m;
  };
  for (Inst in : {Inst{2, 2}, Inst{2, 3}, Inst{4, 2}}) {
    auto fc = field_case(in.k);
    for_each_monic(fc.ring, in.m, [&](const FRing::Poly& f) {
      auto rep = analyze_division(FAlg(fc.ring, f));
      CHECK(rep.consistent);
      CHECK(rep.right_maps_regular.has_value());
      return false;
    });
  }
}

TEST_CASE("degree-3 algebras over F64") {
  auto k = preset("eisenstein_omega7");
  auto q = FiniteQuotientRing::build(k, principal_ideal(*k, k->make_integral({2, 0, 0, 0, 0, 0}), "F"));
  InducedMap sig = induce_automorphism(k->automorphism("sigma"), q);
  FRing r(q, [sig](const E& x) { return sig(x); });
  auto fix = fixed_subring(sig);
  CHECK(fix.cardinality() == 4);
  int division = 0;
  for (E c = 1; c < 64; ++c) {
    if (sig(c) == c) continue;
    FAlg a(r, r.sub(r.monomial(q.one(), 3), r.constant(c)));
    if (is_irreducible_finite(r, a.modulus())) ++division;
  }
  CHECK(division == 60);
}

TEST_CASE("gamma examples and representation compatibility") {
  auto fc = field_case(2);
  const E w = omega(fc);
  const auto& s = fc.gf.ring;
  auto a = cyclic(fc, 2, w);
  auto g = gamma(a, a.t_power(1));
  CHECK(g == Matrix<E>{{0, w}, {1, 0}});
  CHECK(gamma(a, a.one()) == identity_matrix(s, 2));
  CHECK(gamma(a, a.scalar(w)) == Matrix<E>{{w, 0}, {0, s.mul(w, w)}});
  FiniteAlgebra<FiniteQuotientRing> v(a);
  for (std::uint64_t i = 0; i < 16; ++i)
    for (std::uint64_t j = 0; j < 16; ++j) {
      auto x = v.element(i), y = v.element(j);
      CHECK(matrix_apply(s, gamma(a, y), x) == a.mul(x, y));
    }
  for (std::uint64_t j = 1; j < 16; ++j) CHECK(det_exact(s, gamma(a, v.element(j))) != 0);

  FAlg general(a.ring(), a.ring().make({w, 1, 1}));
  CHECK_THROWS_AS(gamma(general, general.one()), ShapeMismatch);
}

TEST_CASE("closed form of gamma, including sigma(d) on lower rows") {
  auto k = preset("eisenstein_omega7");
  NumberFieldRing ok(k, true);
  const auto& sig = k->automorphism("sigma");
  SkewPolyRing<NumberFieldRing> r(ok, [k, &sig](const FieldElement& x) { return k->apply(sig, x); });
  const FieldElement theta = k->basis(2);
  PetitAlgebra<NumberFieldRing> a(r, r.sub(r.monomial(k->one(), 3), r.constant(theta)));
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    PetitAlgebra<NumberFieldRing>::Element x, y;
    for (int j = 0; j < 3; ++j) {
      std::vector<long> cx, cy;
      for (int i = 0; i < 6; ++i) {
        cx.push_back(static_cast<long>(rng() % 5) - 2);
        cy.push_back(static_cast<long>(rng() % 5) - 2);
      }
      x.push_back(k->make_integral(cx));
      y.push_back(k->make_integral(cy));
    }
    CHECK(gamma(a, x) == gamma_closed_form(a, x));
    CHECK(matrix_apply(ok, gamma(a, y), x) == a.mul(x, y));
  }
  // with theta moved off the top row, sigma(theta) != theta shows up in row 1
  auto g = gamma(a, a.t_power(2));
  CHECK(g[0][1] == theta);
  CHECK(g[1][2] == k->apply(sig, theta));
  CHECK(g[1][2] != theta);
}

TEST_CASE("division status over number fields") {
  auto k = preset("gaussian_sqrt5");
  const auto& sig = k->automorphism("sigma");
  CHECK(number_field_division_status(*k, sig, k->basis(2), 2) == DivisionStatus::Proved);
  CHECK(number_field_division_status(*k, sig, k->basis(1), 2) == DivisionStatus::Unknown);
  CHECK(number_field_division_status(*k, sig, k->zero(), 2) == DivisionStatus::Refuted);
  auto k7 = preset("eisenstein_omega7");
  std::string why;
  CHECK(number_field_division_status(*k7, k7->automorphism("sigma"), k7->basis(2), 3, &why) == DivisionStatus::Proved);
  CHECK_FALSE(why.empty());
}

TEST_CASE("two-sided ideals") {
  auto fc = field_case(2);
  auto lat = two_sided_ideals(cyclic(fc, 2, omega(fc)));
  CHECK(lat.only_trivial());
  CHECK(lat.ideals.front().cardinality == 1);
  CHECK(lat.ideals.back().cardinality == 16);

  // t^2 - 1 gives the split algebra M_2(F2): nilpotents but no proper ideals
  auto a1 = cyclic(fc, 2, fc.gf.ring.one());
  auto tp1 = a1.add(a1.t_power(1), a1.one());
  CHECK(a1.is_zero(a1.mul(tp1, tp1)));
  CHECK(two_sided_ideals(a1).only_trivial());

  // t^2 over F4 is not prime: t generates the proper ideal S t
  auto a0 = cyclic(fc, 2, 0);
  auto lat0 = two_sided_ideals(a0);
  CHECK_FALSE(lat0.only_trivial());
  bool has_st = false;
  for (const auto& id : lat0.ideals) has_st = has_st || id.cardinality == 4;
  CHECK(has_st);
  CHECK_THROWS_AS(two_sided_ideals(cyclic(fc, 2, omega(fc)), 5), BudgetExceeded);
}

TEST_CASE("generalized cyclic algebra over a cyclic algebra") {
  auto k = preset("eisenstein_omega7");
  NumberFieldRing ok(k, true);
  const auto& rho = k->automorphism("rho");
  const auto& sig = k->automorphism("sigma");
  using D = CyclicAlgebraRing<NumberFieldRing>;
  D d(ok, [k, &rho](const FieldElement& x) { return k->apply(rho, x); }, 2, k->from_integer(-1));
  auto tau = d.coefficientwise([k, &sig](const FieldElement& x) { return k->apply(sig, x); });
  SkewPolyRing<D> r(d, tau);
  auto omega = d.embed(k->basis(1));
  PetitAlgebra<D> a(r, r.sub(r.monomial(d.one(), 3), r.constant(omega)));
  CHECK(iterated_matrix(a, a.one()) == identity_matrix(ok, 6));
  CHECK_THROWS_AS(iterated_matrix_scalar(a, a.one()), SpecMismatch);

  std::mt19937_64 rng(4);
  auto rnd = [&] {
    PetitAlgebra<D>::Element x;
    for (int j = 0; j < 3; ++j) {
      D::Element dj;
      for (int i = 0; i < 2; ++i) {
        std::vector<long> c;
        for (int l = 0; l < 6; ++l) c.push_back(static_cast<long>(rng() % 5) - 2);
        dj.push_back(k->make_integral(c));
      }
      x.push_back(dj);
    }
    return x;
  };
  for (int trial = 0; trial < 10; ++trial) {
    auto x = rnd(), y = rnd();
    auto m = iterated_matrix(a, x);
    CHECK(m == iterated_matrix_blocks(a, x));
    CHECK(matrix_apply(ok, iterated_matrix(a, y), flatten(a, x)) == flatten(a, a.mul(x, y)));
  }
  CHECK_FALSE(a.is_associative());

  // a central d admits the scalar form
  PetitAlgebra<D> central(r, r.sub(r.monomial(d.one(), 3), r.constant(d.embed(k->from_integer(2)))));
  for (int trial = 0; trial < 5; ++trial) {
    auto x = rnd();
    CHECK(iterated_matrix(central, x) == iterated_matrix_scalar(central, x));
    CHECK(iterated_matrix(central, x) == iterated_matrix_blocks(central, x));
  }
}

TEST_CASE("iterated matrix of t for m = n = 2") {
  auto k = preset("gaussian_sqrt5");
  NumberFieldRing ok(k, true);
  const auto& conj = k->automorphism("conj");
  const auto& sig = k->automorphism("sigma");
  using D = CyclicAlgebraRing<NumberFieldRing>;
  D d(ok, [k, &conj](const FieldElement& x) { return k->apply(conj, x); }, 2, k->from_integer(-1));
  SkewPolyRing<D> r(d, d.coefficientwise([k, &sig](const FieldElement& x) { return k->apply(sig, x); }));
  auto dd = d.embed(k->basis(1));  // i, fixed by sigma
  PetitAlgebra<D> a(r, r.sub(r.monomial(d.one(), 2), r.constant(dd)));
  auto m = iterated_matrix(a, a.t_power(1));
  auto gd = d.right_matrix(dd);
  for (int u = 0; u < 2; ++u)
    for (int v = 0; v < 2; ++v) {
      CHECK(m[u][v].is_zero());
      CHECK(m[2 + u][2 + v].is_zero());
      CHECK(m[u][2 + v] == gd[u][v]);
      CHECK(m[2 + u][v] == (u == v ? k->one() : k->zero()));
    }
}

TEST_CASE("cyclic algebra arithmetic") {
  auto k = preset("gaussian_sqrt5");
  NumberFieldRing kk(k, false);
  const auto& conj = k->automorphism("conj");
  CyclicAlgebraRing<NumberFieldRing> d(kk, [k, &conj](const FieldElement& x) { return k->apply(conj, x); }, 2,
                                       k->from_integer(-1));
  auto e = d.monomial(k->one(), 1);
  CHECK(d.equal(d.mul(e, e), d.embed(k->from_integer(-1))));
  auto i = d.embed(k->basis(1));
  CHECK(d.equal(d.mul(e, i), d.mul(d.embed(k->apply(conj, k->basis(1))), e)));
  auto x = d.add(d.embed(k->make_integral({1, 2, 0, 1})), d.monomial(k->make_integral({0, 1, 1, 0}), 1));
  auto inv = d.inverse(x);
  REQUIRE(inv.has_value());
  CHECK(d.equal(d.mul(*inv, x), d.one()));
  CHECK(d.equal(d.mul(x, *inv), d.one()));
  CHECK_THROWS_AS(CyclicAlgebraRing<NumberFieldRing>(kk, [k, &conj](const FieldElement& x) { return k->apply(conj, x); },
                                                     2, k->basis(1)),
                  AxiomViolation);
}
