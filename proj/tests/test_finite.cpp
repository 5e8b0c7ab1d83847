#include <random>

#include "doctest.h"
#include "petit/finite/decompose.hpp"
#include "petit/number_field/presets.hpp"
#include "petit/util/error.hpp"

using namespace petit;

namespace {

std::shared_ptr<const NumberField> preset(const std::string& name) {
  return std::make_shared<const NumberField>(field_preset(name));
}

FiniteQuotientRing quotient(const std::shared_ptr<const NumberField>& k, std::vector<long> gen,
                            const std::string& subring = "") {
  return FiniteQuotientRing::build(k, principal_ideal(*k, k->make_integral(gen), subring));
}

}  // namespace

TEST_CASE("Z[i] mod (1+i) has two elements") {
  auto k = preset("gaussian");
  auto q = quotient(k, {1, 1});
  CHECK(q.cardinality() == 2);
  CHECK(q.is_field());
  CHECK(q.characteristic() == 2);
}

TEST_CASE("Z[i,phi] mod (1+i) is F4 and sigma induces Frobenius") {
  auto k = preset("gaussian_sqrt5");
  auto q = quotient(k, {1, 1, 0, 0}, "F");
  CHECK(q.cardinality() == 4);
  CHECK(q.is_field());
  auto s = induce_automorphism(k->automorphism("sigma"), q);
  for (std::uint32_t x = 0; x < 4; ++x) CHECK(s(x) == q.mul(x, x));
  auto fix = fixed_subring(s);
  CHECK(fix.cardinality() == 2);
  CHECK(fix.is_field);
  auto r = splitting_report(q, "F");
  CHECK(r.e == 1);
  CHECK(r.f == 2);
  CHECK(r.g == 1);
  CHECK(r.consistent);
}

TEST_CASE("Z[w,theta7] mod 2 is a field with 64 elements, inert over Z[w]") {
  auto k = preset("eisenstein_omega7");
  auto q = quotient(k, {2, 0, 0, 0, 0, 0}, "F");
  CHECK(q.cardinality() == 64);
  CHECK(q.is_field());
  auto r = splitting_report(q, "F");
  CHECK(r.e == 1);
  CHECK(r.f == 3);
  CHECK(r.g == 1);
  CHECK(r.base_residue_cardinality == 4);
}

TEST_CASE("identity and zero maps") {
  auto k = preset("gaussian_sqrt5");
  auto q = quotient(k, {1, 1, 0, 0});
  CHECK(identity_map(q).is_identity());
  auto z = zero_derivation(q);
  for (std::uint32_t x = 0; x < q.cardinality(); ++x) CHECK(z(x) == 0);
  auto s = induce_automorphism(k->automorphism("sigma"), q);
  CHECK(s.order() == 2);
}

TEST_CASE("projection is a ring homomorphism and sigma_bar commutes with projection") {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<long> d(-20, 20);
  auto k = preset("gaussian_sqrt5");
  for (std::vector<long> gen : {std::vector<long>{3, 0, 0, 0}, {1, 1, 0, 0}, {5, 0, 0, 0}, {2, 1, 0, 0}}) {
    auto q = quotient(k, gen);
    auto s = induce_automorphism(k->automorphism("sigma"), q);
    for (int t = 0; t < 200; ++t) {
      auto x = k->make_integral({d(rng), d(rng), d(rng), d(rng)});
      auto y = k->make_integral({d(rng), d(rng), d(rng), d(rng)});
      CHECK(q.project(k->add(x, y)) == q.add(q.project(x), q.project(y)));
      CHECK(q.project(k->mul(x, y)) == q.mul(q.project(x), q.project(y)));
      CHECK(q.project(k->apply(k->automorphism("sigma"), x)) == s(q.project(x)));
    }
    for (std::uint32_t a = 0; a < q.cardinality(); ++a) CHECK(q.project(q.lift(a)) == a);
    BigInt det = 1;
    for (const auto& di : q.smith().diagonal()) det *= di;
    CHECK(det == q.cardinality());
  }
}

TEST_CASE("non-invariant ideals are rejected by induce_map") {
  auto k = preset("gaussian");
  auto q = quotient(k, {2, 1});  // (2+i) is not conjugation-invariant
  CHECK(q.cardinality() == 5);
  CHECK_THROWS_AS(induce_automorphism(k->automorphism("conj"), q), NotWellDefined);
}

TEST_CASE("CRT decomposition") {
  auto k = preset("gaussian");
  auto q5 = quotient(k, {5, 0});
  auto c5 = crt_decompose(q5);
  REQUIRE(c5.size() == 2);
  CHECK(c5[0].ring.cardinality() == 5);
  CHECK(c5[1].ring.cardinality() == 5);
  auto q3 = quotient(k, {3, 0});
  auto c3 = crt_decompose(q3);
  REQUIRE(c3.size() == 1);
  CHECK(c3[0].ring.cardinality() == 9);
  CHECK(c3[0].ring.is_field());

  auto z = preset("rationals");
  auto q6 = quotient(z, {6});
  auto c6 = crt_decompose(q6);
  REQUIRE(c6.size() == 2);
  std::vector<std::uint64_t> sizes{c6[0].ring.cardinality(), c6[1].ring.cardinality()};
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::uint64_t>{2, 3});

  for (auto* comps : {&c5, &c3, &c6}) {
    const auto& q = comps == &c5 ? q5 : (comps == &c3 ? q3 : q6);
    std::uint32_t sum = 0;
    for (const auto& c : *comps) {
      sum = q.add(sum, c.idempotent);
      for (std::uint32_t y = 0; y < c.ring.cardinality(); ++y) CHECK(c.project(c.embed(y)) == y);
    }
    CHECK(sum == q.one());
  }
}

TEST_CASE("split case: sigma_bar swaps the slots") {
  auto k = preset("gaussian");
  auto q = quotient(k, {5, 0});
  auto s = induce_automorphism(k->automorphism("conj"), q);
  auto comps = crt_decompose(q);
  auto lengths = order_by_orbits(comps, s);
  CHECK(lengths == std::vector<std::size_t>{2});
  for (std::size_t j = 0; j < comps.size(); ++j) CHECK(image_component(comps, s, j) == (j + 1) % comps.size());
}

TEST_CASE("prime powers of an inert prime give local rings") {
  auto k = preset("gaussian_sqrt5");
  for (int s = 1; s <= 3; ++s) {
    IntegralIdeal I = ideal_power(*k, principal_ideal(*k, k->make_integral({1, 1, 0, 0}), "F"), s);
    auto q = FiniteQuotientRing::build(k, I);
    std::uint64_t expect = 1;
    for (int j = 0; j < s; ++j) expect *= 4;
    CHECK(q.cardinality() == expect);
    CHECK(is_local(q));
    CHECK(crt_decompose(q).size() == 1);
    CHECK(q.cardinality() / nilradical(q).size() == 4);
    if (s > 1) {
      CHECK_THROWS_AS(splitting_report(q, "F"), InvalidArgument);
    }
  }
}

TEST_CASE("galois fields") {
  auto f4 = galois_field(2, 2);
  CHECK(f4.ring.cardinality() == 4);
  CHECK(f4.ring.is_field());
  CHECK(f4.frobenius.order() == 2);
  auto f16 = galois_field(2, 4);
  CHECK(f16.ring.is_field());
  CHECK(f16.frobenius.order() == 4);
  CHECK(fixed_subring(f16.frobenius).cardinality() == 2);
  auto f9 = galois_field(3, 2);
  CHECK(f9.ring.cardinality() == 9);
}

TEST_CASE("quotient errors") {
  auto k = preset("gaussian");
  CHECK_THROWS_AS(principal_ideal(*k, k->zero()), ZeroIdeal);
  CHECK_THROWS_AS(quotient(k, {1001, 0}).cardinality(), BudgetExceeded);
}
