#include <random>

#include "doctest.h"
#include "petit/number_field/field_io.hpp"
#include "petit/number_field/presets.hpp"
#include "petit/util/error.hpp"

using namespace petit;

namespace {

FieldElement random_integral(const NumberField& k, std::mt19937_64& rng, int bound = 5) {
  std::uniform_int_distribution<long> d(-bound, bound);
  std::vector<long> c(k.degree());
  for (auto& x : c) x = d(rng);
  return k.make_integral(c);
}

}  // namespace

TEST_CASE("gaussian_sqrt5 preset") {
  NumberField k = field_preset("gaussian_sqrt5");
  CHECK(k.degree() == 4);
  const auto i = k.basis(1), phi = k.basis(2);
  CHECK(k.mul(i, i) == k.from_integer(-1));
  CHECK(k.mul(phi, phi) == k.add(phi, k.one()));
  const auto& sigma = k.automorphism("sigma");
  CHECK(k.is_fixed_by(i, sigma));
  const auto sqrt5 = k.sub(k.scale(phi, 2), k.one());
  CHECK(k.apply(sigma, sqrt5) == k.neg(sqrt5));
  CHECK(sigma.order == 2);
}

TEST_CASE("eisenstein_omega7 preset has sigma of order 3 over Q(w)") {
  NumberField k = field_preset("eisenstein_omega7");
  CHECK(k.degree() == 6);
  const auto& sigma = k.automorphism("sigma");
  CHECK(sigma.order == 3);
  CHECK(k.is_fixed_by(k.basis(1), sigma));
  CHECK_FALSE(k.is_fixed_by(k.basis(2), sigma));
}

TEST_CASE("every preset round-trips and its automorphisms are ring homomorphisms") {
  std::mt19937_64 rng(5);
  for (const auto& name : field_preset_names()) {
    NumberField k = field_preset(name);
    NumberField again = load_field(field_to_json(k));
    CHECK(again.degree() == k.degree());
    for (const auto& s : k.automorphisms()) {
      for (int t = 0; t < 20; ++t) {
        auto x = random_integral(k, rng), y = random_integral(k, rng);
        CHECK(k.apply(s, k.mul(x, y)) == k.mul(k.apply(s, x), k.apply(s, y)));
        CHECK(k.apply(s, k.add(x, y)) == k.add(k.apply(s, x), k.apply(s, y)));
        CHECK(k.apply_power(s, x, s.order) == x);
      }
    }
    for (int t = 0; t < 20; ++t) {
      auto x = random_integral(k, rng), y = random_integral(k, rng);
      CHECK(k.mul(x, y).is_integral());
      CHECK(k.add(x, y).is_integral());
    }
  }
}

TEST_CASE("inverses") {
  NumberField g = field_preset("gaussian");
  auto x = g.make_integral({1, 1});
  auto inv = g.inverse(x);
  CHECK(inv == g.make({BigRational(1, 2), BigRational(-1, 2)}));
  CHECK_THROWS_AS(g.inverse(g.zero()), ZeroInverse);
  std::mt19937_64 rng(9);
  NumberField k = field_preset("eisenstein_omega7");
  int tested = 0;
  while (tested < 100) {
    auto y = random_integral(k, rng, 3);
    if (y.is_zero()) continue;
    CHECK(k.mul(y, k.inverse(y)) == k.one());
    ++tested;
  }
}

TEST_CASE("power independence") {
  NumberField k = field_preset("gaussian_sqrt5");
  const auto& F = k.subfield("F");
  CHECK(k.power_independence(k.basis(2), 2, F));
  CHECK_FALSE(k.power_independence(k.one(), 2, F));
  CHECK_FALSE(k.power_independence(k.basis(1), 2, F));
}

TEST_CASE("load_field rejects a basis whose first element is not 1") {
  nlohmann::json spec = {{"name", "bad"},
                         {"basis", {"a", "b"}},
                         {"mul_table", {{0, 0, {0, 1}}, {0, 1, {1, 0}}, {1, 1, {1, 0}}}}};
  CHECK_THROWS_AS(load_field(spec), AxiomViolation);
}

TEST_CASE("load_field rejects a non-multiplicative automorphism") {
  nlohmann::json spec = field_to_json(field_preset("gaussian"));
  spec["automorphisms"]["conj"]["images"] = {{1, 0}, {1, 1}};
  CHECK_THROWS_AS(load_field(spec), BadAutomorphism);
}

TEST_CASE("load_field rejects a wrong order and a wrong fixed field") {
  nlohmann::json spec = field_to_json(field_preset("gaussian"));
  spec["automorphisms"]["conj"]["order"] = 4;
  CHECK_THROWS_AS(load_field(spec), BadAutomorphism);
  nlohmann::json spec2 = field_to_json(field_preset("gaussian_sqrt5"));
  spec2["automorphisms"]["sigma"]["fixed"] = "Qphi";
  CHECK_THROWS_AS(load_field(spec2), BadAutomorphism);
}

TEST_CASE("load_field rejects nonassociative tables") {
  // b1 = 1, b2^2 = b3, b3^2 = b2, b2 b3 = b2: (b2 b2) b3 = b3 b3 = b2, b2 (b2 b3) = b2 b2 = b3
  nlohmann::json spec = {{"name", "nonassoc"},
                         {"basis", {"1", "u", "v"}},
                         {"mul_table", {{1, 1, {0, 0, 1}}, {2, 2, {0, 1, 0}}, {1, 2, {0, 1, 0}}}}};
  CHECK_THROWS_AS(load_field(spec), AxiomViolation);
}

TEST_CASE("malformed field text gives a ConfigError") {
  CHECK_THROWS_AS(load_field_text("{ not json"), ConfigError);
  CHECK_THROWS_AS(load_field_text("{\"basis\": [\"1\"]}"), ConfigError);
}

TEST_CASE("embeddings and conjugation") {
  NumberField k = field_preset("gaussian_sqrt5");
  auto z = k.embed(k.basis(3));
  CHECK(z.imag() == doctest::Approx((1 + std::sqrt(5.0)) / 2));
  nlohmann::json spec = field_to_json(k);
  spec["embeddings"]["default"][2] = {1.5, 0.0};
  CHECK_THROWS_AS(load_field(spec), ConfigError);
}

TEST_CASE("norms") {
  NumberField g = field_preset("gaussian");
  CHECK(g.norm(g.make_integral({1, 1})) == 2);
  CHECK(g.trace(g.make_integral({3, 1})) == 6);
}
