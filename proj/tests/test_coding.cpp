#include <random>

#include "doctest.h"
#include "petit/coding/coset_code.hpp"
#include "petit/config/job.hpp"
#include "petit/number_field/presets.hpp"

using namespace petit;

namespace {

struct Fixture {
  Job job = parse_job(job_preset("ex_inert"));
  std::shared_ptr<const NaturalOrder> order = make_cyclic_order(job);
  QuotientAlgebra q = reduce_mod(order, *job.ideal, job.budget);
  const NumberField& k() const { return order->field(); }
};

NaturalOrder::Element random_element(const NaturalOrder& o, std::mt19937_64& rng, long bound = 4) {
  std::uniform_int_distribution<long> u(-bound, bound);
  NaturalOrder::Element x;
  for (int j = 0; j < o.degree(); ++j) {
    std::vector<long> c(o.field().degree());
    for (auto& v : c) v = u(rng);
    x.push_back(o.field().make_integral(c));
  }
  return x;
}

}  // namespace

TEST_CASE("inner matrices") {
  Fixture f;
  const auto& a = f.order->algebra();
  const auto& k = f.k();
  auto id = inner_matrix(*f.order, a.one());
  CHECK(id == identity_matrix(NumberFieldRing(f.order->spec().field, true), 2));
  auto g = inner_matrix(*f.order, a.t_power(1));
  CHECK(g[0][0].is_zero());
  CHECK(g[0][1] == k.basis(2));
  CHECK(g[1][0] == k.one());
  CHECK(g[1][1].is_zero());
  auto det = exact_determinant(k, g, 0);
  CHECK(det.exact == k.neg(k.basis(2)));
  CHECK(det.abs2 == doctest::Approx(std::pow((1 + std::sqrt(5.0)) / 2, 2)).epsilon(1e-12));
  CHECK_THROWS_AS(codeword_matrix(*f.order, a.zero()), ZeroElement);
}

TEST_CASE("iterated inner matrix of t") {
  auto job = parse_job(job_preset("iterated_tau_omega"));
  auto o = make_iterated_order(job);
  const auto& a = o->algebra();
  auto m = inner_matrix(*o, a.t_power(1));
  REQUIRE(m.size() == 6);
  CHECK(m == iterated_matrix_blocks(a, a.t_power(1)));
  // t^j for j < 2 maps to t^{j+1}; the top-right block carries d = w
  CHECK(m[2][0] == o->field().one());
  CHECK(m[4][2] == o->field().one());
  CHECK(m[0][4] == o->field().basis(1));
}

TEST_CASE("lifting is a section of the projection") {
  Fixture f;
  auto code = parity_code(symbol_space(f.q), 3);
  CHECK(code.words.size() == 256);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::size_t> pick(0, code.words.size() - 1);
  for (int trial = 0; trial < 100; ++trial) {
    const auto& w = code.words[pick(rng)];
    CHECK(project_codeword(f.q, lift_codeword(f.q, code, w)) == w);
  }
  const Word zero(3, symbol_space(f.q).zero());
  for (const auto& x : lift_codeword(f.q, code, zero)) CHECK(f.order->algebra().is_zero(x));
  Word bad = zero;
  bad[0][0] = 1;
  CHECK_THROWS_AS(lift_codeword(f.q, code, bad), NotInOuterCode);
}

TEST_CASE("parity triples: gamma(x2) = gamma(x0) + gamma(x1) modulo I") {
  Fixture f;
  auto code = parity_code(symbol_space(f.q), 3);
  for (std::size_t i = 0; i < code.words.size(); i += 17) {
    auto xs = lift_codeword(f.q, code, code.words[i]);
    auto g0 = inner_matrix(*f.order, xs[0]), g1 = inner_matrix(*f.order, xs[1]), g2 = inner_matrix(*f.order, xs[2]);
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t c = 0; c < 2; ++c)
        CHECK(f.q.coefficients.project(f.k().sub(g2[r][c], f.k().add(g0[r][c], g1[r][c]))) == 0);
  }
}

TEST_CASE("projection is additive") {
  Fixture f;
  std::mt19937_64 rng(9);
  const auto s = symbol_space(f.q);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<NaturalOrder::Element> xs, ys, sum;
    for (int l = 0; l < 3; ++l) {
      xs.push_back(random_element(*f.order, rng));
      ys.push_back(random_element(*f.order, rng));
      sum.push_back(f.order->algebra().add(xs.back(), ys.back()));
    }
    auto px = project_codeword(f.q, xs), py = project_codeword(f.q, ys), ps = project_codeword(f.q, sum);
    for (int l = 0; l < 3; ++l) CHECK(ps[l] == s.add(px[l], py[l]));
  }
}

TEST_CASE("Hamming distances") {
  Fixture f;
  const auto s = symbol_space(f.q);
  for (std::size_t len : {1u, 2u, 4u}) {
    auto rep = repetition_code(s, len);
    if (len > 1 || rep.words.size() > 1) CHECK(hamming_distance(rep) == len);
  }
  auto parity = parity_code(s, 3);
  CHECK(hamming_distance(parity) == 2);
  CHECK(hamming_distance_pairwise(parity) == 2);
  auto free = free_code(s, 2);
  CHECK(free.words.size() == 256);
  CHECK(hamming_distance(free) == 1);
  OuterCode empty{"empty", 3, s, {}, true};
  CHECK_THROWS_AS(hamming_distance(empty), EmptyCode);
}

TEST_CASE("minimum determinants and the key bound") {
  Fixture f;
  const auto& k = f.k();
  NumberFieldRing ring(f.order->spec().field, true);
  CHECK(min_det(k, {identity_matrix(ring, 2)}, 0).value == doctest::Approx(1.0));
  CHECK_THROWS_AS(min_det(k, {Matrix<FieldElement>(2, std::vector<FieldElement>(2, k.zero()))}, 0), EmptyCode);
  CHECK(key_bound(1.0, 2, std::abs(std::complex<double>(1, 1)), 2) == doctest::Approx(4.0));
  CHECK(key_bound(1.0, 1, 1.7, 3) == doctest::Approx(1.0));
  CHECK(key_bound(1.0, 2, k, k.make_integral({1, 1, 0, 0}), 2, 0) == doctest::Approx(4.0));
  auto bare = std::make_shared<const NumberField>(monogenic_order("Zx", {1, 0, 1}));
  CHECK_THROWS_AS(key_bound(1.0, 2, *bare, bare->one(), 2, 0), EmbeddingMissing);
  CHECK_THROWS_AS(embedding_index(*bare, ""), EmbeddingMissing);
  CHECK_THROWS_AS(embedding_index(k, "nope"), EmbeddingMissing);
}

TEST_CASE("determinant exactness against conjugation and norms") {
  Fixture f;
  const auto& k = f.k();
  const auto& conj = k.automorphism(k.conjugation());
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    auto x = random_element(*f.order, rng);
    if (f.order->algebra().is_zero(x)) continue;
    auto d = exact_determinant(k, inner_matrix(*f.order, x), 0);
    // |det|^2 = det * conj(det), exactly, then embedded
    const FieldElement n2 = k.mul(d.exact, k.apply(conj, d.exact));
    const double exact = k.embed(n2, 0).real();
    CHECK(std::abs(d.abs2 - exact) <= 1e-6 * std::max(1.0, exact));
    CHECK(k.norm(n2) == k.norm(d.exact) * k.norm(d.exact));
    CHECK(d.exact.is_integral());
  }
}

TEST_CASE("full diversity for the division-proved order") {
  Fixture f;
  REQUIRE(f.order->division_status() == DivisionStatus::Proved);
  const auto& k = f.k();
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 100; ++trial) {
    auto x = random_element(*f.order, rng), y = random_element(*f.order, rng);
    if (x == y) continue;
    auto gx = inner_matrix(*f.order, x), gy = inner_matrix(*f.order, y);
    auto gd = inner_matrix(*f.order, f.order->algebra().sub(x, y));
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t c = 0; c < 2; ++c) CHECK(k.sub(gx[r][c], gy[r][c]) == gd[r][c]);
    CHECK_FALSE(exact_determinant(k, gd, 0).exact.is_zero());
  }
}

TEST_CASE("prescribed distance construction") {
  Fixture f;
  const auto& kbar = f.q.coefficients;
  // repetition code over F4 of length 2: size |B| * 4^{L (m-1)} = 4 * 16
  auto c = prescribed_distance_code(f.q, {{kbar.one(), kbar.one()}}, 2);
  CHECK(c.words.size() == 64);
  CHECK(hamming_distance_pairwise(c) == hamming_distance(c));
  // the free second coordinates allow weight-one words
  CHECK(hamming_distance(c) == 1);
  auto zero = prescribed_distance_code(f.q, {}, 2);
  CHECK(zero.words.size() == 16);
  for (const auto& w : zero.words)
    for (const auto& s : w) CHECK(s[0] == 0);
  auto spc = prescribed_distance_code(f.q, {{kbar.one(), 0, kbar.one()}, {0, kbar.one(), kbar.one()}}, 3);
  CHECK(spc.words.size() == 16 * 64);

  auto sq = parse_job(job_preset("ex_inert_square"));
  auto q2 = reduce_mod(make_cyclic_order(sq), *sq.ideal);
  CHECK_THROWS_AS(prescribed_distance_code(q2, {{1, 1}}, 2), NotAField);
}

TEST_CASE("codebook records") {
  Fixture f;
  auto code = parity_code(symbol_space(f.q), 3);
  auto recs = codebook_records(f.q, code, 0, 5);
  REQUIRE(recs.size() == 5);
  CHECK(recs[3]["matrices"].size() == 3);
  CHECK(recs[3]["det"].size() == 3);
  CHECK(recs[3]["index"] == 3);
  CHECK(recs[0]["abs2"][0] == 0.0);
}

TEST_CASE("box enumeration agrees with a brute-force triple scan") {
  Fixture f;
  const auto& k = f.k();
  auto code = parity_code(symbol_space(f.q), 3);
  const FieldElement alpha = k.make_integral({1, 1, 0, 0});
  auto rep = enumerate_coset_box(f.q, code, 1, {0, 2}, 0, alpha, 2);
  CHECK(rep.box_elements == 81);
  CHECK(rep.d_h == 2);
  CHECK(rep.bound == doctest::Approx(4.0 * rep.min_inner_det));

  // oracle: every triple of box elements, projected and checked for parity
  std::vector<NaturalOrder::Element> elems;
  for (long a = -1; a <= 1; ++a)
    for (long b = -1; b <= 1; ++b)
      for (long c = -1; c <= 1; ++c)
        for (long d = -1; d <= 1; ++d) elems.push_back({k.make_integral({a, 0, b, 0}), k.make_integral({c, 0, d, 0})});
  std::vector<ComplexMatrix> gram;
  std::vector<Symbol> sym;
  for (const auto& x : elems) {
    auto em = embed_matrix(k, inner_matrix(*f.order, x), 0);
    ComplexMatrix g(2, std::vector<std::complex<double>>(2));
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c)
        for (int l = 0; l < 2; ++l) g[r][c] += em[r][l] * std::conj(em[c][l]);
    gram.push_back(g);
    sym.push_back(f.q.psi(x));
  }
  const auto s = symbol_space(f.q);
  double best = 1e300;
  std::size_t count = 0;
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = 0; j < elems.size(); ++j)
      for (std::size_t l = 0; l < elems.size(); ++l) {
        if (sym[l] != s.add(sym[i], sym[j])) continue;
        if (f.order->algebra().is_zero(elems[i]) && f.order->algebra().is_zero(elems[j]) && f.order->algebra().is_zero(elems[l])) continue;
        ++count;
        ComplexMatrix sum(2, std::vector<std::complex<double>>(2));
        for (int r = 0; r < 2; ++r)
          for (int c = 0; c < 2; ++c) sum[r][c] = gram[i][r][c] + gram[j][r][c] + gram[l][r][c];
        best = std::min(best, (sum[0][0] * sum[1][1] - sum[0][1] * sum[1][0]).real());
      }
  CHECK(rep.codewords == count);
  CHECK(rep.min_sigma_det == doctest::Approx(best).epsilon(1e-9));
  CHECK(rep.bound_holds());
}
