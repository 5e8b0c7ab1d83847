// Acceptance criteria; run with a criterion number (1-9) or "all".
// Prints one "criterion N: PASS|FAIL: ..." line per criterion.

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>
#include <unistd.h>

#include "petit/algebra/analysis.hpp"
#include "petit/coding/coset_code.hpp"
#include "petit/config/job.hpp"
#include "petit/exact/determinant.hpp"
#include "petit/finite/decompose.hpp"

using namespace petit;

namespace {

using E = FiniteQuotientRing::Element;
using FRing = SkewPolyRing<FiniteQuotientRing>;
using FPoly = FRing::Poly;
using FAlg = PetitAlgebra<FiniteQuotientRing>;

struct Outcome {
  bool pass = false;
  std::string detail;
};

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string fmt_seconds(double s) {
  std::ostringstream os;
  os.precision(3);
  os << s << " s";
  return os.str();
}

Job preset_job(const std::string& name) { return parse_job(job_preset(name)); }

QuotientAlgebra cyclic_quotient(const std::string& name) {
  Job job = preset_job(name);
  return reduce_mod(make_cyclic_order(job), *job.ideal, job.budget);
}

const std::vector<std::string> kCyclic = {"ex_inert",     "ex_inert_square", "ex_inert_cube",       "center_inert",
                                          "center_split", "cubic_omega7",    "quartic_omega15",     "gaussian_conj_inert",
                                          "gaussian_conj_split", "gaussian_conj_product"};
const std::vector<std::string> kIterated = {"iterated_tau_omega", "iterated_q_squared"};

FieldElement random_integral(const NumberField& k, std::mt19937_64& rng, long bound) {
  std::uniform_int_distribution<long> u(-bound, bound);
  std::vector<long> c(k.degree());
  for (auto& x : c) x = u(rng);
  return k.make_integral(c);
}

NaturalOrder::Element random_element(const NaturalOrder& o, std::mt19937_64& rng, long bound = 5) {
  NaturalOrder::Element x;
  for (int j = 0; j < o.degree(); ++j) x.push_back(random_integral(o.field(), rng, bound));
  return x;
}

IteratedOrder::Element random_element(const IteratedOrder& o, std::mt19937_64& rng, long bound = 3) {
  IteratedOrder::Element x;
  for (int j = 0; j < o.spec().m; ++j) {
    std::vector<FieldElement> dj;
    for (int i = 0; i < o.spec().n; ++i) dj.push_back(random_integral(o.field(), rng, bound));
    x.push_back(std::move(dj));
  }
  return x;
}

// x in g O_K iff x / g is integral (principal ideals only).
bool divisible(const NumberField& k, const FieldElement& x, const FieldElement& g) {
  return k.mul(x, k.inverse(g)).is_integral();
}

FAlg binomial(const FRing& r, int m, E c) {
  return FAlg(r, r.sub(r.monomial(r.coefficients().one(), m), r.constant(c)));
}

FRing frobenius_ring(const GaloisField& gf) {
  InducedMap s = gf.frobenius;
  return FRing(gf.ring, [s](const E& x) { return s(x); });
}

// All pairs of monic g, h with g h = f.
bool naive_reducible(const FRing& r, const FPoly& f) {
  const int m = f.degree().value();
  for (int k = 1; k < m; ++k) {
    bool hit = for_each_monic(r, k, [&](const FPoly& g) {
      return for_each_monic(r, m - k, [&](const FPoly& h) { return r.equal(r.mul(g, h), f); });
    });
    if (hit) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------

Outcome criterion1() {
  Timer timer;
  auto q = cyclic_quotient("ex_inert");
  const auto& s = q.coefficients;
  const auto fix = fixed_subring(q.sigma_bar);
  bool ok = q.cardinality() == 16 && s.cardinality() == 4 && s.is_field() && fix.cardinality() == 2;
  int tested = 0, division = 0, agree = 0, trivial = 0;
  for (E c = 0; c < s.cardinality(); ++c) {
    if (q.sigma_bar(c) == c) continue;
    ++tested;
    auto a = binomial(q.target.ring(), 2, c);
    auto rep = analyze_division(a, 65536);
    division += rep.status == DivisionStatus::Proved;
    agree += rep.consistent && rep.irreducible && rep.right_maps_regular && rep.left_maps_regular &&
             *rep.irreducible == *rep.right_maps_regular && *rep.irreducible == *rep.left_maps_regular;
    trivial += two_sided_ideals(a).only_trivial();
  }
  const bool preset_trivial = two_sided_ideals(q.target).only_trivial();
  const double t = timer.seconds();
  ok = ok && tested == 2 && division == 2 && agree == 2 && trivial == 2 && preset_trivial && t < 1.0;
  std::ostringstream os;
  os << "|A| = " << q.cardinality() << ", |O_K/I| = " << s.cardinality() << (s.is_field() ? " (field)" : "")
     << ", |Fix| = " << fix.cardinality() << "; c not in F2: " << tested << " tested, " << division << " division, " << agree
     << " with scans agreeing, " << trivial << " with only trivial ideals; " << fmt_seconds(t);
  return {ok, os.str()};
}

Outcome criterion2() {
  Timer timer;
  auto q = cyclic_quotient("cubic_omega7");
  const auto& s = q.coefficients;
  const auto sr = splitting_report(s, "F");
  bool ok = sr.e == 1 && sr.f == 3 && sr.g == 1 && s.cardinality() == 64 && s.is_field();
  int outside = 0, outside_division = 0, inside = 0, inside_division = 0;
  for (E c = 1; c < s.cardinality(); ++c) {
    const bool irreducible = !find_right_factor(q.target.ring(), binomial(q.target.ring(), 3, c).modulus()).has_value();
    if (q.sigma_bar(c) == c) {
      ++inside;
      inside_division += irreducible;
    } else {
      ++outside;
      outside_division += irreducible;
    }
  }
  const double t = timer.seconds();
  ok = ok && outside == 60 && outside_division == 60 && t < 30.0;
  std::ostringstream os;
  os << "e f g = " << sr.e << " " << sr.f << " " << sr.g << ", |O_K/2| = " << s.cardinality() << "; c in F64 minus F4: "
     << outside_division << "/" << outside << " division; c in F4^x: " << inside_division << "/" << inside
     << " division";
  if (inside_division != inside) os << " (the claim for every nonzero c fails on F4^x: t^3 - c has a right factor there)";
  os << "; " << fmt_seconds(t);
  return {ok, os.str()};
}

Outcome criterion3() {
  Timer timer;
  Job job = preset_job("quartic_omega15");
  auto o = make_cyclic_order(job);
  auto q = reduce_mod(o, *job.ideal, job.budget);
  const auto& k = o->field();
  const auto& s = q.coefficients;
  bool ok = s.cardinality() == 16 && s.is_field();

  std::vector<FieldElement> lifts{k.basis(2)};  // theta itself
  std::mt19937_64 rng(job.seed);
  while (lifts.size() < 200) {
    auto c = random_integral(k, rng, 3);
    if (k.apply(o->sigma(), c) != c) lifts.push_back(c);
  }
  std::vector<int> seen(s.cardinality(), 0);
  for (const auto& c : lifts) seen[s.project(c)]++;

  int distinct = 0, reducible = 0, independent = 0, independent_irreducible = 0;
  std::string witness;
  for (E c = 0; c < s.cardinality(); ++c) {
    if (!seen[c]) continue;
    ++distinct;
    const auto f = binomial(q.target.ring(), 4, c).modulus();
    const bool red = find_right_factor(q.target.ring(), f).has_value();
    reducible += red;
    // 1, c, c^2, c^3 independent over F2: no nonempty subset sums to 0
    std::array<E, 4> pw{s.one(), c, s.mul(c, c), s.mul(s.mul(c, c), c)};
    bool indep = true;
    for (int mask = 1; mask < 16 && indep; ++mask) {
      E sum = s.zero();
      for (int b = 0; b < 4; ++b)
        if (mask & (1 << b)) sum = s.add(sum, pw[static_cast<std::size_t>(b)]);
      indep = sum != s.zero();
    }
    independent += indep;
    if (indep && !red) ++independent_irreducible;
    if (!red && witness.empty()) witness = q.target.ring().to_string(f);
  }
  const double t = timer.seconds();
  ok = ok && reducible == distinct && t < 30.0;
  std::ostringstream os;
  os << "|O_K/I| = " << s.cardinality() << "; " << lifts.size() << " lifts c outside O_F give " << distinct
     << " residues; reducible: " << reducible << "/" << distinct << "; 1, c, c^2, c^3 independent for " << independent
     << " (of those, irreducible: " << independent_irreducible << ")";
  if (!witness.empty()) os << "; irreducible witness " << witness;
  os << "; " << fmt_seconds(t);
  return {ok, os.str()};
}

Outcome criterion4() {
  int failures = 0, presets = 0;
  std::string where;
  auto note = [&](const std::string& name, int f) {
    if (f && where.empty()) where = " (first failure: " + name + ")";
    failures += f;
  };
  for (const auto& name : kCyclic) {
    Job job = preset_job(name);
    auto q = reduce_mod(make_cyclic_order(job), *job.ideal, job.budget);
    const auto& o = *q.source;
    const auto& g = job.ideal->generators.at(0);
    std::mt19937_64 rng(job.seed);
    int f = 0;
    for (int i = 0; i < 500; ++i) {
      auto x = random_element(o, rng), y = random_element(o, rng);
      f += q.psi(o.algebra().mul(x, y)) != q.target.mul(q.psi(x), q.psi(y));
    }
    for (int i = 0; i < 500; ++i) {
      auto x = random_element(o, rng);
      if (i % 2 == 0)
        for (auto& c : x) c = o.field().mul(c, g);
      bool oracle = true;
      for (const auto& c : x) oracle = oracle && divisible(o.field(), c, g);
      f += q.target.is_zero(q.psi(x)) != oracle;
    }
    note(name, f);
    ++presets;
  }
  for (const auto& name : kIterated) {
    Job job = preset_job(name);
    auto o = make_iterated_order(job);
    auto q = reduce_mod(o, *job.ideal, job.budget);
    const auto& g = job.ideal->generators.at(0);
    std::mt19937_64 rng(job.seed);
    int f = 0;
    for (int i = 0; i < 500; ++i) {
      auto x = random_element(*o, rng), y = random_element(*o, rng);
      f += q.psi(o->algebra().mul(x, y)) != q.target.mul(q.psi(x), q.psi(y));
    }
    for (int i = 0; i < 500; ++i) {
      auto x = random_element(*o, rng);
      if (i % 2 == 0)
        for (auto& dj : x)
          for (auto& c : dj) c = o->field().mul(c, g);
      bool oracle = true;
      for (const auto& dj : x)
        for (const auto& c : dj) oracle = oracle && divisible(o->field(), c, g);
      f += q.target.is_zero(q.psi(x)) != oracle;
    }
    note(name, f);
    ++presets;
  }
  std::ostringstream os;
  os << presets << " presets, 500 product pairs and 500 kernel samples each; failures: " << failures << where;
  return {failures == 0, os.str()};
}

Outcome criterion5() {
  int checked = 0, disagreements = 0, instances = 0, three_way = 0;
  struct Range {
    int k;
    int max_degree;
  };
  for (Range rg : {Range{2, 3}, Range{4, 2}}) {
    auto r = frobenius_ring(galois_field(2, rg.k));
    for (int m = 1; m <= rg.max_degree; ++m)
      for_each_monic(r, m, [&](const FPoly& f) {
        const bool irr = is_irreducible_finite(r, f);
        ++checked;
        disagreements += irr == naive_reducible(r, f);
        if (m < 2) return false;  // S_f needs deg f >= 2
        auto rep = analyze_division(FAlg(r, f), 65536);
        ++instances;
        three_way += rep.consistent && rep.irreducible && rep.right_maps_regular && rep.left_maps_regular &&
                     *rep.irreducible == irr && *rep.right_maps_regular == irr && *rep.left_maps_regular == irr &&
                     (rep.status == DivisionStatus::Proved) == irr;
        return false;
      });
  }
  // binomials t^4 - c over F16: |A| = 65536
  auto r16 = frobenius_ring(galois_field(2, 4));
  for (E c = 0; c < 16; ++c) {
    auto rep = analyze_division(binomial(r16, 4, c), 65536);
    ++instances;
    three_way += rep.consistent && rep.irreducible && rep.right_maps_regular && rep.left_maps_regular &&
                 *rep.irreducible == *rep.right_maps_regular && *rep.irreducible == *rep.left_maps_regular;
  }
  std::ostringstream os;
  os << checked << " monic polynomials against the all-pairs oracle, " << disagreements << " disagreements; three-way agreement on "
     << three_way << "/" << instances << " algebras";
  return {disagreements == 0 && three_way == instances, os.str()};
}

Outcome criterion6() {
  int failures = 0, pairs = 0;
  // exhaustive on (F4/F2, sigma, w)
  {
    auto r = frobenius_ring(galois_field(2, 2));
    auto a = binomial(r, 2, r.coefficients().project(r.coefficients().field().basis(1)));
    FiniteAlgebra<FiniteQuotientRing> v(a);
    for (std::uint64_t i = 0; i < 16; ++i)
      for (std::uint64_t j = 0; j < 16; ++j) {
        auto x = v.element(i), y = v.element(j);
        failures += matrix_apply(r.coefficients(), gamma(a, y), x) != a.mul(x, y);
        ++pairs;
      }
  }
  int exhaustive = pairs;
  // 1000 seeded pairs per quotient preset, and on the orders themselves
  for (const auto& name : kCyclic) {
    auto q = cyclic_quotient(name);
    FiniteAlgebra<FiniteQuotientRing> v(q.target);
    std::mt19937_64 rng(3);
    const auto card = v.cardinality();
    for (int i = 0; i < 1000; ++i) {
      auto x = v.element(rng() % card), y = v.element(rng() % card);
      failures += matrix_apply(q.coefficients, gamma(q.target, y), x) != q.target.mul(x, y);
      ++pairs;
    }
    const auto& o = *q.source;
    const auto& ok = o.algebra().coefficients();
    for (int i = 0; i < 200; ++i) {
      auto x = random_element(o, rng, 3), y = random_element(o, rng, 3);
      failures += matrix_apply(ok, gamma(o.algebra(), y), x) != o.algebra().mul(x, y);
      ++pairs;
    }
  }
  for (const auto& name : kIterated) {
    Job job = preset_job(name);
    auto q = reduce_mod(make_iterated_order(job), *job.ideal, job.budget);
    const auto& base = q.coefficients;
    std::mt19937_64 rng(3);
    auto rand_elem = [&] {
      IteratedQuotientPetit::Element x;
      for (int j = 0; j < q.target.degree(); ++j) {
        InnerQuotient::Element dj;
        for (int i = 0; i < q.inner.degree(); ++i) dj.push_back(static_cast<E>(rng() % base.cardinality()));
        x.push_back(std::move(dj));
      }
      return x;
    };
    for (int i = 0; i < 1000; ++i) {
      auto x = rand_elem(), y = rand_elem();
      failures += matrix_apply(base, iterated_matrix(q.target, y), flatten(q.target, x)) != flatten(q.target, q.target.mul(x, y));
      ++pairs;
    }
  }

  int annihilation_failures = 0, annihilation_checks = 0;
  for (const auto& name : kCyclic) {
    auto o = make_cyclic_order(preset_job(name));
    std::mt19937_64 rng(11);
    for (int i = 0; i < 100; ++i) {
      annihilation_failures += !charpoly_annihilation_check(*o, random_element(*o, rng, 3));
      ++annihilation_checks;
    }
  }
  for (const auto& name : kIterated) {
    auto o = make_iterated_order(preset_job(name));
    std::mt19937_64 rng(11);
    for (int i = 0; i < 100; ++i) {
      annihilation_failures += !charpoly_annihilation_check(*o, random_element(*o, rng, 2));
      ++annihilation_checks;
    }
  }
  std::ostringstream os;
  os << pairs << " pairs (" << exhaustive << " exhaustive), " << failures << " failures; charpoly annihilation "
     << annihilation_checks - annihilation_failures << "/" << annihilation_checks;
  return {failures == 0 && annihilation_failures == 0, os.str()};
}

Outcome criterion7() {
  auto inert = cyclic_quotient("center_inert");
  auto split = cyclic_quotient("center_split");
  const auto ci = decompose_quotient(inert);
  const auto cs = decompose_quotient(split);
  bool ok = ci.size() == 1 && ci[0].cardinality() == 81 * 81 && ci[0].center_cardinality == 9;
  ok = ok && cs.size() == 2;
  std::uint64_t product = 1;
  for (const auto& c : cs) {
    ok = ok && c.cardinality() == 625 && c.center_cardinality == 5 && c.slots_cyclic;
    product *= c.cardinality();
  }
  ok = ok && product == split.cardinality();

  // sigma_bar permutes the CRT slots of O_K / 5 O_K cyclically when 5 splits in O_K over the center
  auto q = cyclic_quotient("gaussian_conj_split");
  auto slots = crt_decompose(q.coefficients);
  order_by_orbits(slots, q.sigma_bar);
  bool cyclic = slots.size() == 2;
  for (std::size_t j = 0; cyclic && j < slots.size(); ++j) cyclic = image_component(slots, q.sigma_bar, j) == (j + 1) % slots.size();
  const auto cq = decompose_quotient(q);
  cyclic = cyclic && cq.size() == 1 && cq[0].slots == 2 && cq[0].slots_cyclic;
  std::ostringstream os;
  os << "<3>: " << ci.size() << " component(s) of " << (ci.empty() ? 0 : ci[0].cardinality()) << "; <5>: " << cs.size()
     << " components of";
  for (const auto& c : cs) os << " " << c.cardinality();
  os << "; Z[i]/5 over Z: " << slots.size() << " slots, sigma_bar shifts them " << (cyclic ? "cyclically" : "NOT cyclically");
  return {ok && cyclic, os.str()};
}

Outcome criterion8() {
  Timer timer;
  Job job = preset_job("ex_inert");
  auto q = reduce_mod(make_cyclic_order(job), *job.ideal, job.budget);
  const auto& code = *job.code;
  auto outer = parity_code(symbol_space(q), static_cast<std::size_t>(code.length));
  const auto emb = embedding_index(q.source->field(), code.embedding);
  const unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  auto rep = enumerate_coset_box(q, outer, code.box, code.box_coordinates, emb, code.alpha ? *code.alpha : job.ideal->generators[0],
                                 threads);
  const double t = timer.seconds();
  std::ostringstream os;
  os.precision(12);
  os << rep.box_elements << " box elements, " << rep.codewords << " codewords; min Sigma-det " << rep.min_sigma_det
     << " vs bound " << rep.bound << " (min inner det " << rep.min_inner_det << ", d_H " << rep.d_h << ", |alpha| " << rep.alpha_abs
     << ", n " << rep.n << "); " << fmt_seconds(t);
  return {code.length == 3 && code.box == 2 && rep.bound > 0 && rep.bound_holds(1e-6) && t < 60.0, os.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome criterion9() {
  const std::filesystem::path dir = std::filesystem::temp_directory_path() / ("petit_determinism_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  struct Run {
    std::string command;
    std::string preset;
    std::string extra_first;
    std::string extra_second;
  };
  std::vector<Run> runs;
  for (const auto& p : job_preset_names()) {
    runs.push_back({"analyze", p, "", ""});
    runs.push_back({"quotient", p, "", ""});
  }
  runs.push_back({"decompose", "gaussian_conj_product", "", ""});
  // the enumeration must not depend on the thread count
  runs.push_back({"codebook", "ex_inert", "--threads 1", "--threads 4"});
  runs.push_back({"bound", "ex_inert", "--threads 2", "--threads 3"});

  int identical = 0, failed = 0;
  std::string first_diff;
  for (const auto& r : runs) {
    std::string out[2];
    int rc[2];
    for (int k = 0; k < 2; ++k) {
      const auto file = dir / (r.command + "_" + r.preset + "_" + std::to_string(k) + ".jsonl");
      const std::string cmd = std::string(PETIT_CLI) + " " + r.command + " --preset " + r.preset + " --seed 7 --format records " +
                              (k == 0 ? r.extra_first : r.extra_second) + " > " + file.string() + " 2>/dev/null";
      rc[k] = std::system(cmd.c_str());
      out[k] = slurp(file);
    }
    if (rc[0] != 0 || rc[1] != 0 || out[0].empty()) {
      ++failed;
      if (first_diff.empty()) first_diff = r.command + " " + r.preset + " exited with an error";
    } else if (out[0] == out[1]) {
      ++identical;
    } else if (first_diff.empty()) {
      first_diff = r.command + " " + r.preset + " differs";
    }
  }
  std::filesystem::remove_all(dir);
  std::ostringstream os;
  os << identical << "/" << runs.size() << " command pairs byte-identical";
  if (failed) os << ", " << failed << " runs failed";
  if (!first_diff.empty()) os << "; " << first_diff;
  return {identical == static_cast<int>(runs.size()), os.str()};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::function<Outcome()>> criteria = {criterion1, criterion2, criterion3, criterion4, criterion5,
                                                          criterion6, criterion7, criterion8, criterion9};
  std::vector<int> which;
  const std::string arg = argc > 1 ? argv[1] : "all";
  if (arg == "all") {
    for (int i = 1; i <= 9; ++i) which.push_back(i);
  } else {
    const int id = std::atoi(arg.c_str());
    if (id < 1 || id > 9) {
      std::cerr << "usage: petit_acceptance [1-9|all]\n";
      return 2;
    }
    which.push_back(id);
  }
  bool all = true;
  for (int id : which) {
    Outcome o;
    try {
      o = criteria[static_cast<std::size_t>(id - 1)]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << "criterion " << id << ": " << (o.pass ? "PASS" : "FAIL") << ": " << o.detail << std::endl;
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
