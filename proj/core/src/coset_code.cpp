#include "petit/coding/coset_code.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <thread>

#include "petit/exact/determinant.hpp"
#include "petit/number_field/field_io.hpp"

namespace petit {

using json = nlohmann::json;

Matrix<FieldElement> inner_matrix(const NaturalOrder& order, const NaturalOrder::Element& x) {
  return right_multiplication_matrix(order.algebra(), x);
}

Matrix<FieldElement> inner_matrix(const IteratedOrder& order, const IteratedOrder::Element& x) {
  return iterated_matrix(order.algebra(), x);
}

Matrix<FieldElement> codeword_matrix(const NaturalOrder& order, const NaturalOrder::Element& x) {
  if (order.algebra().is_zero(x)) throw ZeroElement("codeword matrices need a nonzero element");
  return inner_matrix(order, x);
}

std::size_t embedding_index(const NumberField& k, const std::string& name) {
  if (!k.has_embedding()) throw EmbeddingMissing("field '" + k.name() + "' has no complex embedding");
  if (name.empty()) return 0;
  const auto& e = k.embeddings();
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i].name == name) return i;
  throw EmbeddingMissing("field '" + k.name() + "' has no embedding '" + name + "'");
}

ComplexMatrix embed_matrix(const NumberField& k, const Matrix<FieldElement>& m, std::size_t embedding) {
  ComplexMatrix out(m.size());
  for (std::size_t r = 0; r < m.size(); ++r)
    for (const auto& e : m[r]) out[r].push_back(k.embed(e, embedding));
  return out;
}

std::complex<double> complex_det(ComplexMatrix m) {
  const std::size_t n = m.size();
  std::complex<double> det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(m[i][k]) > std::abs(m[piv][k])) piv = i;
    if (m[piv][k] == 0.0) return 0;
    if (piv != k) {
      std::swap(m[piv], m[k]);
      det = -det;
    }
    det *= m[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      const auto f = m[i][k] / m[k][k];
      for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return det;
}

DetValue exact_determinant(const NumberField& k, const Matrix<FieldElement>& m, std::size_t embedding) {
  NumberFieldRing ring(std::shared_ptr<const NumberField>(&k, [](const NumberField*) {}), false);
  DetValue out{det_exact(ring, m), 0};
  const auto z = k.embed(out.exact, embedding);
  out.abs2 = std::norm(z);
  const auto em = embed_matrix(k, m, embedding);
  // Hadamard bound on the magnitude scale of the numeric determinant
  double scale = 1;
  for (const auto& row : em) {
    double s = 0;
    for (const auto& e : row) s += std::norm(e);
    scale *= std::max(1.0, std::sqrt(s));
  }
  if (std::abs(complex_det(em) - z) > 1e-9 * scale)
    throw AxiomViolation("numeric determinant disagrees with the exact value " + k.to_string(out.exact));
  return out;
}

MinDet min_det(const NumberField& k, const std::vector<Matrix<FieldElement>>& matrices, std::size_t embedding) {
  MinDet out;
  out.value = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < matrices.size(); ++i) {
    bool zero = true;
    for (const auto& row : matrices[i])
      for (const auto& e : row) zero = zero && e.is_zero();
    if (zero) continue;
    ++out.considered;
    const double v = exact_determinant(k, matrices[i], embedding).abs2;
    if (v < out.value) {
      out.value = v;
      out.argmin = i;
    }
  }
  if (out.considered == 0) throw EmptyCode("no nonzero matrices");
  return out;
}

double key_bound(double min_det_inner, std::size_t d_h, double alpha_abs, int n) {
  const double dh2 = static_cast<double>(d_h) * static_cast<double>(d_h);
  return min_det_inner * std::min(dh2, std::pow(alpha_abs, 2.0 * n));
}

double key_bound(double min_det_inner, std::size_t d_h, const NumberField& k, const FieldElement& alpha, int n,
                 std::size_t embedding) {
  if (!k.has_embedding()) throw EmbeddingMissing("field '" + k.name() + "' has no complex embedding");
  return key_bound(min_det_inner, d_h, std::abs(k.embed(alpha, embedding)), n);
}

// ---------------------------------------------------------------------------

std::uint64_t SymbolSpace::cardinality() const {
  std::uint64_t out = 1;
  const auto q = ring.cardinality();
  for (std::size_t i = 0; i < size; ++i) {
    if (out > std::numeric_limits<std::uint64_t>::max() / q) return 0;
    out *= q;
  }
  return out;
}

Symbol SymbolSpace::element(std::uint64_t i) const {
  Symbol s(size);
  const auto q = ring.cardinality();
  for (auto& c : s) {
    c = static_cast<FiniteQuotientRing::Element>(i % q);
    i /= q;
  }
  return s;
}

std::uint64_t SymbolSpace::index(const Symbol& s) const {
  std::uint64_t out = 0;
  const auto q = ring.cardinality();
  for (std::size_t i = s.size(); i-- > 0;) out = out * q + s[i];
  return out;
}

Symbol SymbolSpace::add(const Symbol& a, const Symbol& b) const {
  Symbol out(size);
  for (std::size_t i = 0; i < size; ++i) out[i] = ring.add(a[i], b[i]);
  return out;
}

bool SymbolSpace::is_zero(const Symbol& s) const {
  return std::all_of(s.begin(), s.end(), [](auto c) { return c == 0; });
}

SymbolSpace symbol_space(const QuotientAlgebra& q) {
  return SymbolSpace{q.coefficients, static_cast<std::size_t>(q.target.degree())};
}

SymbolSpace symbol_space(const IteratedQuotient& q) {
  return SymbolSpace{q.coefficients, static_cast<std::size_t>(q.target.degree() * q.inner.degree())};
}

bool OuterCode::contains(const Word& w) const { return std::binary_search(words.begin(), words.end(), w); }

namespace {

std::uint64_t checked_count(std::uint64_t base, std::size_t e, std::uint64_t budget, const std::string& what) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (base != 0 && out > budget / base) throw BudgetExceeded(what + " exceeds the budget of " + std::to_string(budget) + " words");
    out *= base;
  }
  return out;
}

std::uint64_t alphabet(const SymbolSpace& s) {
  const auto n = s.cardinality();
  if (n == 0) throw BudgetExceeded("symbol alphabet does not fit in 64 bits");
  return n;
}

OuterCode finish(OuterCode c) {
  std::sort(c.words.begin(), c.words.end());
  c.words.erase(std::unique(c.words.begin(), c.words.end()), c.words.end());
  return c;
}

}  // namespace

OuterCode repetition_code(const SymbolSpace& s, std::size_t length, std::uint64_t budget) {
  const auto n = checked_count(alphabet(s), 1, budget, "repetition code");
  OuterCode c{"repetition", length, s, {}, true};
  for (std::uint64_t i = 0; i < n; ++i) c.words.emplace_back(length, s.element(i));
  return finish(std::move(c));
}

OuterCode parity_code(const SymbolSpace& s, std::size_t length, std::uint64_t budget) {
  if (length < 2) throw InvalidArgument("parity code needs length at least 2");
  const auto a = alphabet(s);
  const auto n = checked_count(a, length - 1, budget, "parity code");
  OuterCode c{"parity", length, s, {}, true};
  for (std::uint64_t i = 0; i < n; ++i) {
    Word w;
    Symbol sum = s.zero();
    std::uint64_t r = i;
    for (std::size_t l = 0; l + 1 < length; ++l) {
      w.push_back(s.element(r % a));
      r /= a;
      sum = s.add(sum, w.back());
    }
    w.push_back(sum);
    c.words.push_back(std::move(w));
  }
  return finish(std::move(c));
}

OuterCode free_code(const SymbolSpace& s, std::size_t length, std::uint64_t budget) {
  const auto a = alphabet(s);
  const auto n = checked_count(a, length, budget, "free code");
  OuterCode c{"free", length, s, {}, true};
  for (std::uint64_t i = 0; i < n; ++i) {
    Word w;
    std::uint64_t r = i;
    for (std::size_t l = 0; l < length; ++l) {
      w.push_back(s.element(r % a));
      r /= a;
    }
    c.words.push_back(std::move(w));
  }
  return finish(std::move(c));
}

std::vector<std::vector<FiniteQuotientRing::Element>> linear_span(const FiniteQuotientRing& field,
                                                                  const std::vector<std::vector<FiniteQuotientRing::Element>>& rows,
                                                                  std::uint64_t budget) {
  if (!field.is_field()) throw NotAField("coefficient quotient with " + std::to_string(field.cardinality()) + " elements is not a field");
  const std::size_t len = rows.empty() ? 0 : rows[0].size();
  std::vector<std::vector<FiniteQuotientRing::Element>> span{std::vector<FiniteQuotientRing::Element>(len, 0)};
  for (const auto& row : rows) {
    if (row.size() != len) throw ShapeMismatch("base code rows differ in length");
    std::vector<std::vector<FiniteQuotientRing::Element>> next;
    for (const auto& v : span)
      for (std::uint64_t a = 0; a < field.cardinality(); ++a) {
        auto w = v;
        for (std::size_t l = 0; l < len; ++l)
          w[l] = field.add(w[l], field.mul(static_cast<FiniteQuotientRing::Element>(a), row[l]));
        next.push_back(std::move(w));
        if (next.size() > budget) throw BudgetExceeded("base code span exceeds the budget");
      }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    span = std::move(next);
  }
  return span;
}

OuterCode prescribed_distance_code(const QuotientAlgebra& q, const std::vector<std::vector<FiniteQuotientRing::Element>>& base,
                                   std::size_t length, std::uint64_t budget) {
  const auto& field = q.coefficients;
  auto b = linear_span(field, base, budget);
  if (!b.empty() && !b[0].empty() && b[0].size() != length) throw ShapeMismatch("base code length differs from L");
  if (base.empty()) b = {std::vector<FiniteQuotientRing::Element>(length, 0)};
  const SymbolSpace s = symbol_space(q);
  const std::size_t free_per_symbol = s.size - 1;
  const auto k = field.cardinality();
  const auto nfree = checked_count(k, length * free_per_symbol, budget, "prescribed-distance code");
  if (nfree * b.size() > budget) throw BudgetExceeded("prescribed-distance code exceeds the budget");
  OuterCode c{"prescribed", length, s, {}, true};
  for (const auto& bw : b)
    for (std::uint64_t i = 0; i < nfree; ++i) {
      Word w;
      std::uint64_t r = i;
      for (std::size_t l = 0; l < length; ++l) {
        Symbol sym(s.size);
        sym[0] = bw[l];
        for (std::size_t j = 1; j < s.size; ++j) {
          sym[j] = static_cast<FiniteQuotientRing::Element>(r % k);
          r /= k;
        }
        w.push_back(std::move(sym));
      }
      c.words.push_back(std::move(w));
    }
  return finish(std::move(c));
}

namespace {

std::size_t distance(const Word& a, const Word& b) {
  std::size_t d = 0;
  for (std::size_t l = 0; l < a.size(); ++l) d += a[l] != b[l];
  return d;
}

}  // namespace

std::size_t hamming_distance_pairwise(const OuterCode& c) {
  if (c.words.size() < 2) throw EmptyCode("distance needs at least two codewords");
  std::size_t best = c.length;
  for (std::size_t i = 0; i < c.words.size(); ++i)
    for (std::size_t j = i + 1; j < c.words.size(); ++j) best = std::min(best, distance(c.words[i], c.words[j]));
  return best;
}

std::size_t hamming_distance(const OuterCode& c) {
  if (c.words.size() < 2) throw EmptyCode("distance needs at least two codewords");
  if (!c.additive) return hamming_distance_pairwise(c);
  const Word zero(c.length, c.space.zero());
  std::size_t best = c.length;
  for (const auto& w : c.words)
    if (w != zero) best = std::min(best, distance(w, zero));
  return best;
}

// ---------------------------------------------------------------------------

Word project_codeword(const QuotientAlgebra& q, const std::vector<NaturalOrder::Element>& xs) {
  Word w;
  for (const auto& x : xs) w.push_back(q.psi(x));
  return w;
}

Word project_codeword(const IteratedQuotient& q, const std::vector<IteratedOrder::Element>& xs) {
  Word w;
  for (const auto& x : xs) w.push_back(flatten(q.target, q.psi(x)));
  return w;
}

std::vector<NaturalOrder::Element> lift_codeword(const QuotientAlgebra& q, const OuterCode& c, const Word& w) {
  if (!c.contains(w)) throw NotInOuterCode("word is not in the " + c.kind + " code");
  std::vector<NaturalOrder::Element> out;
  for (const auto& s : w) out.push_back(q.lift(s));
  return out;
}

std::vector<IteratedOrder::Element> lift_codeword(const IteratedQuotient& q, const OuterCode& c, const Word& w) {
  if (!c.contains(w)) throw NotInOuterCode("word is not in the " + c.kind + " code");
  const auto n = static_cast<std::size_t>(q.inner.degree());
  std::vector<IteratedOrder::Element> out;
  for (const auto& s : w) {
    IteratedQuotientPetit::Element y;
    for (std::size_t j = 0; j < s.size() / n; ++j) y.emplace_back(s.begin() + static_cast<long>(j * n), s.begin() + static_cast<long>((j + 1) * n));
    out.push_back(q.lift(y));
  }
  return out;
}

std::vector<json> codebook_records(const QuotientAlgebra& q, const OuterCode& c, std::size_t embedding, std::size_t limit) {
  const NaturalOrder& o = *q.source;
  const NumberField& k = o.field();
  std::vector<json> out;
  for (std::size_t i = 0; i < c.words.size() && i < limit; ++i) {
    json rec;
    rec["index"] = i;
    rec["word"] = c.words[i];
    json elems = json::array(), mats = json::array(), dets = json::array(), abs2 = json::array();
    for (const auto& x : lift_codeword(q, c, c.words[i])) {
      json coeffs = json::array();
      for (const auto& cj : x) coeffs.push_back(element_to_json(cj));
      elems.push_back(coeffs);
      const auto m = inner_matrix(o, x);
      json mj = json::array();
      for (const auto& row : m) {
        json rj = json::array();
        for (const auto& e : row) rj.push_back(element_to_json(e));
        mj.push_back(rj);
      }
      mats.push_back(mj);
      const auto d = exact_determinant(k, m, embedding);
      dets.push_back(element_to_json(d.exact));
      abs2.push_back(d.abs2);
    }
    rec["elements"] = elems;
    rec["matrices"] = mats;
    rec["det"] = dets;
    rec["abs2"] = abs2;
    out.push_back(std::move(rec));
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

struct Candidate {
  double value = std::numeric_limits<double>::infinity();
  std::vector<std::size_t> tuple;
  bool better_than(const Candidate& o) const { return value < o.value || (value == o.value && tuple < o.tuple); }
};

double hermitian_det(ComplexMatrix a) { return complex_det(std::move(a)).real(); }

}  // namespace

BoxEnumeration enumerate_coset_box(const QuotientAlgebra& q, const OuterCode& c, int box, std::vector<std::size_t> coordinates,
                                   std::size_t embedding, const FieldElement& alpha, unsigned threads, std::uint64_t budget) {
  const NaturalOrder& o = *q.source;
  const NumberField& k = o.field();
  if (!k.has_embedding()) throw EmbeddingMissing("field '" + k.name() + "' has no complex embedding");
  if (coordinates.empty())
    for (std::size_t i = 0; i < k.degree(); ++i) coordinates.push_back(i);
  const std::size_t m = static_cast<std::size_t>(o.degree());
  const std::size_t slots = m * coordinates.size();
  const std::uint64_t side = static_cast<std::uint64_t>(2 * box + 1);
  const std::uint64_t count = checked_count(side, slots, budget, "coefficient box");

  BoxEnumeration rep;
  rep.box_elements = count;
  rep.n = static_cast<int>(m);
  rep.d_h = hamming_distance(c);
  rep.alpha_abs = std::abs(k.embed(alpha, embedding));

  // Box elements, their symbols and Gram matrices X X^H.
  std::vector<ComplexMatrix> gram(count);
  std::map<Symbol, std::vector<std::size_t>> by_symbol;
  std::size_t zero_index = 0;
  rep.min_inner_det = std::numeric_limits<double>::infinity();
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    NaturalOrder::Element x(m, k.zero());
    std::uint64_t r = idx;
    bool zero = true;
    for (std::size_t j = 0; j < m; ++j)
      for (auto b : coordinates) {
        const long v = static_cast<long>(r % side) - box;
        r /= side;
        x[j].coords[b] = v;
        zero = zero && v == 0;
      }
    const auto mat = inner_matrix(o, x);
    const auto em = embed_matrix(k, mat, embedding);
    ComplexMatrix g(m, std::vector<std::complex<double>>(m));
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b)
        for (std::size_t l = 0; l < m; ++l) g[a][b] += em[a][l] * std::conj(em[b][l]);
    gram[idx] = std::move(g);
    by_symbol[q.psi(x)].push_back(idx);
    if (zero)
      zero_index = idx;
    else
      rep.min_inner_det = std::min(rep.min_inner_det, exact_determinant(k, mat, embedding).abs2);
  }
  rep.bound = key_bound(rep.min_inner_det, rep.d_h, rep.alpha_abs, rep.n);

  // Admissible outer words and their candidate lists.
  std::vector<std::vector<const std::vector<std::size_t>*>> lists;
  std::uint64_t total = 0;
  for (const auto& w : c.words) {
    std::vector<const std::vector<std::size_t>*> l;
    std::uint64_t prod = 1;
    for (const auto& s : w) {
      auto it = by_symbol.find(s);
      if (it == by_symbol.end()) {
        prod = 0;
        break;
      }
      l.push_back(&it->second);
      prod *= it->second.size();
    }
    if (prod == 0) continue;
    total += prod;
    if (total > budget) throw BudgetExceeded("coset box has more than " + std::to_string(budget) + " codewords");
    lists.push_back(std::move(l));
  }
  rep.codewords = total - 1;  // the all-zero tuple

  const unsigned nt = std::max(1u, threads);
  std::vector<Candidate> best(nt);
  const std::size_t len = c.length;
  auto work = [&](unsigned t) {
    std::vector<std::size_t> pos(len), tuple(len);
    for (std::size_t wi = t; wi < lists.size(); wi += nt) {
      const auto& l = lists[wi];
      std::fill(pos.begin(), pos.end(), 0);
      while (true) {
        bool all_zero = true;
        ComplexMatrix sum(m, std::vector<std::complex<double>>(m));
        for (std::size_t p = 0; p < len; ++p) {
          tuple[p] = (*l[p])[pos[p]];
          all_zero = all_zero && tuple[p] == zero_index;
          const auto& g = gram[tuple[p]];
          for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b) sum[a][b] += g[a][b];
        }
        if (!all_zero) {
          Candidate cand{hermitian_det(std::move(sum)), tuple};
          if (cand.better_than(best[t])) best[t] = std::move(cand);
        }
        std::size_t p = 0;
        while (p < len && ++pos[p] == l[p]->size()) pos[p++] = 0;
        if (p == len) break;
      }
    }
  };
  if (nt == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nt; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  Candidate overall;
  for (const auto& b : best)
    if (b.better_than(overall)) overall = b;
  rep.min_sigma_det = overall.value;
  rep.argmin = overall.tuple;
  return rep;
}

}  // namespace petit
