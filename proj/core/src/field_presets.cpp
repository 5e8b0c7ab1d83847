#include <cmath>
#include <numbers>

#include "petit/number_field/field_io.hpp"
#include "petit/number_field/presets.hpp"
#include "petit/util/error.hpp"

namespace petit {

namespace {

// Coordinates of x^e in the power basis of Z[x]/(g), deg g = d.
std::vector<BigInt> reduce_power(const std::vector<long>& g, std::size_t e) {
  const std::size_t d = g.size() - 1;
  std::vector<BigInt> v(d, BigInt(0));
  if (e < d) {
    v[e] = 1;
    return v;
  }
  v[d - 1] = 1;  // x^(d-1)
  for (std::size_t k = d - 1; k < e; ++k) {
    // multiply by x: shift, then replace x^d by -sum g_i x^i
    BigInt top = v[d - 1];
    for (std::size_t i = d - 1; i > 0; --i) v[i] = v[i - 1];
    v[0] = 0;
    for (std::size_t i = 0; i < d; ++i) v[i] -= top * g[i];
  }
  return v;
}

std::vector<std::size_t> digits(std::size_t index, const std::vector<std::size_t>& dims) {
  std::vector<std::size_t> out;
  for (auto d : dims) {
    out.push_back(index % d);
    index /= d;
  }
  return out;
}

}  // namespace

NumberField TensorFieldBuilder::build() const {
  std::vector<std::size_t> dims;
  std::size_t n = 1;
  for (const auto& g : generators) {
    if (g.min_poly.size() < 2 || g.min_poly.back() != 1) throw ConfigError("generator '" + g.label + "' needs a monic polynomial");
    dims.push_back(g.min_poly.size() - 1);
    n *= dims.back();
  }
  std::vector<std::string> labels;
  std::vector<std::complex<double>> emb;
  for (std::size_t b = 0; b < n; ++b) {
    auto e = digits(b, dims);
    std::string label;
    std::complex<double> z = 1;
    for (std::size_t r = 0; r < generators.size(); ++r) {
      if (e[r] == 0) continue;
      if (!label.empty()) label += "*";
      label += generators[r].label;
      if (e[r] > 1) label += "^" + std::to_string(e[r]);
      z *= std::pow(generators[r].value, static_cast<double>(e[r]));
    }
    labels.push_back(label.empty() ? "1" : label);
    emb.push_back(z);
  }
  // Structure constants: the product of two monomials is the tensor product
  // of the per-generator reductions.
  std::vector<std::vector<std::vector<BigInt>>> table(n, std::vector<std::vector<BigInt>>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      auto ea = digits(a, dims), eb = digits(b, dims);
      std::vector<BigInt> acc{BigInt(1)};
      std::size_t stride = 1;
      for (std::size_t r = 0; r < generators.size(); ++r) {
        auto red = reduce_power(generators[r].min_poly, ea[r] + eb[r]);
        std::vector<BigInt> next(stride * dims[r], BigInt(0));
        for (std::size_t i = 0; i < acc.size(); ++i)
          for (std::size_t j = 0; j < dims[r]; ++j) next[i + stride * j] = acc[i] * red[j];
        acc = std::move(next);
        stride *= dims[r];
      }
      table[a][b] = acc;
    }
  NumberField bare(name, labels, table, {}, {}, subfields, {Embedding{"default", emb}});
  std::vector<FieldElement> gens;
  std::size_t stride = 1;
  for (std::size_t r = 0; r < generators.size(); ++r) {
    gens.push_back(bare.basis(stride));
    stride *= dims[r];
  }
  std::vector<FieldAutomorphism> autos;
  for (const auto& spec : automorphisms) {
    auto imgs = spec.images(bare, gens);
    FieldAutomorphism fa{spec.name, {}, spec.order, spec.fixed};
    for (std::size_t b = 0; b < n; ++b) {
      auto e = digits(b, dims);
      FieldElement img = bare.one();
      for (std::size_t r = 0; r < generators.size(); ++r) img = bare.mul(img, bare.pow(imgs[r], static_cast<unsigned>(e[r])));
      fa.images.push_back(img);
    }
    autos.push_back(std::move(fa));
  }
  return NumberField(name, labels, table, autos, {}, subfields, {Embedding{"default", emb}}, conjugation);
}

NumberField monogenic_order(const std::string& name, const std::vector<long>& min_poly) {
  if (min_poly.size() < 2 || min_poly.back() != 1) throw ConfigError("'" + name + "' needs a monic polynomial");
  const std::size_t d = min_poly.size() - 1;
  std::vector<std::vector<std::vector<BigInt>>> table(d, std::vector<std::vector<BigInt>>(d));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < d; ++i) labels.push_back(i == 0 ? "1" : (i == 1 ? "x" : "x^" + std::to_string(i)));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) table[i][j] = reduce_power(min_poly, i + j);
  return NumberField(name, labels, table, {}, {}, {Subfield{"Q", {0}}}, {});
}

namespace {

using Images = std::vector<FieldElement>;
constexpr double kPi = std::numbers::pi;

NumberField build_preset(const std::string& name) {
  const std::complex<double> i_val(0, 1);
  const std::complex<double> w_val = std::polar(1.0, 2 * kPi / 3);
  const double phi_val = (1 + std::sqrt(5.0)) / 2;
  const double th7_val = 2 * std::cos(2 * kPi / 7);
  const double th15_val = 2 * std::cos(2 * kPi / 15);
  const GeneratorSpec gi{"i", {1, 0, 1}, i_val};
  const GeneratorSpec gw{"w", {1, 1, 1}, w_val};
  const GeneratorSpec gphi{"phi", {-1, -1, 1}, phi_val};
  const GeneratorSpec gth7{"th", {-1, -2, 1, 1}, th7_val};
  const GeneratorSpec gth15{"th", {1, 4, -4, -1, 1}, th15_val};

  // theta -> theta^2 - 2 on the generator at position pos.
  auto theta_square = [](std::size_t pos) {
    return [pos](const NumberField& k, const Images& g) {
      Images out = g;
      out[pos] = k.sub(k.mul(g[pos], g[pos]), k.from_integer(2));
      return out;
    };
  };
  auto negate_at = [](std::size_t pos) {
    return [pos](const NumberField& k, const Images& g) {
      Images out = g;
      out[pos] = k.neg(g[pos]);
      return out;
    };
  };
  // w -> w^2 = -1 - w
  auto eisenstein_conj = [](const NumberField& k, const Images& g) {
    Images out = g;
    out[0] = k.sub(k.neg(k.one()), g[0]);
    return out;
  };

  TensorFieldBuilder b;
  b.name = name;
  if (name == "rationals") {
    return NumberField(name, {"1"}, {{{BigInt(1)}}}, {}, {}, {Subfield{"Q", {0}}}, {Embedding{"default", {1.0}}});
  } else if (name == "gaussian") {
    b.generators = {gi};
    b.subfields = {Subfield{"Q", {0}}};
    b.automorphisms = {{"conj", 2, "Q", negate_at(0)}};
    b.conjugation = "conj";
  } else if (name == "eisenstein") {
    b.generators = {gw};
    b.subfields = {Subfield{"Q", {0}}};
    b.automorphisms = {{"conj", 2, "Q", eisenstein_conj}};
    b.conjugation = "conj";
  } else if (name == "gaussian_sqrt5") {
    b.generators = {gi, gphi};
    b.subfields = {Subfield{"Q", {0}}, Subfield{"F", {0, 1}}, Subfield{"Qphi", {0, 2}}};
    b.automorphisms = {
        {"sigma", 2, "F",
         [](const NumberField& k, const Images& g) {
           Images out = g;
           out[1] = k.sub(k.one(), g[1]);
           return out;
         }},
        {"conj", 2, "Qphi", negate_at(0)}};
    b.conjugation = "conj";
  } else if (name == "eisenstein_omega7") {
    b.generators = {gw, gth7};
    b.subfields = {Subfield{"Q", {0}}, Subfield{"F", {0, 1}}, Subfield{"Qtheta", {0, 2, 4}}};
    b.automorphisms = {{"sigma", 3, "F", theta_square(1)}, {"rho", 2, "Qtheta", eisenstein_conj}};
    b.conjugation = "rho";
  } else if (name == "gaussian_theta15") {
    b.generators = {gi, gth15};
    b.subfields = {Subfield{"Q", {0}}, Subfield{"F", {0, 1}}, Subfield{"Qtheta", {0, 2, 4, 6}}};
    b.automorphisms = {{"sigma", 4, "F", theta_square(1)}, {"conj", 2, "Qtheta", negate_at(0)}};
    b.conjugation = "conj";
  } else {
    throw ConfigError("unknown field preset '" + name + "'");
  }
  return b.build();
}

}  // namespace

NumberField field_preset(const std::string& name) { return load_field(field_to_json(build_preset(name))); }

std::vector<std::string> field_preset_names() {
  return {"rationals", "gaussian", "eisenstein", "gaussian_sqrt5", "eisenstein_omega7", "gaussian_theta15"};
}

}  // namespace petit
