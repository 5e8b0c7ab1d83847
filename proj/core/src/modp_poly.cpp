#include "petit/exact/modp_poly.hpp"

#include <sstream>
#include <tuple>

#include "petit/util/error.hpp"

namespace petit {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

}  // namespace

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a % p);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
    std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
  }
  if (r != 1) throw ZeroInverse("no inverse of " + std::to_string(a) + " mod " + std::to_string(p));
  return static_cast<std::uint64_t>(t < 0 ? t + static_cast<std::int64_t>(p) : t);
}

ModPPoly::ModPPoly(std::uint64_t p, std::vector<std::int64_t> coefficients) : p_(p) {
  if (!is_prime(p)) throw InvalidArgument("ModPPoly modulus " + std::to_string(p) + " is not prime");
  const auto sp = static_cast<std::int64_t>(p);
  coeffs_.reserve(coefficients.size());
  for (std::int64_t c : coefficients) coeffs_.push_back(static_cast<std::uint64_t>(((c % sp) + sp) % sp));
  trim();
}

ModPPoly::ModPPoly(std::uint64_t p, std::vector<std::uint64_t> reduced, int) : p_(p), coeffs_(std::move(reduced)) {
  trim();
}

ModPPoly ModPPoly::monomial(std::uint64_t p, std::size_t degree, std::uint64_t coefficient) {
  std::vector<std::int64_t> c(degree + 1, 0);
  c[degree] = static_cast<std::int64_t>(coefficient);
  return ModPPoly(p, std::move(c));
}

void ModPPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

ModPPoly ModPPoly::monic() const {
  if (is_zero()) return *this;
  const std::uint64_t inv = mod_inverse(leading(), p_);
  std::vector<std::uint64_t> c(coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = mulmod(coeffs_[i], inv, p_);
  return ModPPoly(p_, std::move(c), 0);
}

ModPPoly operator+(const ModPPoly& a, const ModPPoly& b) {
  if (a.p_ != b.p_) throw InvalidArgument("ModPPoly moduli differ");
  std::vector<std::uint64_t> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    std::uint64_t x = i < a.coeffs_.size() ? a.coeffs_[i] : 0;
    std::uint64_t y = i < b.coeffs_.size() ? b.coeffs_[i] : 0;
    c[i] = (x + y) % a.p_;
  }
  return ModPPoly(a.p_, std::move(c), 0);
}

ModPPoly operator-(const ModPPoly& a, const ModPPoly& b) {
  if (a.p_ != b.p_) throw InvalidArgument("ModPPoly moduli differ");
  std::vector<std::uint64_t> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    std::uint64_t x = i < a.coeffs_.size() ? a.coeffs_[i] : 0;
    std::uint64_t y = i < b.coeffs_.size() ? b.coeffs_[i] : 0;
    c[i] = (x + a.p_ - y) % a.p_;
  }
  return ModPPoly(a.p_, std::move(c), 0);
}

ModPPoly operator*(const ModPPoly& a, const ModPPoly& b) {
  if (a.p_ != b.p_) throw InvalidArgument("ModPPoly moduli differ");
  if (a.is_zero() || b.is_zero()) return ModPPoly(a.p_, std::vector<std::uint64_t>{}, 0);
  std::vector<std::uint64_t> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      c[i + j] = (c[i + j] + mulmod(a.coeffs_[i], b.coeffs_[j], a.p_)) % a.p_;
  return ModPPoly(a.p_, std::move(c), 0);
}

std::pair<ModPPoly, ModPPoly> ModPPoly::divmod(const ModPPoly& b) const {
  if (b.is_zero()) throw ZeroInverse("polynomial division by zero");
  if (b.p_ != p_) throw InvalidArgument("ModPPoly moduli differ");
  std::vector<std::uint64_t> r = coeffs_;
  const int db = b.degree();
  std::vector<std::uint64_t> q(r.size() >= b.coeffs_.size() ? r.size() - b.coeffs_.size() + 1 : 0, 0);
  const std::uint64_t inv = mod_inverse(b.leading(), p_);
  for (int k = static_cast<int>(r.size()) - 1; k >= db; --k) {
    const std::uint64_t c = mulmod(r[k], inv, p_);
    if (c == 0) continue;
    q[k - db] = c;
    for (int j = 0; j <= db; ++j) {
      const std::uint64_t s = mulmod(c, b.coeffs_[j], p_);
      r[k - db + j] = (r[k - db + j] + p_ - s) % p_;
    }
  }
  return {ModPPoly(p_, std::move(q), 0), ModPPoly(p_, std::move(r), 0)};
}

std::uint64_t ModPPoly::evaluate(std::uint64_t x) const {
  std::uint64_t acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = (mulmod(acc, x % p_, p_) + *it) % p_;
  return acc;
}

std::string ModPPoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const std::uint64_t c = coeffs_[i];
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << c;
    } else {
      if (c != 1) os << c << '*';
      os << var;
      if (i > 1) os << '^' << i;
    }
  }
  return os.str();
}

namespace {

// Monic polynomial of the given degree whose lower coefficients are the
// base-p digits of index.
ModPPoly monic_from_index(std::uint64_t p, int degree, std::uint64_t index) {
  std::vector<std::int64_t> c(degree + 1, 0);
  for (int i = 0; i < degree; ++i) {
    c[i] = static_cast<std::int64_t>(index % p);
    index /= p;
  }
  c[degree] = 1;
  return ModPPoly(p, std::move(c));
}

std::uint64_t checked_power(std::uint64_t p, int e, std::uint64_t limit) {
  std::uint64_t v = 1;
  for (int i = 0; i < e; ++i) {
    if (v > limit / p) throw BudgetExceeded("p^" + std::to_string(e) + " exceeds search limit");
    v *= p;
  }
  return v;
}

}  // namespace

std::vector<ModPFactor> factor_mod_p(const ModPPoly& f, std::uint64_t search_limit) {
  if (f.is_zero()) throw InvalidArgument("factor_mod_p of the zero polynomial");
  const std::uint64_t p = f.modulus();
  ModPPoly rest = f.monic();
  std::vector<ModPFactor> out;
  // Every divisor found at degree d is irreducible: all factors of smaller
  // degree were divided out before.
  for (int d = 1; 2 * d <= rest.degree(); ++d) {
    const std::uint64_t count = checked_power(p, d, search_limit);
    for (std::uint64_t idx = 0; idx < count && 2 * d <= rest.degree(); ++idx) {
      ModPPoly g = monic_from_index(p, d, idx);
      int mult = 0;
      for (;;) {
        auto [q, r] = rest.divmod(g);
        if (!r.is_zero()) break;
        rest = q;
        ++mult;
      }
      if (mult > 0) out.push_back({g, mult});
    }
  }
  if (rest.degree() >= 1) {
    bool merged = false;
    for (auto& fac : out)
      if (fac.factor == rest) {
        ++fac.multiplicity;
        merged = true;
      }
    if (!merged) out.push_back({rest, 1});
  }
  return out;
}

bool is_irreducible_mod_p(const ModPPoly& f, std::uint64_t search_limit) {
  if (f.degree() < 1) return false;
  auto fac = factor_mod_p(f, search_limit);
  return fac.size() == 1 && fac[0].multiplicity == 1;
}

ModPPoly first_irreducible(std::uint64_t p, int degree) {
  if (degree < 1) throw InvalidArgument("irreducible polynomial degree must be positive");
  const std::uint64_t count = checked_power(p, degree, 1'000'000'000ULL);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    ModPPoly g = monic_from_index(p, degree, idx);
    if (is_irreducible_mod_p(g)) return g;
  }
  throw InvalidArgument("no irreducible polynomial found");
}

}  // namespace petit
