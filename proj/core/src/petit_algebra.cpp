#include "petit/algebra/petit_algebra.hpp"

#include "petit/exact/modp_poly.hpp"

namespace petit {

DivisionStatus number_field_division_status(const NumberField& k, const FieldAutomorphism& sigma,
                                            const FieldElement& d, int m, std::string* reason) {
  auto say = [&](const std::string& s) {
    if (reason) *reason = s;
  };
  if (d.is_zero()) {
    say("d = 0 gives the zero divisor t");
    return DivisionStatus::Refuted;
  }
  if (sigma.fixed_subfield.empty()) {
    say("fixed field of " + sigma.name + " is not declared");
    return DivisionStatus::Unknown;
  }
  const Subfield& f = k.subfield(sigma.fixed_subfield);
  if (is_prime(static_cast<std::uint64_t>(m)) && !k.in_subfield(d, f)) {
    say("m = " + std::to_string(m) + " is prime and d is not in " + f.name);
    return DivisionStatus::Proved;
  }
  if (k.power_independence(d, m, f)) {
    say("1, d, ..., d^" + std::to_string(m - 1) + " are linearly independent over " + f.name);
    return DivisionStatus::Proved;
  }
  say("no sufficient criterion applies");
  return DivisionStatus::Unknown;
}

}  // namespace petit
