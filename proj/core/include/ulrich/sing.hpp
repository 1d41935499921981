#pragma once

#include <optional>
#include <string>

#include <boost/rational.hpp>

#include "ulrich/root_system.hpp"

namespace ulrich {

using Rational = boost::rational<long long>;

// One twist constraint per radical coroot alpha^vee of G/P_k: the twists t
// for which (omega + rho - t*omega_k, alpha^vee) = 0 are exactly
//   t = sum_j multipliers[j] * (omega_j + 1).
// Normalized so the multiplier at node k is 1; constant = value at omega = 0.
// Scaled integers: N(omega) = sum_j scaled[j] * (omega_j + 1) and
// denom = scaled[k-1], so the form value is N/denom.
struct AffineForm {
  std::vector<Rational> multipliers;
  Rational constant;
  CorootVec coroot;
  std::vector<std::int64_t> scaled;  // = coroot coordinates
  std::int64_t denom = 1;

  // Integer value at omega, if the form evaluates to an integer there.
  std::optional<std::int64_t> evaluate(const Weight& omega) const;
};

// Forms of all radical coroots at node k, ordered by (constant, multipliers)
// lexicographically. Stable across runs; suitable for snapshots.
std::vector<AffineForm> sing_forms(const RootSystem& rs, int k);

// Sing(omega): the integer twists t with omega + rho - t*omega_k singular.
// Sorted ascending, deduplicated. omega must be L-dominant away from k.
struct SingSet {
  std::vector<std::int64_t> values;

  friend bool operator==(const SingSet&, const SingSet&) = default;
};

SingSet sing_set(const RootSystem& rs, int k, const Weight& omega);

// Coefficient names are a, b, c, ... in node order (x1, x2, ... past 'z').
std::string form_to_text(const AffineForm& form);   // e.g. "a + (3/2)b + 5/2"
std::string form_to_latex(const AffineForm& form);  // e.g. "a + \frac{3}{2}b + \frac{5}{2}"

std::string coefficient_name(int j, int rank);  // j 0-based

}  // namespace ulrich
