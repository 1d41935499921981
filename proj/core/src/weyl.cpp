#include "ulrich/weyl.hpp"

namespace ulrich {

Weight reflect(const RootSystem& rs, const Weight& lambda, int i) {
  const int n = rs.rank();
  if (i < 1 || i > n)
    throw std::invalid_argument("node index " + std::to_string(i) + " exceeds rank " +
                                std::to_string(n));
  if (lambda.rank() != n) throw std::invalid_argument("reflect: rank mismatch");
  const auto& row = rs.cartan().entries[i - 1];
  Weight out = lambda;
  const std::int64_t li = lambda[i - 1];
  for (int j = 0; j < n; ++j) out[j] -= li * row[j];
  return out;
}

DominanceResult to_dominant(const RootSystem& rs, Weight mu) {
  const int n = rs.rank();
  if (mu.rank() != n) throw std::invalid_argument("to_dominant: rank mismatch");
  const auto& c = rs.cartan().entries;
  int length = 0;
  for (;;) {
    int neg = -1;
    for (int j = 0; j < n; ++j) {
      if (mu[j] == 0) return {DominanceResult::Outcome::Singular, {}, 0};
      if (neg < 0 && mu[j] < 0) neg = j;
    }
    if (neg < 0) return {DominanceResult::Outcome::Regular, std::move(mu), length};
    const std::int64_t li = mu[neg];
    for (int j = 0; j < n; ++j) mu[j] -= li * c[neg][j];
    ++length;
  }
}

bool is_singular(const RootSystem& rs, const Weight& mu) {
  if (mu.rank() != rs.rank()) throw std::invalid_argument("is_singular: rank mismatch");
  for (const auto& r : rs.positive_roots())
    if (pairing(mu, r.coroot) == 0) return true;
  return false;
}

}  // namespace ulrich
