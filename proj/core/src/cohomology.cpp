#include "ulrich/cohomology.hpp"

namespace ulrich {

bool is_l_dominant(const Weight& omega, int k) {
  for (int j = 0; j < omega.rank(); ++j)
    if (j != k - 1 && omega[j] < 0) return false;
  return true;
}

std::optional<CohomologyGroup> cohomology(const RootSystem& rs, int k, const Weight& omega,
                                          std::int64_t twist) {
  const int n = rs.rank();
  if (k < 1 || k > n)
    throw std::invalid_argument("node index " + std::to_string(k) + " exceeds rank " +
                                std::to_string(n));
  if (omega.rank() != n) throw std::invalid_argument("cohomology: rank mismatch");
  if (!is_l_dominant(omega, k)) throw std::invalid_argument("weight is not L-dominant");

  Weight mu = omega;
  mu[k - 1] -= twist;
  for (int j = 0; j < n; ++j) mu[j] += 1;  // + rho

  auto red = to_dominant(rs, std::move(mu));
  if (!red.regular()) return std::nullopt;
  Weight nu = std::move(red.dominant);
  for (int j = 0; j < n; ++j) nu[j] -= 1;  // - rho
  return CohomologyGroup{red.length, std::move(nu)};
}

bool is_ulrich_by_cohomology(const RootSystem& rs, int k, const Weight& omega) {
  const std::int64_t d = rs.dim(k);
  for (std::int64_t t = 1; t <= d; ++t)
    if (cohomology(rs, k, omega, t)) return false;
  return true;
}

}  // namespace ulrich
