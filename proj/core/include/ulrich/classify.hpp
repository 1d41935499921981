#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "ulrich/sing.hpp"

namespace ulrich {

using BigInt = boost::multiprecision::cpp_int;

// Inclusive coordinate bounds containing every Ulrich weight on G/P_k.
// Lower bounds are 0; upper[k-1] = d - 1 comes from the form of alpha_k
// itself, and upper[j] for j != k from the highest-coroot form, whose
// multipliers are all positive.
struct SearchBox {
  std::vector<std::int64_t> upper;

  BigInt volume() const;  // number of lattice points
};

SearchBox search_box(const RootSystem& rs, int k);

// rank E_omega = dim of the irreducible Levi module with highest weight
// omega: the Weyl dimension formula over the coroots with vanishing
// k-coordinate. Exact big-integer arithmetic; the division is exact.
BigInt bundle_rank(const RootSystem& rs, int k, const Weight& omega);

// E_omega is Ulrich on G/P_k iff Sing(omega) = {1, ..., d}, d = dim G/P_k.
bool is_ulrich(const RootSystem& rs, int k, const Weight& omega);

struct UlrichCertificate {
  Weight weight;
  std::vector<std::int64_t> sing;  // always {1, ..., dim}
  BigInt rank;
  std::int64_t dim = 0;
  std::int64_t index = 0;

  friend bool operator==(const UlrichCertificate&, const UlrichCertificate&) = default;
};

// All Ulrich weights on G/P_k, sorted lexicographically by coefficient
// vector. The search is a depth-first scan of the box with sound pruning
// only, so the result is exhaustive. jobs > 1 splits the top-level branches
// across threads; jobs <= 0 uses the hardware thread count. The result does
// not depend on jobs.
std::vector<UlrichCertificate> classify(const RootSystem& rs, int k, int jobs = 1);

}  // namespace ulrich
