#pragma once

#include <optional>

#include "ulrich/weyl.hpp"

namespace ulrich {

// omega_j >= 0 for every j != k (k 1-based). The coordinate at k may be any
// integer; twists absorb it.
bool is_l_dominant(const Weight& omega, int k);

// The unique non-vanishing cohomology group of a twisted equivariant bundle,
// when there is one.
struct CohomologyGroup {
  int degree;                 // Weyl length of the reducing word
  Weight dual_highest_weight; // dominant representative minus rho
};

// Cohomology of E_omega(-t) on G/P_k: reduce omega - t*omega_k + rho. A
// singular weight means every group vanishes; a regular one concentrates
// all cohomology in a single degree.
std::optional<CohomologyGroup> cohomology(const RootSystem& rs, int k, const Weight& omega,
                                          std::int64_t twist);

// E_omega is Ulrich iff cohomology of E_omega(-t) vanishes for every
// t in [1, dim G/P_k].
bool is_ulrich_by_cohomology(const RootSystem& rs, int k, const Weight& omega);

}  // namespace ulrich
