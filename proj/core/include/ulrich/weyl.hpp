#pragma once

#include "ulrich/root_system.hpp"

namespace ulrich {

// Simple reflection s_i in fundamental coordinates, i 1-based:
// s_i(lambda)_j = lambda_j - lambda_i * C[i][j].
Weight reflect(const RootSystem& rs, const Weight& lambda, int i);

struct DominanceResult {
  enum class Outcome { Singular, Regular };
  Outcome outcome;
  Weight dominant;  // strictly dominant representative, Regular only
  int length = 0;   // number of reflections applied, Regular only

  bool regular() const { return outcome == Outcome::Regular; }
};

// Moves mu to the dominant chamber by reflecting at the smallest strictly
// negative coordinate. Returns Singular as soon as any coordinate is zero
// (including in the input); otherwise the strictly dominant representative
// together with the Weyl length of the reducing word.
DominanceResult to_dominant(const RootSystem& rs, Weight mu);

// True iff (mu, alpha^vee) = 0 for some positive root alpha.
bool is_singular(const RootSystem& rs, const Weight& mu);

}  // namespace ulrich
