#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ulrich/root_system.hpp"

namespace ulrich::testutil {

// Every constructible simple type with rank <= max_rank.
inline std::vector<DynkinType> all_types(int max_rank) {
  std::vector<DynkinType> out;
  for (int n = 1; n <= max_rank; ++n) out.emplace_back(Series::A, n);
  for (int n = 2; n <= max_rank; ++n) out.emplace_back(Series::B, n);
  for (int n = 2; n <= max_rank; ++n) out.emplace_back(Series::C, n);
  for (int n = 3; n <= max_rank; ++n) out.emplace_back(Series::D, n);
  for (int n = 6; n <= max_rank && n <= 8; ++n) out.emplace_back(Series::E, n);
  if (max_rank >= 4) out.emplace_back(Series::F, 4);
  if (max_rank >= 2) out.emplace_back(Series::G, 2);
  return out;
}

// The 27 marked exceptional diagrams in sweep order.
inline std::vector<std::pair<DynkinType, int>> exceptional_cases() {
  std::vector<std::pair<DynkinType, int>> out;
  auto add = [&out](Series s, int n) {
    for (int k = 1; k <= n; ++k) out.emplace_back(DynkinType(s, n), k);
  };
  add(Series::G, 2);
  add(Series::F, 4);
  add(Series::E, 6);
  add(Series::E, 7);
  add(Series::E, 8);
  return out;
}

inline Weight random_weight(std::mt19937& gen, int rank, std::int64_t lo, std::int64_t hi) {
  std::uniform_int_distribution<std::int64_t> dist(lo, hi);
  Weight w = Weight::zero(rank);
  for (int j = 0; j < rank; ++j) w[j] = dist(gen);
  return w;
}

}  // namespace ulrich::testutil
