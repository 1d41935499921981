#include "ulrich/dynkin.hpp"

#include <array>

namespace ulrich {

char series_letter(Series s) { return static_cast<char>(s); }

DynkinType::DynkinType(Series s, int n) : series(s), rank(n) {
  bool ok = false;
  switch (s) {
    case Series::A: ok = n >= 1; break;
    case Series::B: ok = n >= 2; break;
    case Series::C: ok = n >= 2; break;
    case Series::D: ok = n >= 3; break;
    case Series::E: ok = n >= 6 && n <= 8; break;
    case Series::F: ok = n == 4; break;
    case Series::G: ok = n == 2; break;
  }
  if (!ok)
    throw std::invalid_argument("rank " + std::to_string(n) + " is not valid for series " +
                                std::string(1, series_letter(s)));
}

std::string DynkinType::to_string() const {
  return std::string(1, series_letter(series)) + std::to_string(rank);
}

namespace {

// Edges of the Dynkin diagram as (i, j, cij, cji) with C[i][j] = cij,
// C[j][i] = cji, 0-based nodes. Non-simple edges carry the -2 or -3 entry
// on the (long, short^vee) side.
std::vector<std::array<int, 4>> diagram_edges(const DynkinType& t) {
  const int n = t.rank;
  std::vector<std::array<int, 4>> edges;
  auto simple = [&](int i, int j) { edges.push_back({i, j, -1, -1}); };
  switch (t.series) {
    case Series::A:
      for (int i = 0; i + 1 < n; ++i) simple(i, i + 1);
      break;
    case Series::B:
      // alpha_n short: (alpha_{n-1}, alpha_n^vee) = -2.
      for (int i = 0; i + 2 < n; ++i) simple(i, i + 1);
      edges.push_back({n - 2, n - 1, -2, -1});
      break;
    case Series::C:
      // alpha_n long: (alpha_n, alpha_{n-1}^vee) = -2.
      for (int i = 0; i + 2 < n; ++i) simple(i, i + 1);
      edges.push_back({n - 2, n - 1, -1, -2});
      break;
    case Series::D:
      for (int i = 0; i + 3 < n; ++i) simple(i, i + 1);
      simple(n - 3, n - 2);
      simple(n - 3, n - 1);
      break;
    case Series::E:
      // Chain 1-3-4-5-...-n with node 2 attached to node 4.
      simple(0, 2);
      simple(1, 3);
      for (int i = 2; i + 1 < n; ++i) simple(i, i + 1);
      break;
    case Series::F:
      // alpha_1, alpha_2 long; alpha_3, alpha_4 short.
      simple(0, 1);
      edges.push_back({1, 2, -2, -1});
      simple(2, 3);
      break;
    case Series::G:
      // alpha_1 short, alpha_2 long.
      edges.push_back({0, 1, -1, -3});
      break;
  }
  return edges;
}

}  // namespace

CartanMatrix cartan_matrix(const DynkinType& type) {
  const int n = type.rank;
  CartanMatrix c;
  c.entries.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) c.entries[i][i] = 2;
  for (const auto& [i, j, cij, cji] : diagram_edges(type)) {
    c.entries[i][j] = cij;
    c.entries[j][i] = cji;
  }
  return c;
}

std::vector<int> symmetrizer(const DynkinType& type) {
  const int n = type.rank;
  std::vector<int> d(n, 1);
  switch (type.series) {
    case Series::B:
      for (int i = 0; i + 1 < n; ++i) d[i] = 2;
      break;
    case Series::C:
      d[n - 1] = 2;
      break;
    case Series::F:
      d[0] = d[1] = 2;
      break;
    case Series::G:
      d[1] = 3;
      break;
    default:
      break;
  }
  return d;
}

}  // namespace ulrich
