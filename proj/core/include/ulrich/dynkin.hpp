#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ulrich {

// Simple Lie series in Bourbaki numbering.
enum class Series : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

char series_letter(Series s);

// Thrown when an internal consistency check fails. CLI maps it to exit code 2.
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

// A simple type (series, rank). Rank constraints: A >= 1, B >= 2, C >= 2,
// D >= 3, E in {6,7,8}, F = 4, G = 2.
struct DynkinType {
  Series series;
  int rank;

  DynkinType(Series s, int n);

  std::string to_string() const;  // e.g. "E6"

  friend bool operator==(const DynkinType&, const DynkinType&) = default;
};

// Cartan matrix C[i][j] = (alpha_i, alpha_j^vee), 0-based storage.
// Invariants: C[i][i] = 2; off-diagonal entries <= 0; with the symmetrizer
// d_i = (alpha_i, alpha_i)/2 (short roots have squared length 2),
// d_j * C[i][j] = d_i * C[j][i].
struct CartanMatrix {
  std::vector<std::vector<int>> entries;

  int rank() const { return static_cast<int>(entries.size()); }
  int at(int i, int j) const { return entries[i][j]; }
};

CartanMatrix cartan_matrix(const DynkinType& type);

// Symmetrizer d_i, indexed 0-based. All short-root entries are 1.
std::vector<int> symmetrizer(const DynkinType& type);

}  // namespace ulrich
