#pragma once

#include <cstdint>
#include <vector>

#include "ulrich/dynkin.hpp"

namespace ulrich {

// A weight in fundamental-weight coordinates: lambda = sum_j c[j+1] * omega_{j+1}.
struct Weight {
  std::vector<std::int64_t> coeffs;

  Weight() = default;
  explicit Weight(std::vector<std::int64_t> c) : coeffs(std::move(c)) {}
  static Weight zero(int rank) { return Weight(std::vector<std::int64_t>(rank, 0)); }

  int rank() const { return static_cast<int>(coeffs.size()); }
  std::int64_t operator[](int j) const { return coeffs[j]; }  // 0-based
  std::int64_t& operator[](int j) { return coeffs[j]; }

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;
};

// A root in simple-root coordinates: alpha = sum_i n[i] * alpha_{i+1}.
struct RootVec {
  std::vector<std::int64_t> coords;

  friend bool operator==(const RootVec&, const RootVec&) = default;
  friend auto operator<=>(const RootVec&, const RootVec&) = default;
};

// A coroot in simple-coroot coordinates: alpha^vee = sum_i m[i] * alpha_{i+1}^vee.
struct CorootVec {
  std::vector<std::int64_t> coords;

  friend bool operator==(const CorootVec&, const CorootVec&) = default;
  friend auto operator<=>(const CorootVec&, const CorootVec&) = default;
};

// (lambda, alpha^vee) = sum_j m_j * lambda_j. Sizes must agree.
std::int64_t pairing(const Weight& lambda, const CorootVec& cv);

struct PositiveRoot {
  RootVec root;
  CorootVec coroot;
  std::int64_t height = 0;  // sum of root coordinates
};

// The full positive-root data of a simple type. Roots are generated by
// reflection closure from the simple roots and listed by (height, lex).
class RootSystem {
 public:
  static RootSystem build(const DynkinType& type);

  const DynkinType& type() const { return type_; }
  int rank() const { return type_.rank; }
  const CartanMatrix& cartan() const { return cartan_; }
  const std::vector<int>& symmetrizer() const { return symmetrizer_; }
  const std::vector<PositiveRoot>& positive_roots() const { return roots_; }

  // The coordinatewise-dominant coroot; its root has every coordinate
  // positive, so it lies in the radical for every node k.
  const CorootVec& highest_coroot() const { return highest_coroot_; }

  Weight rho() const { return Weight(std::vector<std::int64_t>(type_.rank, 1)); }

  // Coroots of roots with n_k > 0, in positive-root order. k is 1-based.
  std::vector<CorootVec> radical_coroots(int k) const;

  // dim G/P_k = number of radical roots.
  std::int64_t dim(int k) const;

  // Fano index of G/P_k: the k-th fundamental coordinate of the sum of the
  // radical roots. Every other coordinate of that sum must vanish.
  std::int64_t fano_index(int k) const;

 private:
  RootSystem(DynkinType type, CartanMatrix cartan, std::vector<int> symmetrizer)
      : type_(type), cartan_(std::move(cartan)), symmetrizer_(std::move(symmetrizer)) {}

  void check_node(int k) const;

  DynkinType type_;
  CartanMatrix cartan_;
  std::vector<int> symmetrizer_;
  std::vector<PositiveRoot> roots_;
  CorootVec highest_coroot_;
};

// Expected |Phi+| for the type: A n(n+1)/2, B/C n^2, D n(n-1), E6 36,
// E7 63, E8 120, F4 24, G2 6.
std::int64_t positive_root_count(const DynkinType& type);

}  // namespace ulrich
