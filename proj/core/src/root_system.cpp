#include "ulrich/root_system.hpp"

#include <algorithm>
#include <set>

namespace ulrich {

std::int64_t pairing(const Weight& lambda, const CorootVec& cv) {
  if (lambda.coeffs.size() != cv.coords.size())
    throw std::invalid_argument("pairing: rank mismatch");
  std::int64_t s = 0;
  for (std::size_t j = 0; j < cv.coords.size(); ++j) s += cv.coords[j] * lambda.coeffs[j];
  return s;
}

std::int64_t positive_root_count(const DynkinType& type) {
  const std::int64_t n = type.rank;
  switch (type.series) {
    case Series::A: return n * (n + 1) / 2;
    case Series::B:
    case Series::C: return n * n;
    case Series::D: return n * (n - 1);
    case Series::E: return n == 6 ? 36 : (n == 7 ? 63 : 120);
    case Series::F: return 24;
    case Series::G: return 6;
  }
  throw internal_error("positive_root_count: unreachable");
}

RootSystem RootSystem::build(const DynkinType& type) {
  RootSystem rs(type, cartan_matrix(type), ulrich::symmetrizer(type));
  const int n = type.rank;
  const auto& c = rs.cartan_.entries;
  const auto& d = rs.symmetrizer_;

  // Reflection closure from the simple roots. s_i sends n-coords to
  // n'_i = n_i - sum_j n_j C[j][i]; a positive root stays positive unless
  // it is alpha_i itself, so discarding vectors with a negative entry keeps
  // exactly Phi+.
  std::set<std::vector<std::int64_t>> seen;
  std::vector<std::vector<std::int64_t>> work;
  for (int i = 0; i < n; ++i) {
    std::vector<std::int64_t> e(n, 0);
    e[i] = 1;
    seen.insert(e);
    work.push_back(std::move(e));
  }
  while (!work.empty()) {
    auto v = std::move(work.back());
    work.pop_back();
    for (int i = 0; i < n; ++i) {
      std::int64_t p = 0;
      for (int j = 0; j < n; ++j) p += v[j] * c[j][i];
      auto w = v;
      w[i] -= p;
      if (w[i] < 0) continue;
      if (seen.insert(w).second) work.push_back(std::move(w));
    }
  }
  if (static_cast<std::int64_t>(seen.size()) != positive_root_count(type))
    throw internal_error("root closure produced " + std::to_string(seen.size()) +
                         " roots for " + type.to_string());

  for (const auto& v : seen) {
    PositiveRoot r;
    r.root.coords = v;
    for (auto x : v) r.height += x;
    // (alpha, alpha) = sum_{i,j} n_i n_j C[i][j] d_j; coroot m_i = 2 d_i n_i / (alpha, alpha).
    std::int64_t len2 = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) len2 += v[i] * v[j] * c[i][j] * d[j];
    r.coroot.coords.resize(n);
    for (int i = 0; i < n; ++i) {
      const std::int64_t num = 2 * d[i] * v[i];
      if (num % len2 != 0) throw internal_error("coroot coordinate is not integral");
      r.coroot.coords[i] = num / len2;
    }
    rs.roots_.push_back(std::move(r));
  }
  std::sort(rs.roots_.begin(), rs.roots_.end(), [](const PositiveRoot& a, const PositiveRoot& b) {
    return a.height != b.height ? a.height < b.height : a.root.coords < b.root.coords;
  });

  // (2 rho, alpha_j^vee) = 2: the coordinates of the sum of all positive
  // roots are all 2.
  for (int j = 0; j < n; ++j) {
    std::int64_t s = 0;
    for (const auto& r : rs.roots_)
      for (int i = 0; i < n; ++i) s += r.root.coords[i] * c[i][j];
    if (s != 2) throw internal_error("positive-root sum has coordinate " + std::to_string(s));
  }

  // The coroot of maximal height in the dual system dominates every coroot.
  const PositiveRoot* best = nullptr;
  std::int64_t best_h = -1;
  for (const auto& r : rs.roots_) {
    std::int64_t h = 0;
    for (auto m : r.coroot.coords) h += m;
    if (h > best_h) {
      best_h = h;
      best = &r;
    }
  }
  for (const auto& r : rs.roots_)
    for (int i = 0; i < n; ++i)
      if (r.coroot.coords[i] > best->coroot.coords[i])
        throw internal_error("highest coroot is not coordinatewise dominant");
  rs.highest_coroot_ = best->coroot;

  return rs;
}

void RootSystem::check_node(int k) const {
  if (k < 1 || k > type_.rank)
    throw std::invalid_argument("node index " + std::to_string(k) + " exceeds rank " +
                                std::to_string(type_.rank));
}

std::vector<CorootVec> RootSystem::radical_coroots(int k) const {
  check_node(k);
  std::vector<CorootVec> out;
  for (const auto& r : roots_)
    if (r.root.coords[k - 1] > 0) out.push_back(r.coroot);
  return out;
}

std::int64_t RootSystem::dim(int k) const {
  check_node(k);
  std::int64_t d = 0;
  for (const auto& r : roots_)
    if (r.root.coords[k - 1] > 0) ++d;
  return d;
}

std::int64_t RootSystem::fano_index(int k) const {
  check_node(k);
  const int n = type_.rank;
  const auto& c = cartan_.entries;
  std::vector<std::int64_t> delta(n, 0);  // fundamental coords of the radical-root sum
  for (const auto& r : roots_) {
    if (r.root.coords[k - 1] <= 0) continue;
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) delta[j] += r.root.coords[i] * c[i][j];
  }
  for (int j = 0; j < n; ++j)
    if (j != k - 1 && delta[j] != 0)
      throw internal_error("radical-root sum is not a multiple of omega_k");
  return delta[k - 1];
}

}  // namespace ulrich
