#include "ulrich/classify.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>

#include "ulrich/cohomology.hpp"

namespace ulrich {

BigInt SearchBox::volume() const {
  BigInt v = 1;
  for (auto u : upper) {
    if (u < 0) return 0;
    v *= u + 1;
  }
  return v;
}

SearchBox search_box(const RootSystem& rs, int k) {
  const int n = rs.rank();
  const std::int64_t d = rs.dim(k);
  const auto& theta = rs.highest_coroot().coords;
  const std::int64_t tsum = std::accumulate(theta.begin(), theta.end(), std::int64_t{0});
  SearchBox box;
  box.upper.resize(n);
  for (int j = 0; j < n; ++j) {
    // The k-form pins omega_k + 1 in [1, d]; the highest-coroot form, all of
    // whose multipliers are positive, bounds every other coordinate.
    if (j == k - 1)
      box.upper[j] = d - 1;
    else
      box.upper[j] = (d * theta[k - 1] - tsum) / theta[j];
  }
  return box;
}

BigInt bundle_rank(const RootSystem& rs, int k, const Weight& omega) {
  const int n = rs.rank();
  if (k < 1 || k > n)
    throw std::invalid_argument("node index " + std::to_string(k) + " exceeds rank " +
                                std::to_string(n));
  if (omega.rank() != n) throw std::invalid_argument("bundle_rank: rank mismatch");
  if (!is_l_dominant(omega, k)) throw std::invalid_argument("weight is not L-dominant");
  BigInt num = 1, den = 1;
  for (const auto& r : rs.positive_roots()) {
    const auto& m = r.coroot.coords;
    if (m[k - 1] != 0) continue;
    std::int64_t a = 0, b = 0;
    for (int j = 0; j < n; ++j) {
      a += m[j] * (omega[j] + 1);
      b += m[j];
    }
    num *= a;
    den *= b;
  }
  if (num % den != 0) throw internal_error("Levi dimension is not integral");
  return num / den;
}

bool is_ulrich(const RootSystem& rs, int k, const Weight& omega) {
  const int n = rs.rank();
  if (omega.rank() != n) throw std::invalid_argument("is_ulrich: rank mismatch");
  if (!is_l_dominant(omega, k)) throw std::invalid_argument("weight is not L-dominant");
  const std::int64_t d = rs.dim(k);
  // Sing(omega) = {1..d} iff the d radical forms take pairwise distinct
  // integer values in [1, d]: there are exactly d of them and each
  // contributes at most one element.
  std::vector<char> covered(static_cast<std::size_t>(d) + 1, 0);
  for (const auto& r : rs.positive_roots()) {
    if (r.root.coords[k - 1] <= 0) continue;
    const auto& m = r.coroot.coords;
    const std::int64_t den = m[k - 1];
    std::int64_t num = 0;
    for (int j = 0; j < n; ++j) num += m[j] * (omega[j] + 1);
    if (num % den != 0) return false;
    const std::int64_t val = num / den;
    if (val < 1 || val > d || covered[val]) return false;
    covered[val] = 1;
  }
  return true;
}

namespace {

// Depth-first scan of the search box. A weight is a hit iff the d radical
// forms take pairwise distinct integer values in [1, d]; every prune below
// is sound for that predicate:
//   (i)   form numerators only grow along a branch, so lbN > D*d is final;
//   (ii)  a determined form must give an uncovered integer in [1, d];
//   (iii) a form with one unassigned variable filters candidates by
//         congruence mod its denominator;
//   (iv)  the smallest uncovered value must satisfy lbN <= D*u for some
//         undetermined form, else it can never be covered.
struct Engine {
  int n = 0;
  std::int64_t d = 0;
  int forms = 0;
  std::vector<std::vector<std::int64_t>> mult;  // forms x n
  std::vector<std::int64_t> den;
  std::vector<std::vector<int>> touching;  // per node: forms with mult > 0
  std::vector<int> order;                  // assignment order, 0-based nodes
  std::vector<std::int64_t> box;

  std::vector<std::int64_t> lbN;  // constant term plus assigned contributions
  std::vector<int> cnt;           // unassigned variables per form
  std::vector<char> covered;      // index 1..d
  std::vector<std::int64_t> assign;
  std::vector<Weight> hits;

  Engine(const RootSystem& rs, int k) {
    n = rs.rank();
    d = rs.dim(k);
    const auto fs = sing_forms(rs, k);
    forms = static_cast<int>(fs.size());
    if (forms != d) throw internal_error("form count differs from dimension");
    mult.resize(forms);
    den.resize(forms);
    lbN.assign(forms, 0);
    cnt.assign(forms, 0);
    for (int f = 0; f < forms; ++f) {
      mult[f] = fs[f].scaled;
      den[f] = fs[f].denom;
      lbN[f] = std::accumulate(mult[f].begin(), mult[f].end(), std::int64_t{0});
      for (int j = 0; j < n; ++j)
        if (mult[f][j] > 0) ++cnt[f];
    }
    touching.resize(n);
    for (int j = 0; j < n; ++j)
      for (int f = 0; f < forms; ++f)
        if (mult[f][j] > 0) touching[j].push_back(f);

    const auto& theta = rs.highest_coroot().coords;
    order.resize(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return theta[a] != theta[b] ? theta[a] > theta[b] : a < b;
    });
    box = search_box(rs, k).upper;
    covered.assign(d + 1, 0);
    assign.assign(n, 0);
  }

  std::int64_t value_cap(int j) const {
    std::int64_t vmax = box[j];
    for (int f : touching[j]) {
      const std::int64_t room = den[f] * d - lbN[f];
      if (room < 0) return -1;
      vmax = std::min(vmax, room / mult[f][j]);
    }
    return vmax;
  }

  bool congruence_ok(int j, std::int64_t v) const {
    for (int f : touching[j])
      if (cnt[f] == 1 && (lbN[f] + mult[f][j] * v) % den[f] != 0) return false;
    return true;
  }

  // Applies j := v. On success the newly determined forms are validated and
  // their values covered; vals records them for the undo. Returns false and
  // restores the previous state if any determined form is rejected.
  bool try_assign(int j, std::int64_t v, std::vector<std::int64_t>& vals) {
    vals.clear();
    const auto& tj = touching[j];
    for (std::size_t t = 0; t < tj.size(); ++t) {
      const int f = tj[t];
      lbN[f] += mult[f][j] * v;
      --cnt[f];
      bool ok = lbN[f] <= den[f] * d;
      if (ok && cnt[f] == 0) {
        if (lbN[f] % den[f] != 0) {
          ok = false;
        } else {
          const std::int64_t val = lbN[f] / den[f];
          if (val < 1 || covered[val]) {
            ok = false;
          } else {
            covered[val] = 1;
            vals.push_back(val);
          }
        }
      }
      if (!ok) {
        for (auto val : vals) covered[val] = 0;
        for (std::size_t u = 0; u <= t; ++u) {
          const int g = tj[u];
          lbN[g] -= mult[g][j] * v;
          ++cnt[g];
        }
        return false;
      }
    }
    assign[j] = v;
    return true;
  }

  void undo_assign(int j, std::int64_t v, const std::vector<std::int64_t>& vals) {
    for (auto val : vals) covered[val] = 0;
    for (int f : touching[j]) {
      lbN[f] -= mult[f][j] * v;
      ++cnt[f];
    }
    assign[j] = 0;
  }

  bool dead_uncovered() const {
    std::int64_t u = 0;
    for (std::int64_t t = 1; t <= d; ++t)
      if (!covered[t]) {
        u = t;
        break;
      }
    if (u == 0) return false;
    for (int f = 0; f < forms; ++f)
      if (cnt[f] > 0 && lbN[f] <= den[f] * u) return false;
    return true;
  }

  void dfs(int depth) {
    if (depth == n) {
      hits.emplace_back(assign);
      return;
    }
    const int j = order[depth];
    const std::int64_t vmax = value_cap(j);
    std::vector<std::int64_t> vals;
    for (std::int64_t v = 0; v <= vmax; ++v) {
      if (!congruence_ok(j, v)) continue;
      if (!try_assign(j, v, vals)) continue;
      if (!dead_uncovered()) dfs(depth + 1);
      undo_assign(j, v, vals);
    }
  }
};

}  // namespace

std::vector<UlrichCertificate> classify(const RootSystem& rs, int k, int jobs) {
  Engine base(rs, k);
  std::vector<Weight> hits;

  if (jobs <= 0) {
    const unsigned hc = std::thread::hardware_concurrency();
    jobs = hc > 0 ? static_cast<int>(hc) : 1;
  }

  if (jobs == 1) {
    base.dfs(0);
    hits = std::move(base.hits);
  } else {
    // Split the top-level branches across workers; each worker replays the
    // engine from the root, so results are independent of the split.
    const int j0 = base.order[0];
    std::vector<std::int64_t> tops;
    for (std::int64_t v = 0; v <= base.value_cap(j0); ++v)
      if (base.congruence_ok(j0, v)) tops.push_back(v);

    std::atomic<std::size_t> next{0};
    std::vector<std::vector<Weight>> found(static_cast<std::size_t>(jobs));
    std::vector<std::thread> pool;
    for (int w = 0; w < jobs; ++w) {
      pool.emplace_back([&, w] {
        Engine eng = base;
        std::vector<std::int64_t> vals;
        for (;;) {
          const std::size_t i = next.fetch_add(1);
          if (i >= tops.size()) break;
          if (!eng.try_assign(j0, tops[i], vals)) continue;
          if (!eng.dead_uncovered()) eng.dfs(1);
          eng.undo_assign(j0, tops[i], vals);
          found[static_cast<std::size_t>(w)].insert(found[static_cast<std::size_t>(w)].end(),
                                                    eng.hits.begin(), eng.hits.end());
          eng.hits.clear();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& part : found) hits.insert(hits.end(), part.begin(), part.end());
  }

  std::sort(hits.begin(), hits.end());
  const std::int64_t d = rs.dim(k);
  const std::int64_t index = rs.fano_index(k);
  std::vector<UlrichCertificate> out;
  out.reserve(hits.size());
  for (auto& w : hits) {
    if (!is_ulrich(rs, k, w)) throw internal_error("search hit fails the Sing check");
    UlrichCertificate cert;
    cert.sing.resize(d);
    std::iota(cert.sing.begin(), cert.sing.end(), 1);
    cert.rank = bundle_rank(rs, k, w);
    cert.dim = d;
    cert.index = index;
    cert.weight = std::move(w);
    out.push_back(std::move(cert));
  }
  return out;
}

}  // namespace ulrich
