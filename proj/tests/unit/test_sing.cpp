#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "ulrich/sing.hpp"
#include "ulrich/weyl.hpp"

#include "test_util.hpp"

using namespace ulrich;

namespace {

using Tuple = std::pair<std::vector<Rational>, Rational>;

std::vector<Tuple> tuples(const std::vector<AffineForm>& forms) {
  std::vector<Tuple> out;
  for (const auto& f : forms) out.emplace_back(f.multipliers, f.constant);
  return out;
}

Rational q(long long n, long long d = 1) { return Rational(n, d); }

std::vector<Rational> qv(std::vector<Rational> v) { return v; }

// Integer twists with omega + rho - t omega_k singular, found by scanning
// the orthogonality test over the hull of the form values.
std::vector<std::int64_t> scan_singular_twists(const RootSystem& rs, int k,
                                               const Weight& omega) {
  const auto forms = sing_forms(rs, k);
  Rational lo = forms.front().constant, hi = lo;
  for (const auto& f : forms) {
    Rational num(0);
    for (int j = 0; j < omega.rank(); ++j)
      num += f.multipliers[j] * Rational(omega[j] + 1);
    lo = std::min(lo, num);
    hi = std::max(hi, num);
  }
  const std::int64_t t_lo = lo.numerator() / lo.denominator() - 3;
  const std::int64_t t_hi = hi.numerator() / hi.denominator() + 3;
  std::vector<std::int64_t> out;
  for (std::int64_t t = t_lo; t <= t_hi; ++t) {
    Weight mu = omega;
    for (int j = 0; j < mu.rank(); ++j) mu[j] += 1;
    mu[k - 1] -= t;
    if (is_singular(rs, mu)) out.push_back(t);
  }
  return out;
}

}  // namespace

TEST_CASE("form count equals the quotient dimension") {
  for (const auto& [type, k] : testutil::exceptional_cases()) {
    CAPTURE(type.to_string());
    CAPTURE(k);
    const RootSystem rs = RootSystem::build(type);
    CHECK(static_cast<std::int64_t>(sing_forms(rs, k).size()) == rs.dim(k));
  }
  const RootSystem b4 = RootSystem::build(DynkinType(Series::B, 4));
  CHECK(sing_forms(b4, 2).size() == static_cast<std::size_t>(b4.dim(2)));
}

TEST_CASE("form normalization") {
  for (const auto& [type, k] : testutil::exceptional_cases()) {
    CAPTURE(type.to_string());
    CAPTURE(k);
    const RootSystem rs = RootSystem::build(type);
    const auto forms = sing_forms(rs, k);
    // The simple root at the marked node contributes the first form.
    CHECK(forms.front().constant == Rational(1));
    bool all_positive_seen = false;
    for (std::size_t idx = 0; idx < forms.size(); ++idx) {
      const auto& f = forms[idx];
      CHECK(f.multipliers[k - 1] == Rational(1));
      Rational sum(0);
      bool all_positive = true;
      for (int j = 0; j < rs.rank(); ++j) {
        CHECK(f.multipliers[j] >= Rational(0));
        sum += f.multipliers[j];
        if (f.multipliers[j] <= Rational(0)) all_positive = false;
      }
      // The constant is the value at the zero weight.
      CHECK(f.constant == sum);
      CHECK(f.scaled == f.coroot.coords);
      CHECK(f.denom == f.coroot.coords[k - 1]);
      all_positive_seen = all_positive_seen || all_positive;
      if (idx > 0) {
        const bool ordered =
            std::pair(forms[idx - 1].constant, forms[idx - 1].multipliers) <
            std::pair(f.constant, f.multipliers);
        CHECK(ordered);
      }
    }
    // The dominant coroot touches every node, so the box bound exists.
    CHECK(all_positive_seen);
  }
}

TEST_CASE("rank 2 triple-edge snapshots") {
  const RootSystem g2 = RootSystem::build(DynkinType(Series::G, 2));
  CHECK(tuples(sing_forms(g2, 1)) ==
        std::vector<Tuple>{{qv({q(1), q(0)}), q(1)},
                           {qv({q(1), q(1)}), q(2)},
                           {qv({q(1), q(3, 2)}), q(5, 2)},
                           {qv({q(1), q(2)}), q(3)},
                           {qv({q(1), q(3)}), q(4)}});
  CHECK(tuples(sing_forms(g2, 2)) ==
        std::vector<Tuple>{{qv({q(0), q(1)}), q(1)},
                           {qv({q(1, 3), q(1)}), q(4, 3)},
                           {qv({q(1, 2), q(1)}), q(3, 2)},
                           {qv({q(2, 3), q(1)}), q(5, 3)},
                           {qv({q(1), q(1)}), q(2)}});
}

TEST_CASE("rank 4 double-edge snapshot at the short end") {
  const RootSystem f4 = RootSystem::build(DynkinType(Series::F, 4));
  CHECK(tuples(sing_forms(f4, 4)) ==
        std::vector<Tuple>{
            {qv({q(0), q(0), q(0), q(1)}), q(1)},
            {qv({q(0), q(0), q(1), q(1)}), q(2)},
            {qv({q(0), q(1), q(1), q(1)}), q(3)},
            {qv({q(0), q(2), q(1), q(1)}), q(4)},
            {qv({q(1), q(1), q(1), q(1)}), q(4)},
            {qv({q(0), q(2), q(2), q(1)}), q(5)},
            {qv({q(1), q(2), q(1), q(1)}), q(5)},
            {qv({q(1), q(2), q(3, 2), q(1)}), q(11, 2)},
            {qv({q(1), q(2), q(2), q(1)}), q(6)},
            {qv({q(2), q(2), q(1), q(1)}), q(6)},
            {qv({q(1), q(3), q(2), q(1)}), q(7)},
            {qv({q(2), q(2), q(2), q(1)}), q(7)},
            {qv({q(2), q(3), q(2), q(1)}), q(8)},
            {qv({q(2), q(4), q(2), q(1)}), q(9)},
            {qv({q(2), q(4), q(3), q(1)}), q(10)}});
}

TEST_CASE("rank 6 minuscule-end snapshot") {
  const RootSystem e6 = RootSystem::build(DynkinType(Series::E, 6));
  const auto got = tuples(sing_forms(e6, 1));
  auto row = [](std::initializer_list<long long> m, long long c) {
    std::vector<Rational> mult;
    for (long long v : m) mult.push_back(Rational(v));
    return Tuple{mult, Rational(c)};
  };
  const std::vector<Tuple> expected = {
      row({1, 0, 0, 0, 0, 0}, 1),  row({1, 0, 1, 0, 0, 0}, 2),
      row({1, 0, 1, 1, 0, 0}, 3),  row({1, 0, 1, 1, 1, 0}, 4),
      row({1, 1, 1, 1, 0, 0}, 4),  row({1, 0, 1, 1, 1, 1}, 5),
      row({1, 1, 1, 1, 1, 0}, 5),  row({1, 1, 1, 1, 1, 1}, 6),
      row({1, 1, 1, 2, 1, 0}, 6),  row({1, 1, 1, 2, 1, 1}, 7),
      row({1, 1, 2, 2, 1, 0}, 7),  row({1, 1, 1, 2, 2, 1}, 8),
      row({1, 1, 2, 2, 1, 1}, 8),  row({1, 1, 2, 2, 2, 1}, 9),
      row({1, 1, 2, 3, 2, 1}, 10), row({1, 2, 2, 3, 2, 1}, 11),
  };
  CHECK(got == expected);
}

TEST_CASE("form evaluation returns integers only") {
  const RootSystem g2 = RootSystem::build(DynkinType(Series::G, 2));
  const auto forms = sing_forms(g2, 1);
  // Multipliers (1, 3/2): integral exactly when b is odd.
  const auto& half = forms[2];
  CHECK(half.evaluate(Weight({0, 0})) == std::nullopt);
  CHECK(half.evaluate(Weight({0, 1})) == std::int64_t{4});
  CHECK(half.evaluate(Weight({2, 3})) == std::int64_t{9});
  CHECK(forms[0].evaluate(Weight({7, 5})) == std::int64_t{8});
}

TEST_CASE("singular twist sets at chosen weights") {
  const RootSystem g2 = RootSystem::build(DynkinType(Series::G, 2));
  CHECK(sing_set(g2, 1, Weight::zero(2)).values ==
        std::vector<std::int64_t>{1, 2, 3, 4});

  const RootSystem e6 = RootSystem::build(DynkinType(Series::E, 6));
  std::vector<std::int64_t> upto11(11);
  std::iota(upto11.begin(), upto11.end(), 1);
  CHECK(sing_set(e6, 1, Weight::zero(6)).values == upto11);

  std::vector<std::int64_t> upto16(16);
  std::iota(upto16.begin(), upto16.end(), 1);
  CHECK(sing_set(e6, 1, Weight({0, 0, 0, 0, 1, 3})).values == upto16);

  const RootSystem e7 = RootSystem::build(DynkinType(Series::E, 7));
  std::vector<std::int64_t> upto33(33);
  std::iota(upto33.begin(), upto33.end(), 1);
  CHECK(sing_set(e7, 1, Weight({0, 0, 0, 0, 1, 3, 8})).values == upto33);
}

TEST_CASE("singular twist sets match the orthogonality scan") {
  std::mt19937 gen(5511);
  auto cases = testutil::exceptional_cases();
  cases.emplace_back(DynkinType(Series::A, 3), 2);
  cases.emplace_back(DynkinType(Series::B, 3), 1);
  cases.emplace_back(DynkinType(Series::C, 3), 2);
  cases.emplace_back(DynkinType(Series::D, 4), 1);
  for (const auto& [type, k] : cases) {
    CAPTURE(type.to_string());
    CAPTURE(k);
    const RootSystem rs = RootSystem::build(type);
    for (int trial = 0; trial < 60; ++trial) {
      Weight omega = testutil::random_weight(gen, rs.rank(), 0, 4);
      omega[k - 1] = static_cast<std::int64_t>(gen() % 7) - 2;
      CAPTURE(omega.coeffs);
      CHECK(sing_set(rs, k, omega).values == scan_singular_twists(rs, k, omega));
    }
  }
}

TEST_CASE("unmarked coroots never constrain the twist") {
  std::mt19937 gen(771);
  for (const auto& [type, k] : testutil::exceptional_cases()) {
    const RootSystem rs = RootSystem::build(type);
    const auto radical = rs.radical_coroots(k);
    std::size_t checked = 0;
    for (const auto& pr : rs.positive_roots()) {
      if (pr.root.coords[k - 1] > 0) continue;
      // Root avoids the marked node, so its coroot does too.
      CHECK(pr.coroot.coords[k - 1] == 0);
      const Weight omega = testutil::random_weight(gen, rs.rank(), 0, 6);
      Weight shifted = omega;
      for (int j = 0; j < rs.rank(); ++j) shifted[j] += 1;
      CHECK(pairing(shifted, pr.coroot) > 0);
      ++checked;
    }
    CHECK(checked + radical.size() == rs.positive_roots().size());
  }
}

TEST_CASE("text and latex rendering") {
  const RootSystem g2 = RootSystem::build(DynkinType(Series::G, 2));
  const auto p1 = sing_forms(g2, 1);
  CHECK(form_to_text(p1[0]) == "a + 1");
  CHECK(form_to_text(p1[2]) == "a + (3/2)b + 5/2");
  CHECK(form_to_latex(p1[2]) == "a + \\frac{3}{2}b + \\frac{5}{2}");
  CHECK(form_to_text(p1[4]) == "a + 3b + 4");
  const auto p2 = sing_forms(g2, 2);
  CHECK(form_to_text(p2[0]) == "b + 1");
  CHECK(form_to_text(p2[1]) == "(1/3)a + b + 4/3");
  CHECK(form_to_latex(p2[1]) == "\\frac{1}{3}a + b + \\frac{4}{3}");
  CHECK(coefficient_name(0, 6) == "a");
  CHECK(coefficient_name(5, 6) == "f");
}

TEST_CASE("weights outside the levi cone are rejected") {
  const RootSystem e6 = RootSystem::build(DynkinType(Series::E, 6));
  CHECK_THROWS_AS(sing_set(e6, 1, Weight({0, -1, 0, 0, 0, 0})),
                  std::invalid_argument);
  CHECK_NOTHROW(sing_set(e6, 1, Weight({-5, 0, 0, 0, 0, 0})));
}
