#include "doctest.h"

#include "ulrich/dynkin.hpp"

#include "test_util.hpp"

using namespace ulrich;

TEST_CASE("rank constraints per series") {
  CHECK_NOTHROW(DynkinType(Series::A, 1));
  CHECK_NOTHROW(DynkinType(Series::B, 2));
  CHECK_NOTHROW(DynkinType(Series::C, 2));
  CHECK_NOTHROW(DynkinType(Series::D, 3));
  CHECK_NOTHROW(DynkinType(Series::E, 6));
  CHECK_NOTHROW(DynkinType(Series::E, 7));
  CHECK_NOTHROW(DynkinType(Series::E, 8));
  CHECK_NOTHROW(DynkinType(Series::F, 4));
  CHECK_NOTHROW(DynkinType(Series::G, 2));

  CHECK_THROWS_AS(DynkinType(Series::A, 0), std::invalid_argument);
  CHECK_THROWS_AS(DynkinType(Series::B, 1), std::invalid_argument);
  CHECK_THROWS_AS(DynkinType(Series::C, 1), std::invalid_argument);
  CHECK_THROWS_AS(DynkinType(Series::D, 2), std::invalid_argument);
  CHECK_THROWS_AS(DynkinType(Series::E, 5), std::invalid_argument);
  CHECK_THROWS_AS(DynkinType(Series::E, 9), std::invalid_argument);
  CHECK_THROWS_AS(DynkinType(Series::F, 3), std::invalid_argument);
  CHECK_THROWS_AS(DynkinType(Series::G, 3), std::invalid_argument);
  CHECK_THROWS_AS(DynkinType(Series::A, -1), std::invalid_argument);
}

TEST_CASE("type names") {
  CHECK(DynkinType(Series::E, 6).to_string() == "E6");
  CHECK(DynkinType(Series::G, 2).to_string() == "G2");
  CHECK(series_letter(Series::F) == 'F');
}

TEST_CASE("cartan matrix general shape") {
  for (const auto& type : testutil::all_types(8)) {
    CAPTURE(type.to_string());
    const CartanMatrix c = cartan_matrix(type);
    const std::vector<int> d = symmetrizer(type);
    const int n = type.rank;
    REQUIRE(c.rank() == n);
    REQUIRE(static_cast<int>(d.size()) == n);

    // Short roots have d = 1, so the minimum is 1; ratios stay within 3.
    int dmin = d[0], dmax = d[0];
    for (int v : d) {
      dmin = std::min(dmin, v);
      dmax = std::max(dmax, v);
    }
    CHECK(dmin == 1);
    CHECK(dmax <= 3);

    for (int i = 0; i < n; ++i) {
      CHECK(c.at(i, i) == 2);
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        CHECK(c.at(i, j) <= 0);
        CHECK(c.at(i, j) >= -3);
        CHECK((c.at(i, j) == 0) == (c.at(j, i) == 0));
        // d_j (alpha_i, alpha_j^vee) = d_i (alpha_j, alpha_i^vee): both sides
        // equal the inner product (alpha_i, alpha_j).
        CHECK(d[j] * c.at(i, j) == d[i] * c.at(j, i));
      }
    }
  }
}

TEST_CASE("explicit small matrices") {
  const CartanMatrix a2 = cartan_matrix(DynkinType(Series::A, 2));
  CHECK(a2.entries == std::vector<std::vector<int>>{{2, -1}, {-1, 2}});

  // B: the long row carries the -2 into the short terminal node.
  const CartanMatrix b2 = cartan_matrix(DynkinType(Series::B, 2));
  CHECK(b2.entries == std::vector<std::vector<int>>{{2, -2}, {-1, 2}});
  CHECK(symmetrizer(DynkinType(Series::B, 2)) == std::vector<int>{2, 1});

  // C is the transpose of B.
  const CartanMatrix c2 = cartan_matrix(DynkinType(Series::C, 2));
  CHECK(c2.entries == std::vector<std::vector<int>>{{2, -1}, {-2, 2}});
  CHECK(symmetrizer(DynkinType(Series::C, 2)) == std::vector<int>{1, 2});

  const CartanMatrix g2 = cartan_matrix(DynkinType(Series::G, 2));
  CHECK(g2.entries == std::vector<std::vector<int>>{{2, -1}, {-3, 2}});
  CHECK(symmetrizer(DynkinType(Series::G, 2)) == std::vector<int>{1, 3});

  const CartanMatrix b3 = cartan_matrix(DynkinType(Series::B, 3));
  CHECK(b3.entries ==
        std::vector<std::vector<int>>{{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}});

  const CartanMatrix f4 = cartan_matrix(DynkinType(Series::F, 4));
  CHECK(f4.entries == std::vector<std::vector<int>>{{2, -1, 0, 0},
                                                    {-1, 2, -2, 0},
                                                    {0, -1, 2, -1},
                                                    {0, 0, -1, 2}});
  CHECK(symmetrizer(DynkinType(Series::F, 4)) == std::vector<int>{2, 2, 1, 1});

  // D4 is the order-3 star around node 2 (0-based index 1).
  const CartanMatrix d4 = cartan_matrix(DynkinType(Series::D, 4));
  CHECK(d4.entries == std::vector<std::vector<int>>{{2, -1, 0, 0},
                                                    {-1, 2, -1, -1},
                                                    {0, -1, 2, 0},
                                                    {0, -1, 0, 2}});
}

TEST_CASE("E series triple node") {
  // Node 2 hangs off node 4 (Bourbaki numbering); the chain is
  // 1-3-4-5-...-n.
  for (int n : {6, 7, 8}) {
    const CartanMatrix c = cartan_matrix(DynkinType(Series::E, n));
    CHECK(c.at(1, 3) == -1);
    CHECK(c.at(3, 1) == -1);
    CHECK(c.at(0, 2) == -1);
    CHECK(c.at(0, 1) == 0);
    for (int i = 2; i + 1 < n; ++i) CHECK(c.at(i, i + 1) == -1);
    // Simply laced: symmetric with unit lengths.
    CHECK(symmetrizer(DynkinType(Series::E, n)) == std::vector<int>(n, 1));
  }
}
