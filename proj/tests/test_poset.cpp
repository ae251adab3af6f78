#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "vee/poset.hpp"

using namespace vee;

TEST_CASE("build_nvee: 1-Vee [3]") {
  Poset p = build_nvee({3}, {1, 1});
  CHECK(p.size() == 5);
  CHECK(p.is_suspended());
  CHECK(p.covers().size() == 4);
  for (int w : p.cover_weights()) CHECK(w == 1);
  CHECK(vertex_name(p, 0) == "m");
  CHECK(vertex_name(p, 3) == "x3");
  CHECK(vertex_name(p, 4) == "inf");
}

TEST_CASE("build_nvee: weights on the suspension edges") {
  Poset p = build_nvee({2, 1}, {1, 2});
  for (size_t k = 0; k < p.covers().size(); ++k) {
    auto [x, y] = p.covers()[k];
    CHECK(p.cover_weights()[k] == (y == p.inf() ? 2 : 1));
    (void)x;
  }
}

TEST_CASE("asymmetry flag") {
  CHECK_FALSE(build_nvee({1, 1, 1}, {1, 2}).nvee().asymmetric);
  CHECK(build_nvee({2, 3, 4}, {1, 1}).nvee().asymmetric);
  CHECK(build_nvee({3}, {1, 1}).nvee().asymmetric);
  CHECK_FALSE(build_nvee({2, 2}, {1, 1}).nvee().asymmetric);
  CHECK(build_nvee({3, 6}, {1, 2}).nvee().i0 == 1);
}

TEST_CASE("validate_nvee") {
  SUBCASE("diamond rejected by condition 2") {
    // 0 < 1,2 < 3
    Poset e = Poset::from_covers(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
    auto r = validate_nvee(e);
    CHECK_FALSE(r.ok);
    CHECK(r.failed_condition == 2);
  }
  SUBCASE("chain of four is a 1-Vee") {
    Poset c = Poset::from_covers(4, {{0, 1}, {1, 2}, {2, 3}});
    auto r = validate_nvee(c);
    CHECK(r.ok);
    CHECK(r.shape.branches.size() == 1);
  }
  SUBCASE("two minima rejected by condition 1") {
    Poset v = Poset::from_covers(3, {{0, 2}, {1, 2}});
    auto r = validate_nvee(v);
    CHECK_FALSE(r.ok);
    CHECK(r.failed_condition == 1);
  }
  SUBCASE("asymmetric 3-Vee from covers") {
    Poset d = Poset::from_covers(7, {{0, 1}, {0, 2}, {2, 3}, {0, 4}, {4, 5}, {5, 6}});
    auto r = validate_nvee(d);
    CHECK(r.ok);
    CHECK(r.shape.asymmetric);
    CHECK(r.shape.branches.size() == 3);
  }
  SUBCASE("every built n-Vee validates") {
    for (const auto& sh : oracle::shapes(3, 7)) {
      Poset p = build_nvee(sh, {1, 1});
      CHECK(validate_nvee(p).ok);
    }
  }
}

TEST_CASE("distance examples") {
  Poset p = build_nvee({3}, {1, 2});
  CHECK(p.distance(0, 0) == 0);
  CHECK(p.distance(0, p.inf()) == 5);
  for (Weight w : oracle::weights()) {
    Poset q = build_nvee({3, 6}, w);
    Vertex x1 = q.nvee().branches[0][0], y1 = q.nvee().branches[1][0];
    CHECK(q.distance(x1, y1) == 2 * w.a);
  }
}

TEST_CASE("distance equals the shortest-path oracle and is a metric") {
  for (const auto& sh : oracle::shapes(3, 8))
    for (Weight w : oracle::weights()) {
      Poset p = build_nvee(sh, w);
      auto d = oracle::all_distances(p);
      const int n = p.size();
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
          REQUIRE(p.distance(x, y) == d[x][y]);
          CHECK((p.distance(x, y) == 0) == (x == y));
          CHECK(p.distance(x, y) == p.distance(y, x));
          for (int z = 0; z < n; ++z) CHECK(p.distance(x, z) <= p.distance(x, y) + p.distance(y, z));
        }
    }
}

TEST_CASE("chain additivity only holds along shortest chain paths") {
  // [1,6], (1,1): y1..y6 can shortcut through inf
  Poset p = build_nvee({1, 6}, {1, 1});
  const auto& y = p.nvee().branches[1];
  CHECK(p.distance(y[0], y[5]) == 4);
  CHECK(p.distance(y[0], y[2]) + p.distance(y[2], y[5]) == 5);
  // short branches behave additively
  Poset q = build_nvee({3}, {1, 2});
  for (int x = 0; x < 4; ++x)
    for (int m = x; m < 4; ++m)
      for (int z = m; z < 4; ++z) CHECK(q.distance(x, z) == q.distance(x, m) + q.distance(m, z));
}

TEST_CASE("leq matches cover paths") {
  Poset p = build_nvee({2, 3}, {1, 1});
  const int n = p.size();
  // transitive closure of covers
  std::vector<std::vector<char>> r(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i) r[i][i] = 1;
  for (auto [x, y] : p.covers()) r[x][y] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (r[i][k] && r[k][j]) r[i][j] = 1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) CHECK(p.leq(i, j) == static_cast<bool>(r[i][j]));
}

namespace {

std::vector<Vertex> fixed_oracle(const Poset& p) {
  auto all = oracle::all_translations(p);
  std::vector<Vertex> out;
  for (int v = 0; v < p.size(); ++v) {
    bool f = true;
    for (const auto& t : all) f = f && t[v] == v;
    if (f) out.push_back(v);
  }
  return out;
}

}  // namespace

TEST_CASE("fixed points") {
  Poset chain = Poset::from_covers(3, {{0, 1}, {1, 2}});
  CHECK(fixed_points(chain) == std::vector<Vertex>{2});
  CHECK(fixed_points(chain) == fixed_oracle(chain));

  Poset e = Poset::from_covers(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  CHECK(fixed_points(e) == fixed_oracle(e));

  // two maxima over a common bottom: maxima and their meet are fixed
  Poset c = Poset::from_covers(5, {{0, 1}, {0, 2}, {1, 3}, {2, 4}});
  auto fc = fixed_points(c);
  CHECK(fc == fixed_oracle(c));
  CHECK(std::find(fc.begin(), fc.end(), 0) != fc.end());

  CHECK_THROWS_AS(fixed_points(chain.suspend({1, 1})), std::invalid_argument);
  CHECK_THROWS_AS(fixed_points(Poset::from_covers(12, {})), std::length_error);
}

TEST_CASE("suspended chain has no fixed points under all translations") {
  Poset p = build_nvee({2}, {1, 1});
  auto all = oracle::all_translations(p);
  for (int v = 0; v < p.core_size(); ++v) {
    bool moved = false;
    for (const auto& t : all) moved = moved || t[v] != v;
    CHECK(moved);
  }
}

TEST_CASE("branch_of and level") {
  Poset p = build_nvee({2, 1}, {1, 1});
  CHECK(p.branch_of(0) == -1);
  CHECK(p.branch_of(p.nvee().branches[1][0]) == 1);
  CHECK(p.level(p.nvee().branches[0][1]) == 2);
  CHECK(vertex_name(p, p.nvee().branches[1][0]) == "y1");
}

TEST_CASE("build_nvee rejects bad input") {
  CHECK_THROWS(build_nvee({}, {1, 1}));
  CHECK_THROWS(build_nvee({0}, {1, 1}));
  CHECK_THROWS(build_nvee({2}, {0, 1}));
}
