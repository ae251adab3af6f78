#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "vee/chainrep.hpp"
#include "vee/fp.hpp"

using namespace vee;

namespace {

Mat random_mat(std::mt19937& g, int r, int c, int p) {
  Mat m(r, c);
  for (auto& x : m.a) x = static_cast<int>(g() % p);
  return m;
}

// |row span| by enumerating all combinations of rows.
int span_size(const Mat& m, int p) {
  std::set<std::vector<int>> seen;
  int total = 1;
  for (int i = 0; i < m.rows; ++i) total *= p;
  for (int code = 0; code < total; ++code) {
    std::vector<int> v(m.cols, 0);
    int c = code;
    for (int i = 0; i < m.rows; ++i, c /= p)
      for (int j = 0; j < m.cols; ++j) v[j] = (v[j] + (c % p) * m.at(i, j)) % p;
    seen.insert(v);
  }
  return static_cast<int>(seen.size());
}

int ipow(int b, int e) {
  int r = 1;
  while (e--) r *= b;
  return r;
}

ChainBarcode random_barcode(std::mt19937& g, int len, int nbars) {
  ChainBarcode b;
  for (int k = 0; k < nbars; ++k) {
    int lo = static_cast<int>(g() % len), hi = static_cast<int>(g() % len);
    if (lo > hi) std::swap(lo, hi);
    b.push_back({lo, hi});
  }
  return b;
}

// Morphism with a random scalar on every pair of bars admitting a nonzero map.
ChainMorphism random_morphism(std::mt19937& g, int len, const ChainBarcode& s, const ChainBarcode& t, int p) {
  ChainMorphism f;
  f.src = rep_from_barcode(len, s, p);
  f.dst = rep_from_barcode(len, t, p);
  auto slots = [&](const ChainBarcode& b) {
    std::vector<std::vector<int>> sl(b.size(), std::vector<int>(len, -1));
    std::vector<int> d(len, 0);
    for (size_t j = 0; j < b.size(); ++j)
      for (int i = b[j].lo; i <= b[j].hi; ++i) sl[j][i] = d[i]++;
    return sl;
  };
  auto ss = slots(s), st = slots(t);
  for (int i = 0; i < len; ++i) f.at.emplace_back(f.dst.dims[i], f.src.dims[i]);
  for (size_t u = 0; u < s.size(); ++u)
    for (size_t w = 0; w < t.size(); ++w) {
      // [a,b] -> [c,d] is nonzero iff c <= a <= d <= b
      if (!(t[w].lo <= s[u].lo && s[u].lo <= t[w].hi && t[w].hi <= s[u].hi)) continue;
      int c = static_cast<int>(g() % p);
      for (int i = s[u].lo; i <= t[w].hi; ++i) f.at[i].at(st[w][i], ss[u][i]) = c;
    }
  return f;
}

int total_dim(const ChainRep& r) {
  int d = 0;
  for (int x : r.dims) d += x;
  return d;
}

}  // namespace

TEST_CASE("fp basics") {
  CHECK(inv_mod(2, 5) == 3);
  CHECK(inv_mod(2, 3) == 2);
  CHECK_NOTHROW(check_prime(7));
  CHECK_THROWS(check_prime(4));
  CHECK_THROWS(check_prime(1));
  Mat i = Mat::identity(3);
  CHECK(rank(i, 2) == 3);
  CHECK(mul(i, i, 5) == i);
  CHECK(sub(i, i, 5).is_zero());
}

TEST_CASE("rank, nullspace, colspace and solve against enumeration") {
  std::mt19937 g(11);
  for (int p : {2, 3, 5})
    for (int trial = 0; trial < 150; ++trial) {
      int r = 1 + static_cast<int>(g() % 4), c = 1 + static_cast<int>(g() % 4);
      Mat m = random_mat(g, r, c, p);
      int rk = rank(m, p);
      CHECK(ipow(p, rk) == span_size(m, p));
      std::vector<std::vector<int>> rows(r, std::vector<int>(c));
      for (int a = 0; a < r; ++a)
        for (int b = 0; b < c; ++b) rows[a][b] = m.at(a, b);
      CHECK(rk == oracle::rank_mod(rows, p));
      Mat n = nullspace(m, p);
      CHECK(n.cols == c - rk);
      CHECK(mul(m, n, p).is_zero());
      CHECK(rank(n, p) == n.cols);
      Mat cs = colspace(m, p);
      CHECK(cs.cols == rk);
      CHECK(rank(hcat(cs, m), p) == rk);
      Mat x = random_mat(g, c, 1, p);
      Mat b = mul(m, x, p);
      auto sol = solve(m, b, p);
      REQUIRE(sol.has_value());
      CHECK(mul(m, *sol, p) == b);
    }
}

TEST_CASE("solve detects inconsistency") {
  Mat m(2, 1);
  m.at(0, 0) = 1;
  m.at(1, 0) = 1;
  Mat b(2, 1);
  b.at(0, 0) = 1;
  CHECK_FALSE(solve(m, b, 2).has_value());
}

TEST_CASE("rep_from_barcode") {
  CHECK(rep_from_barcode(3, {}, 2).dims == std::vector<int>{0, 0, 0});
  auto r = rep_from_barcode(4, {{1, 3}}, 2);
  CHECK(r.dims == std::vector<int>{0, 1, 1, 1});
  CHECK(r.maps[1].at(0, 0) == 1);
  CHECK(r.maps[2].at(0, 0) == 1);
  auto d = rep_from_barcode(3, {{0, 2}, {0, 2}}, 3);
  CHECK(d.dims == std::vector<int>{2, 2, 2});
  CHECK(d.maps[0] == Mat::identity(2));
}

TEST_CASE("barcode_of_rep") {
  SUBCASE("zero edge map splits") {
    ChainRep r;
    r.p = 2;
    r.dims = {1, 1};
    r.maps = {Mat(1, 1)};
    CHECK(barcode_of_rep(r) == ChainBarcode{{0, 0}, {1, 1}});
  }
  SUBCASE("dims (1,2,1)") {
    ChainRep r;
    r.p = 3;
    r.dims = {1, 2, 1};
    Mat a(2, 1), b(1, 2);
    a.at(0, 0) = 1;
    b.at(0, 1) = 1;
    r.maps = {a, b};
    CHECK(barcode_of_rep(r) == ChainBarcode{{0, 1}, {1, 2}});
  }
  SUBCASE("roundtrip") {
    std::mt19937 g(5);
    for (int trial = 0; trial < 300; ++trial) {
      int len = 1 + static_cast<int>(g() % 6);
      auto b = random_barcode(g, len, static_cast<int>(g() % 6));
      std::sort(b.begin(), b.end());
      CHECK(barcode_of_rep(rep_from_barcode(len, b, 2)) == b);
    }
  }
}

TEST_CASE("kernel, image, cokernel") {
  const int p = 3;
  SUBCASE("identity") {
    ChainMorphism f;
    f.src = f.dst = rep_from_barcode(3, {{0, 2}, {1, 1}}, p);
    for (int d : f.src.dims) f.at.push_back(Mat::identity(d));
    auto k = kernel_image_cokernel(f);
    CHECK(total_dim(k.ker) == 0);
    CHECK(total_dim(k.cok) == 0);
    CHECK(barcode_of_rep(k.im) == barcode_of_rep(f.src));
    CHECK(is_injective(f));
    CHECK(is_surjective(f));
  }
  SUBCASE("zero") {
    ChainMorphism f;
    f.src = rep_from_barcode(3, {{0, 1}}, p);
    f.dst = rep_from_barcode(3, {{1, 2}}, p);
    for (int i = 0; i < 3; ++i) f.at.emplace_back(f.dst.dims[i], f.src.dims[i]);
    auto k = kernel_image_cokernel(f);
    CHECK(barcode_of_rep(k.ker) == ChainBarcode{{0, 1}});
    CHECK(barcode_of_rep(k.cok) == ChainBarcode{{1, 2}});
    CHECK(total_dim(k.im) == 0);
  }
  SUBCASE("overlapping bars [2,5] -> [1,4]") {
    ChainMorphism f;
    f.src = rep_from_barcode(6, {{2, 5}}, p);
    f.dst = rep_from_barcode(6, {{1, 4}}, p);
    for (int i = 0; i < 6; ++i) {
      Mat a(f.dst.dims[i], f.src.dims[i]);
      if (i >= 2 && i <= 4) a.at(0, 0) = 1;
      f.at.push_back(a);
    }
    REQUIRE(f.commutes());
    auto k = kernel_image_cokernel(f);
    CHECK(barcode_of_rep(k.ker) == ChainBarcode{{5, 5}});
    CHECK(barcode_of_rep(k.im) == ChainBarcode{{2, 4}});
    CHECK(barcode_of_rep(k.cok) == ChainBarcode{{1, 1}});
  }
  SUBCASE("dimension counts on random morphisms") {
    std::mt19937 g(9);
    for (int trial = 0; trial < 300; ++trial) {
      int len = 1 + static_cast<int>(g() % 5);
      int q = trial % 2 ? 2 : 3;
      auto s = random_barcode(g, len, static_cast<int>(g() % 4));
      auto t = random_barcode(g, len, static_cast<int>(g() % 4));
      auto f = random_morphism(g, len, s, t, q);
      REQUIRE(f.commutes());
      auto k = kernel_image_cokernel(f);
      for (int i = 0; i < len; ++i) {
        int rk = rank(f.at[i], q);
        CHECK(k.im.dims[i] == rk);
        CHECK(k.ker.dims[i] == f.src.dims[i] - rk);
        CHECK(k.cok.dims[i] == f.dst.dims[i] - rk);
      }
      k.ker.check();
      k.im.check();
      k.cok.check();
    }
  }
}

TEST_CASE("induced matchings") {
  SUBCASE("isomorphism") {
    ChainBarcode b{{0, 2}, {1, 1}, {1, 3}};
    auto m = induced_matching(b, b, MatchMode::injection);
    CHECK(m == std::vector<int>{0, 1, 2});
    CHECK(induced_matching(b, b, MatchMode::surjection) == std::vector<int>{0, 1, 2});
  }
  SUBCASE("inclusion matches by right endpoint") {
    CHECK(induced_matching(ChainBarcode{{2, 3}}, ChainBarcode{{1, 3}}, MatchMode::injection) == std::vector<int>{0});
    auto m = induced_matching(ChainBarcode{{2, 3}}, ChainBarcode{{1, 2}, {1, 3}}, MatchMode::injection);
    CHECK(m == std::vector<int>{1});
  }
  SUBCASE("quotient matches by left endpoint") {
    CHECK(induced_matching(ChainBarcode{{1, 3}}, ChainBarcode{{1, 2}}, MatchMode::surjection) == std::vector<int>{0});
  }
  SUBCASE("injective morphisms give endpoint-compatible matchings") {
    std::mt19937 g(21);
    int tested = 0;
    for (int trial = 0; trial < 2000; ++trial) {
      int len = 1 + static_cast<int>(g() % 5);
      auto s = random_barcode(g, len, 1 + static_cast<int>(g() % 3));
      auto t = random_barcode(g, len, 1 + static_cast<int>(g() % 4));
      auto f = random_morphism(g, len, s, t, 3);
      if (!is_injective(f)) continue;
      ++tested;
      auto im = induced_matching(f, MatchMode::injection);
      for (size_t u = 0; u < im.source.size(); ++u) {
        int w = im.match[u];
        REQUIRE(w >= 0);
        CHECK(im.target[w].hi == im.source[u].hi);
        CHECK(im.target[w].lo <= im.source[u].lo);
      }
      std::set<int> used(im.match.begin(), im.match.end());
      CHECK(used.size() == im.source.size());
    }
    CHECK(tested > 50);
  }
  SUBCASE("surjective morphisms give endpoint-compatible matchings") {
    std::mt19937 g(22);
    int tested = 0;
    for (int trial = 0; trial < 2000; ++trial) {
      int len = 1 + static_cast<int>(g() % 5);
      auto s = random_barcode(g, len, 1 + static_cast<int>(g() % 4));
      auto t = random_barcode(g, len, 1 + static_cast<int>(g() % 3));
      auto f = random_morphism(g, len, s, t, 3);
      if (!is_surjective(f)) continue;
      ++tested;
      auto im = induced_matching(f, MatchMode::surjection);
      std::vector<int> hit(im.target.size(), 0);
      for (size_t u = 0; u < im.source.size(); ++u) {
        int w = im.match[u];
        if (w < 0) continue;
        ++hit[w];
        CHECK(im.target[w].lo == im.source[u].lo);
        CHECK(im.target[w].hi <= im.source[u].hi);
      }
      for (int h : hit) CHECK(h == 1);
    }
    CHECK(tested > 50);
  }
}
