#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "vee/examples.hpp"
#include "vee/isometry.hpp"

using namespace vee;

namespace {

const SuiteResult& find(const std::vector<SuiteResult>& rs, const std::string& prefix) {
  for (const auto& r : rs)
    if (r.name.rfind(prefix, 0) == 0) return r;
  FAIL("no suite named " << prefix);
  return rs.front();
}

}  // namespace

TEST_CASE("random_instance") {
  auto a = random_instance(42, {});
  auto b = random_instance(42, {});
  CHECK(a.branches == b.branches);
  CHECK(a.weight == b.weight);
  CHECK(a.I == b.I);
  CHECK(a.M == b.M);

  ShapeBounds one;
  one.max_branches = 1;
  for (std::uint64_t s = 1; s <= 50; ++s) CHECK(random_instance(s, one).branches.size() == 1);

  ShapeBounds fixed;
  fixed.fixed_shape = {2, 3, 4};
  auto c = random_instance(7, fixed);
  CHECK(c.branches == std::vector<int>{2, 3, 4});
  CHECK(build_nvee(c.branches, c.weight).nvee().asymmetric);

  ShapeBounds def;
  for (std::uint64_t s = 1; s <= 300; ++s) {
    auto inst = random_instance(s, def);
    CHECK(inst.branches.size() <= 3);
    for (int l : inst.branches) CHECK(l <= 4);
    CHECK(inst.I.size() <= 5);
    CHECK(inst.M.size() <= 5);
    CHECK(std::find(def.weights.begin(), def.weights.end(), inst.weight) != def.weights.end());
    Poset p = build_nvee(inst.branches, inst.weight);
    for (const auto& s2 : inst.I) CHECK(is_convex_support(p, s2));
    for (const auto& s2 : inst.M) CHECK(is_convex_support(p, s2));
  }
}

TEST_CASE("verify_isometry examples") {
  SUBCASE("identical barcodes") {
    Instance inst;
    inst.branches = {2, 1};
    inst.weight = {1, 2};
    inst.I = inst.M = {{0, 1}, {3}, {0, 1, 2, 3}};
    auto r = verify_isometry(inst);
    CHECK(r.pass);
    CHECK(r.DB == 0);
    for (int d : r.D) CHECK(d == 0);
  }
  SUBCASE("ex new") {
    auto ex = make_exnew();
    Instance inst;
    inst.branches = {3};
    inst.weight = ex.p.weight();
    inst.I = {ex.A};
    inst.M = {ex.B};
    auto r = verify_isometry(inst);
    CHECK(r.pass);
    CHECK(r.DB == inst.weight.a);
    for (int d : r.D) CHECK(d == inst.weight.a);
  }
}

TEST_CASE("isometry on 200 instances of the 2-Vee [2,3], (1,2)") {
  ShapeBounds b;
  b.fixed_shape = {2, 3};
  b.weights = {{1, 2}};
  for (std::uint64_t s = 1; s <= 200; ++s) {
    auto inst = random_instance(s, b);
    auto r = verify_isometry(inst);
    CAPTURE(r.to_json());
    CHECK(r.pass);
    CHECK(r.D.size() == 2);
    for (int d : r.D) CHECK(d == r.DB);
  }
}

TEST_CASE("reports are deterministic and well formed") {
  for (std::uint64_t s : {3u, 17u, 99u}) {
    auto inst = random_instance(s, {});
    auto a = verify_isometry(inst).to_json();
    auto b = verify_isometry(inst).to_json();
    CHECK(a == b);
    auto j = nlohmann::json::parse(a);
    CHECK(j["seed"] == s);
    CHECK(j.contains("D"));
    CHECK(j.contains("DB"));
    CHECK(j.contains("matching"));
    CHECK_FALSE(j.contains("ms"));
    CHECK(nlohmann::json::parse(verify_isometry(inst).to_json(true)).contains("ms"));
  }
}

TEST_CASE("lemma suites") {
  SUBCASE("1-Vee [3], (1,1): everything passes") {
    auto rs = run_lemma_suites(build_nvee({3}, {1, 1}));
    for (const auto& r : rs) {
      CAPTURE(r.name);
      CAPTURE(r.detail);
      CHECK(r.ran);
      CHECK(r.pass);
    }
  }
  SUBCASE("asymmetric 2-Vee [1,3]: width equivalence holds") {
    auto rs = run_lemma_suites(build_nvee({1, 3}, {1, 1}));
    const auto& w = find(rs, "Lemma W");
    CHECK(w.ran);
    CHECK(w.pass);
  }
  SUBCASE("symmetric 2-Vee [2,2]: width equivalence skipped, width cap runs") {
    auto rs = run_lemma_suites(build_nvee({2, 2}, {1, 1}));
    CHECK_FALSE(find(rs, "Lemma W").ran);
    CHECK(find(rs, "width cap").ran);
    CHECK(find(rs, "width cap").pass);
  }
  SUBCASE("trim (ii) counterexample on [1], (1,2)") {
    auto rs = run_lemma_suites(build_nvee({1}, {1, 2}));
    const auto& t = find(rs, "trim (ii)");
    CHECK(t.ran);
    CHECK_FALSE(t.pass);
    CHECK(find(rs, "trim (i)").pass);
    CHECK(find(rs, "inj/surj").pass);
  }
  SUBCASE("prematching counterexample on [1], (2,1)") {
    auto rs = run_lemma_suites(build_nvee({1}, {2, 1}));
    const auto& t = find(rs, "prematching");
    CHECK(t.ran);
    CHECK_FALSE(t.pass);
  }
  SUBCASE("large posets skip the enumeration suites") {
    auto rs = run_lemma_suites(build_nvee({4, 4, 4}, {1, 1}));
    CHECK_FALSE(find(rs, "T(P)").ran);
  }
}

TEST_CASE("width forms agree with the brute-force definitions") {
  for (auto sh : std::vector<std::vector<int>>{{3}, {1, 3}, {2, 3}, {1, 2, 3}})
    for (Weight w : {Weight{1, 1}, Weight{1, 2}, Weight{2, 1}}) {
      Poset p = build_nvee(sh, w);
      auto all = enumerate_translations(p);
      for (const auto& s : enumerate_sigma(p)) {
        int w1 = width_w1(p, all, s);
        CHECK(width_w2(p, all, s) == w1);
        CHECK(width(p, s) == w1);
      }
    }
}

TEST_CASE("kernel and cokernel widths on 1-Vees") {
  Poset p = build_nvee({3}, {1, 1});
  auto e = identity_translation(p);
  Barcode I{{0, 1}};
  ScalarMorphism id(1, 1);
  id.at(0, 0) = 1;
  CHECK(kernel_cokernel_widths(p, I, I, id, e, 2).empty());
  // the zero map leaves I in the kernel and I again in the cokernel
  ScalarMorphism zero(1, 1);
  Ladder ladder(p);
  auto w = kernel_cokernel_widths(p, I, I, zero, e, 3);
  CHECK(w == std::vector<int>{width(p, ladder, I[0]), width(p, ladder, I[0])});
  CHECK_THROWS_AS(kernel_cokernel_widths(build_nvee({1, 2}, {1, 1}), {}, {}, ScalarMorphism(0, 0), identity_translation(build_nvee({1, 2}, {1, 1})), 2),
                  std::invalid_argument);
}
