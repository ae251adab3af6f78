#include "vee/examples.hpp"

#include <algorithm>
#include <set>

#include "vee/interleaving.hpp"

namespace vee {

namespace {

Support span(const Poset& p, int branch, int lo, int hi) {
  Support s;
  const auto& br = p.nvee().branches[branch];
  for (int k = lo; k <= hi; ++k) s.push_back(k == 0 ? p.nvee().m : br[k - 1]);
  std::sort(s.begin(), s.end());
  return s;
}

Support join(Support a, const Support& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

std::uint64_t count_at(const InterleavingSystem& sys, int field) {
  SolveOptions opt;
  opt.field = field;
  opt.count = true;
  return *solve_over_field(sys, opt).count;
}

std::string equation_text(const InterleavingSystem& sys, const Equation& e) {
  std::string s;
  for (size_t k = 0; k < e.terms.size(); ++k)
    s += (k ? " + " : "") + sys.vars[e.terms[k].lam].name() + "*" + sys.vars[e.terms[k].mu].name();
  if (s.empty()) s = "0";
  return s + " = " + std::to_string(e.rhs);
}

}  // namespace

ExFour make_ex4(Weight w) {
  ExFour e;
  e.p = build_nvee({3, 6}, w);
  const auto& p = e.p;
  Support X = span(p, 1, 3, 5), Z = span(p, 1, 4, 5);
  e.X = {X};
  e.YZ = {X, Z};
  Support A = join(span(p, 0, 0, 2), span(p, 1, 0, 2));
  Support B = join(span(p, 0, 0, 2), span(p, 1, 0, 1));
  Support D = join(span(p, 0, 0, 1), span(p, 1, 0, 2));
  e.AB = {A, B};
  e.CD = {A, D};
  return e;
}

ExNew make_exnew(Weight w) {
  ExNew e;
  e.p = build_nvee({3}, w);
  e.A = span(e.p, 0, 0, 2);
  e.B = span(e.p, 0, 0, 1);
  e.C = span(e.p, 0, 0, 0);
  return e;
}

bool reproduce_ex4(std::ostream& out) {
  bool ok = true;
  ExFour e = make_ex4();
  Ladder ladder(e.p);
  const int a = e.p.weight().a;
  const auto& L = ladder.lam[ladder.index_at(a)];

  auto sys = build_system(e.p, e.X, e.YZ, L, L);
  out << "X vs Y+Z at Lambda_a\n" << sys.to_text(e.p);
  // alpha = lam[0,0], beta = lam[0,1], lambda = mu[0,0], mu = mu[1,0]
  const std::set<std::string> want{"lam[0,0]*mu[0,0] + lam[0,1]*mu[1,0] = 1", "lam[0,0]*mu[0,0] = 1",
                                   "lam[0,1]*mu[0,0] = 0"};
  std::set<std::string> got;
  for (const auto& eq : sys.eqs) got.insert(equation_text(sys, eq));
  if (got != want || sys.eqs.size() != want.size()) {
    out << "MISMATCH: system differs from the fixture\n";
    ok = false;
  }
  for (auto [q, n] : {std::pair{2, 2ull}, {3, 6ull}}) {
    auto c = count_at(sys, q);
    out << "  points over F" << q << ": " << c << (c == n ? "" : "  MISMATCH") << '\n';
    ok = ok && c == n;
  }

  auto sys2 = build_system(e.p, e.AB, e.CD, L, L);
  out << "A+B vs C+D at Lambda_a\n" << sys2.to_text(e.p);
  for (auto [q, n] : {std::pair{2, 6ull}, {3, 48ull}}) {
    auto c = count_at(sys2, q);
    out << "  points over F" << q << ": " << c << " (|GL2| = " << n << ")" << (c == n ? "" : "  MISMATCH") << '\n';
    ok = ok && c == n;
  }
  out << (ok ? "ex4: OK\n" : "ex4: FAILED\n");
  return ok;
}

bool reproduce_exnew(std::ostream& out) {
  bool ok = true;
  ExNew e = make_exnew();
  Ladder ladder(e.p);
  const int a = e.p.weight().a;
  out << "eps,points_F2,points_F3,expected_F2,expected_F3\n";
  int first = -1;
  for (size_t k = 0; k < ladder.eps.size(); ++k) {
    const int eps = ladder.eps[k];
    auto sys = build_system(e.p, {e.A}, {e.B}, ladder.lam[k], ladder.lam[k]);
    out << eps;
    std::string exp;
    for (int q : {2, 3}) out << ',' << count_at(sys, q);
    for (int q : {2, 3}) {
      std::uint64_t want = eps < a ? 0 : eps < 2 * a ? q - 1 : eps < 3 * a ? q : 1;
      ok = ok && count_at(sys, q) == want;
      exp += "," + std::to_string(want);
    }
    out << exp << '\n';
    if (first < 0 && count_at(sys, 2) > 0) first = eps;
  }
  int d = interleaving_distance(e.p, ladder, {e.A}, {e.B}, {2, 3});
  out << "D(A,B) = " << (d == a ? "a" : std::to_string(d)) << '\n';
  ok = ok && d == a && first == a;
  out << (ok ? "exnew: OK\n" : "exnew: FAILED\n");
  return ok;
}

}  // namespace vee
