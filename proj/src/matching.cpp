#include "vee/matching.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

#include "vee/chainrep.hpp"

namespace vee {

PairTable::PairTable(const Poset& p, const Ladder& ladder, const Barcode& I, const Barcode& M)
    : wI(widths(p, ladder, I)), wM(widths(p, ladder, M)) {
  std::map<std::pair<Support, Support>, int> memo;
  d2.assign(I.size(), std::vector<int>(M.size(), 0));
  for (size_t s = 0; s < I.size(); ++s)
    for (size_t t = 0; t < M.size(); ++t) {
      auto key = std::make_pair(I[s], M[t]);
      auto it = memo.find(key);
      if (it == memo.end()) it = memo.emplace(key, pairwise_convex_distance(p, ladder, I[s], M[t])).first;
      d2[s][t] = it->second;
    }
}

std::vector<int> hopcroft_karp(int nleft, int nright, const std::vector<std::vector<int>>& adj) {
  std::vector<int> ml(nleft, -1), mr(nright, -1), dist(nleft);
  auto bfs = [&]() {
    std::queue<int> q;
    bool found = false;
    for (int u = 0; u < nleft; ++u) {
      if (ml[u] < 0) {
        dist[u] = 0;
        q.push(u);
      } else {
        dist[u] = -1;
      }
    }
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : adj[u]) {
        int w = mr[v];
        if (w < 0)
          found = true;
        else if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          q.push(w);
        }
      }
    }
    return found;
  };
  std::function<bool(int)> dfs = [&](int u) {
    for (int v : adj[u]) {
      int w = mr[v];
      if (w < 0 || (dist[w] == dist[u] + 1 && dfs(w))) {
        ml[u] = v;
        mr[v] = u;
        return true;
      }
    }
    dist[u] = -1;
    return false;
  };
  while (bfs())
    for (int u = 0; u < nleft; ++u)
      if (ml[u] < 0) dfs(u);
  return ml;
}

std::optional<std::vector<int>> forced_matching(int nleft, int nright, const std::vector<std::vector<int>>& allowed,
                                                const std::vector<char>& forced_left,
                                                const std::vector<char>& forced_right) {
  // Left side: real left vertices, then one stand-in per right vertex.
  // Right side: real right vertices, then one stand-in per left vertex.
  const int n = nleft + nright;
  std::vector<std::vector<int>> adj(n);
  for (int s = 0; s < nleft; ++s) {
    adj[s] = allowed[s];
    if (!forced_left[s]) adj[s].push_back(nright + s);
  }
  for (int t = 0; t < nright; ++t) {
    if (!forced_right[t]) adj[nleft + t].push_back(t);
    for (int s = 0; s < nleft; ++s) adj[nleft + t].push_back(nright + s);
  }
  auto ml = hopcroft_karp(n, n, adj);
  for (int u = 0; u < n; ++u)
    if (ml[u] < 0) return std::nullopt;
  std::vector<int> out(nleft, -1);
  for (int s = 0; s < nleft; ++s)
    if (ml[s] < nright) out[s] = ml[s];
  return out;
}

bool is_admissible(const PairTable& tab, const Matching& m, int eps, std::string* why) {
  auto fail = [&](const std::string& w) {
    if (why) *why = w;
    return false;
  };
  std::vector<char> ui(tab.wI.size(), 0), um(tab.wM.size(), 0);
  for (auto [s, t] : m.pairs) {
    if (s < 0 || t < 0 || s >= static_cast<int>(ui.size()) || t >= static_cast<int>(um.size()))
      return fail("pair index out of range");
    if (ui[s]++ || um[t]++) return fail("not injective");
    if (tab.d2[s][t] > eps) return fail("pair (" + std::to_string(s) + "," + std::to_string(t) + ") has d2 > eps");
  }
  for (size_t s = 0; s < ui.size(); ++s)
    if (!ui[s] && tab.wI[s] > eps) return fail("I bar " + std::to_string(s) + " wider than eps is unmatched");
  for (size_t t = 0; t < um.size(); ++t)
    if (!um[t] && tab.wM[t] > eps) return fail("M bar " + std::to_string(t) + " wider than eps is unmatched");
  return true;
}

std::optional<Matching> epsilon_matching(const PairTable& tab, int eps) {
  const int nI = static_cast<int>(tab.wI.size()), nM = static_cast<int>(tab.wM.size());
  std::vector<char> fl(nI), fr(nM);
  for (int s = 0; s < nI; ++s) fl[s] = tab.wI[s] > eps;
  for (int t = 0; t < nM; ++t) fr[t] = tab.wM[t] > eps;
  std::vector<int> fixed(nI, -2);  // -2 undecided, -1 unmatched
  std::vector<char> taken(nM, 0);
  auto feasible = [&]() {
    std::vector<std::vector<int>> allowed(nI);
    std::vector<char> fl2 = fl, fr2 = fr;
    for (int s = 0; s < nI; ++s) {
      if (fixed[s] >= 0) {
        allowed[s] = {fixed[s]};
        continue;
      }
      if (fixed[s] == -1) continue;
      for (int t = 0; t < nM; ++t)
        if (!taken[t] && tab.d2[s][t] <= eps) allowed[s].push_back(t);
    }
    for (int s = 0; s < nI; ++s)
      if (fixed[s] >= 0) fl2[s] = 1;
    return forced_matching(nI, nM, allowed, fl2, fr2).has_value();
  };
  if (!feasible()) return std::nullopt;
  // lexicographic: each I bar takes the smallest M bar that keeps the rest feasible
  for (int s = 0; s < nI; ++s) {
    bool done = false;
    for (int t = 0; t < nM && !done; ++t) {
      if (taken[t] || tab.d2[s][t] > eps) continue;
      fixed[s] = t;
      taken[t] = 1;
      if (feasible())
        done = true;
      else
        taken[t] = 0;
    }
    if (!done) {
      fixed[s] = -1;
      if (!feasible()) throw std::logic_error("epsilon_matching: lost feasibility");
    }
  }
  Matching m;
  m.eps = eps;
  for (int s = 0; s < nI; ++s)
    if (fixed[s] >= 0) {
      m.pairs.emplace_back(s, fixed[s]);
      m.d2.push_back(tab.d2[s][fixed[s]]);
    }
  return m;
}

std::optional<Matching> epsilon_matching(const Poset& p, const Barcode& I, const Barcode& M, int eps) {
  Ladder ladder(p);
  return epsilon_matching(PairTable(p, ladder, I, M), eps);
}

BottleneckResult bottleneck(const PairTable& tab) {
  std::set<int> cand{0};
  for (int w : tab.wI) cand.insert(w);
  for (int w : tab.wM) cand.insert(w);
  for (const auto& row : tab.d2)
    for (int d : row) cand.insert(d);
  for (int e : cand)
    if (auto m = epsilon_matching(tab, e)) return {e, *m};
  throw std::logic_error("bottleneck: no admissible matching");
}

int bottleneck_distance(const Poset& p, const Barcode& I, const Barcode& M) {
  Ladder ladder(p);
  return bottleneck(PairTable(p, ladder, I, M)).eps;
}

namespace {

void half_rec(std::vector<int> S, std::vector<std::set<int>> x, std::vector<int>& F) {
  if (S.empty()) return;
  const int n = static_cast<int>(S.size());
  if (n > 20) throw std::length_error("half_matching: too many elements");
  std::vector<unsigned> masks;
  for (unsigned mk = 1; mk < (1u << n); ++mk) masks.push_back(mk);
  std::stable_sort(masks.begin(), masks.end(),
                   [](unsigned u, unsigned v) { return __builtin_popcount(u) < __builtin_popcount(v); });
  int tight = -1;
  for (unsigned mk : masks) {
    std::set<int> un;
    for (int k = 0; k < n; ++k)
      if (mk >> k & 1u) un.insert(x[S[k]].begin(), x[S[k]].end());
    int sz = __builtin_popcount(mk);
    if (static_cast<int>(un.size()) < sz) {
      HallViolation hv;
      for (int k = 0; k < n; ++k)
        if (mk >> k & 1u) hv.witness.push_back(S[k]);
      throw hv;
    }
    if (static_cast<int>(un.size()) == sz && tight < 0) tight = static_cast<int>(mk);
  }
  if (tight >= 0) {
    std::vector<int> S0, rest;
    for (int k = 0; k < n; ++k) (static_cast<unsigned>(tight) >> k & 1u ? S0 : rest).push_back(S[k]);
    int s0 = S0.front(), t0 = *x[s0].begin();
    F[s0] = t0;
    auto x1 = x;
    for (int s : S0) x1[s].erase(t0);
    half_rec(std::vector<int>(S0.begin() + 1, S0.end()), x1, F);
    auto x2 = x;
    for (int s : rest)
      for (int s1 : S0) x2[s].erase(F[s1]);
    half_rec(rest, x2, F);
  } else {
    int s1 = S.front(), t1 = *x[s1].begin();
    F[s1] = t1;
    for (int s : S) x[s].erase(t1);
    half_rec(std::vector<int>(S.begin() + 1, S.end()), x, F);
  }
}

}  // namespace

std::vector<int> half_matching(const std::vector<std::vector<int>>& x) {
  std::vector<std::set<int>> xs;
  std::vector<int> S;
  for (size_t s = 0; s < x.size(); ++s) {
    xs.emplace_back(x[s].begin(), x[s].end());
    S.push_back(static_cast<int>(s));
  }
  std::vector<int> F(x.size(), -1);
  half_rec(S, xs, F);
  return F;
}

std::pair<ScalarMorphism, ScalarMorphism> diagonal_interleaving_from_matching(const Poset& p, const Ladder& ladder,
                                                                             const Barcode& I, const Barcode& M,
                                                                             const Matching& m) {
  PairTable tab(p, ladder, I, M);
  std::string why;
  if (!is_admissible(tab, m, m.eps, &why)) throw std::invalid_argument("matching not admissible: " + why);
  int k = ladder.index_at(m.eps);
  if (k < 0) throw std::invalid_argument("eps below every threshold");
  const auto& L = ladder.lam[k];
  ScalarMorphism phi(static_cast<int>(I.size()), static_cast<int>(M.size()));
  ScalarMorphism psi(static_cast<int>(M.size()), static_cast<int>(I.size()));
  for (auto [s, t] : m.pairs) {
    // 1x1 witness: over F_2 a solution is 0/1 valued and works in every field
    auto sys = build_system(p, {I[s]}, {M[t]}, L, L);
    SolveOptions opt;
    opt.field = 2;
    auto sol = solve_over_field(sys, opt);
    if (!sol.nonempty) throw std::logic_error("matched pair has no interleaving at eps");
    phi.at(s, t) = phi_of(sys, sol.witness).at(0, 0);
    psi.at(t, s) = psi_of(sys, sol.witness).at(0, 0);
  }
  return {phi, psi};
}

namespace {

struct ChainBlock {
  std::vector<Vertex> chain;
  std::vector<int> Is, Ts;  // bar indices in this block
};

std::vector<std::pair<int, int>> chain_match(const Poset& p, const Barcode& I, const Barcode& M,
                                             const ScalarMorphism& phi, const Translation& L, int field,
                                             const ChainBlock& blk, const PairTable& tab, int eps) {
  const auto& chain = blk.chain;
  const int k = static_cast<int>(chain.size());
  std::map<Vertex, int> pos;
  for (int i = 0; i < k; ++i) pos[chain[i]] = i;
  auto interval_of = [&](const Support& s) -> std::optional<Interval> {
    int lo = INT_MAX, hi = -1;
    for (Vertex v : s) {
      auto it = pos.find(v);
      if (it == pos.end()) continue;
      lo = std::min(lo, it->second);
      hi = std::max(hi, it->second);
    }
    if (hi < 0) return std::nullopt;
    return Interval{lo, hi};
  };
  // wide bars first among equal intervals
  std::vector<int> is = blk.Is, ts = blk.Ts;
  std::stable_sort(is.begin(), is.end(), [&](int a, int b) { return tab.wI[a] > tab.wI[b]; });
  std::stable_sort(ts.begin(), ts.end(), [&](int a, int b) { return tab.wM[a] > tab.wM[b]; });
  ChainBarcode ib, mb;
  std::vector<int> i_of, t_of;
  std::vector<Support> ML;
  for (int s : is) {
    auto iv = interval_of(I[s]);
    if (!iv) continue;
    ib.push_back(*iv);
    i_of.push_back(s);
  }
  for (int t : ts) {
    Support sup = act_nvee(p, M[t], L);
    auto iv = interval_of(sup);
    if (!iv) continue;
    mb.push_back(*iv);
    t_of.push_back(t);
    ML.push_back(sup);
  }
  ChainMorphism f;
  f.src = rep_from_barcode(k, ib, field);
  f.dst = rep_from_barcode(k, mb, field);
  auto slots = [&](const ChainBarcode& b) {
    std::vector<std::vector<int>> sl(b.size(), std::vector<int>(k, -1));
    std::vector<int> d(k, 0);
    for (size_t j = 0; j < b.size(); ++j)
      for (int i = b[j].lo; i <= b[j].hi; ++i) sl[j][i] = d[i]++;
    return sl;
  };
  auto si = slots(ib), sm = slots(mb);
  for (int i = 0; i < k; ++i) {
    Mat a(f.dst.dims[i], f.src.dims[i]);
    for (size_t u = 0; u < ib.size(); ++u)
      for (size_t w = 0; w < mb.size(); ++w) {
        if (si[u][i] < 0 || sm[w][i] < 0) continue;
        int s = i_of[u], t = t_of[w];
        int val = ((phi.at(s, t) % field) + field) % field;
        if (!val) continue;
        auto h = canonical_hom(p, I[s], ML[w]);
        if (h.nonzero && contains(h.support, chain[i])) a.at(sm[w][i], si[u][i]) = val;
      }
    f.at.push_back(a);
  }
  if (!f.commutes()) throw std::logic_error("restricted morphism does not commute");
  auto kic = kernel_image_cokernel(f);
  ChainBarcode imb = barcode_of_rep(kic.im);
  auto rho = induced_matching(ib, imb, MatchMode::surjection);
  auto iota = induced_matching(imb, mb, MatchMode::injection);
  // Bars with equal chain intervals are indistinguishable to the chain matching.
  // Permute within each class of equal M-side intervals, then equal I-side
  // intervals, so that every pair lands within eps when possible.
  struct P { int s, t; Interval a, b; };
  std::vector<P> ps;
  for (size_t u = 0; u < ib.size(); ++u) {
    int j = rho[u];
    if (j < 0) continue;
    int w = iota[j];
    if (w < 0) continue;
    ps.push_back({i_of[u], t_of[w], ib[u], mb[w]});
  }
  auto repair = [&](bool by_target) {
    std::map<std::pair<int, int>, std::vector<int>> cls;
    for (size_t k = 0; k < ps.size(); ++k) {
      const Interval& iv = by_target ? ps[k].b : ps[k].a;
      cls[{iv.lo, iv.hi}].push_back(static_cast<int>(k));
    }
    for (auto& [key, ks] : cls) {
      const int n = static_cast<int>(ks.size());
      if (n < 2) continue;
      std::vector<std::vector<int>> adj(n);
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          if (tab.d2[ps[ks[x]].s][ps[ks[y]].t] <= eps) adj[x].push_back(y);
      auto mt = hopcroft_karp(n, n, adj);
      if (std::find(mt.begin(), mt.end(), -1) != mt.end()) continue;
      std::vector<P> old;
      for (int k : ks) old.push_back(ps[k]);
      for (int x = 0; x < n; ++x) {
        ps[ks[x]].t = old[mt[x]].t;
        ps[ks[x]].b = old[mt[x]].b;
      }
    }
  };
  repair(true);
  repair(false);
  std::vector<std::pair<int, int>> out;
  for (auto& q : ps) out.emplace_back(q.s, q.t);
  return out;
}

}  // namespace

Matching induced_matching_from_interleaving(const Poset& p, const Ladder& ladder, const Barcode& I, const Barcode& M,
                                            const ScalarMorphism& phi, const ScalarMorphism& psi,
                                            const Translation& L, int field) {
  const int h = height(p, L);
  if (maximal_translation(p, h) != L) throw std::invalid_argument("translation is not maximal of its height");
  if (!check_interleaving(p, I, M, phi, psi, L, L, field)) throw std::invalid_argument("not an interleaving");
  PairTable tab(p, ladder, I, M);
  Matching res;
  res.eps = h;
  const auto& sh = p.nvee();
  const Vertex m = sh.m;
  std::vector<std::pair<int, int>> pairs;
  auto with_min_in = [&](const Barcode& b, const std::function<bool(Vertex)>& pred) {
    std::vector<int> out;
    for (size_t k = 0; k < b.size(); ++k)
      if (pred(min_element(p, b[k]))) out.push_back(static_cast<int>(k));
    return out;
  };
  if (L == all_to_inf(p)) {
    // every bar has width <= h
  } else if (L[m] == m && sh.branches.size() > 1) {
    std::vector<int> Sm, Tm;
    for (size_t s = 0; s < I.size(); ++s)
      if (contains(I[s], m)) Sm.push_back(static_cast<int>(s));
    for (size_t t = 0; t < M.size(); ++t)
      if (contains(M[t], m)) Tm.push_back(static_cast<int>(t));
    std::vector<std::vector<int>> x;
    for (int s : Sm) {
      std::vector<int> xs;
      for (int t : Tm)
        if ((phi.at(s, t) % field) * (psi.at(t, s) % field) % field) xs.push_back(t);
      x.push_back(xs);
    }
    auto F = half_matching(x);
    for (size_t k = 0; k < Sm.size(); ++k) pairs.emplace_back(Sm[k], F[k]);
    for (size_t i = 0; i < sh.branches.size(); ++i) {
      ChainBlock blk;
      blk.chain = sh.branches[i];
      auto in_branch = [&](Vertex v) { return p.branch_of(v) == static_cast<int>(i); };
      blk.Is = with_min_in(I, in_branch);
      blk.Ts = with_min_in(M, in_branch);
      for (auto pr : chain_match(p, I, M, phi, L, field, blk, tab, h)) pairs.push_back(pr);
    }
  } else {
    int i = L[m] == m ? 0 : p.branch_of(L[m]);
    if (i < 0) i = 0;
    ChainBlock blk;
    blk.chain.push_back(m);
    for (Vertex v : sh.branches[i]) blk.chain.push_back(v);
    auto in_chain = [&](Vertex v) { return v == m || p.branch_of(v) == i; };
    blk.Is = with_min_in(I, in_chain);
    blk.Ts = with_min_in(M, in_chain);
    pairs = chain_match(p, I, M, phi, L, field, blk, tab, h);
  }
  std::sort(pairs.begin(), pairs.end());
  res.pairs = pairs;
  for (auto [s, t] : pairs) res.d2.push_back(tab.d2[s][t]);
  return res;
}

}  // namespace vee
