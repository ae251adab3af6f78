#include "vee/interleaving.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "vee/fp.hpp"

namespace vee {

std::string Var::name() const {
  std::ostringstream os;
  if (lam)
    os << "lam[" << s << "," << t << "]";
  else
    os << "mu[" << t << "," << s << "]";
  return os.str();
}

InterleavingSystem build_system(const Poset& p, const Barcode& I, const Barcode& M, const Translation& L,
                                const Translation& G) {
  InterleavingSystem sys;
  sys.nI = static_cast<int>(I.size());
  sys.nM = static_cast<int>(M.size());
  sys.L = L;
  sys.G = G;
  sys.I = I;
  sys.M = M;
  sys.lam_index.assign(static_cast<size_t>(sys.nI) * sys.nM, -1);
  sys.mu_index.assign(static_cast<size_t>(sys.nM) * sys.nI, -1);
  std::vector<Support> IG, ML;
  for (const auto& s : I) IG.push_back(act_nvee(p, s, G));
  for (const auto& t : M) ML.push_back(act_nvee(p, t, L));
  sys.IG = IG;
  sys.ML = ML;
  for (int s = 0; s < sys.nI; ++s)
    for (int t = 0; t < sys.nM; ++t)
      if (hom_nonzero(p, I[s], ML[t])) {
        sys.lam_index[static_cast<size_t>(s) * sys.nM + t] = static_cast<int>(sys.vars.size());
        sys.vars.push_back({true, s, t});
      }
  for (int t = 0; t < sys.nM; ++t)
    for (int s = 0; s < sys.nI; ++s)
      if (hom_nonzero(p, M[t], IG[s])) {
        sys.mu_index[static_cast<size_t>(t) * sys.nI + s] = static_cast<int>(sys.vars.size());
        sys.vars.push_back({false, s, t});
      }
  const Translation GL = compose(G, L), LG = compose(L, G);
  std::map<std::pair<std::vector<Monomial>, int>, size_t> seen;
  auto add = [&](std::vector<Monomial> terms, int rhs, Provenance pv) {
    std::sort(terms.begin(), terms.end());
    if (terms.empty() && rhs == 0) return;
    auto key = std::make_pair(terms, rhs);
    auto it = seen.find(key);
    if (it != seen.end()) {
      sys.eqs[it->second].from.push_back(pv);
      return;
    }
    seen.emplace(key, sys.eqs.size());
    sys.eqs.push_back({std::move(terms), rhs, {pv}});
  };
  for (Vertex x = 0; x < p.core_size(); ++x) {
    for (int s = 0; s < sys.nI; ++s) {
      if (!contains(I[s], x)) continue;
      for (int s2 = 0; s2 < sys.nI; ++s2) {
        if (!contains(I[s2], GL[x])) continue;
        std::vector<Monomial> terms;
        for (int t = 0; t < sys.nM; ++t) {
          int l = sys.lam_var(s, t), m = sys.mu_var(t, s2);
          if (l < 0 || m < 0) continue;
          if (contains(ML[t], x) && contains(IG[s2], L[x])) terms.push_back({l, m});
        }
        add(terms, s == s2 ? 1 : 0, {'I', x, s, s2});
      }
    }
    for (int t = 0; t < sys.nM; ++t) {
      if (!contains(M[t], x)) continue;
      for (int t2 = 0; t2 < sys.nM; ++t2) {
        if (!contains(M[t2], LG[x])) continue;
        std::vector<Monomial> terms;
        for (int s = 0; s < sys.nI; ++s) {
          int m = sys.mu_var(t, s), l = sys.lam_var(s, t2);
          if (l < 0 || m < 0) continue;
          if (contains(IG[s], x) && contains(ML[t2], G[x])) terms.push_back({l, m});
        }
        add(terms, t == t2 ? 1 : 0, {'M', x, t, t2});
      }
    }
  }
  return sys;
}

std::string InterleavingSystem::to_text(const Poset& p) const {
  std::ostringstream os;
  os << "# L =";
  for (Vertex v : L) os << ' ' << v;
  os << "\n# G =";
  for (Vertex v : G) os << ' ' << v;
  os << "\n# vars " << vars.size() << '\n';
  for (const auto& v : vars)
    os << "# " << v.name() << " : Hom(" << (v.lam ? "I" : "M") << (v.lam ? v.s : v.t) << ", "
       << (v.lam ? "M" : "I") << (v.lam ? v.t : v.s) << (v.lam ? "L" : "G") << ")\n";
  for (const auto& e : eqs) {
    if (e.terms.empty()) os << "0";
    for (size_t k = 0; k < e.terms.size(); ++k)
      os << (k ? " + " : "") << vars[e.terms[k].lam].name() << '*' << vars[e.terms[k].mu].name();
    os << " = " << e.rhs << "   # " << e.from.front().triangle << "@" << vertex_name(p, e.from.front().at)
       << '\n';
  }
  return os.str();
}

std::string InterleavingSystem::to_json(const Poset& p) const {
  nlohmann::json j;
  j["L"] = L;
  j["G"] = G;
  for (const auto& v : vars) j["vars"].push_back(v.name());
  j["equations"] = nlohmann::json::array();
  for (const auto& e : eqs) {
    nlohmann::json je;
    for (const auto& m : e.terms) je["terms"].push_back({vars[m.lam].name(), vars[m.mu].name()});
    if (e.terms.empty()) je["terms"] = nlohmann::json::array();
    je["rhs"] = e.rhs;
    for (const auto& pv : e.from)
      je["from"].push_back({{"triangle", std::string(1, pv.triangle)},
                            {"at", vertex_name(p, pv.at)},
                            {"row", pv.row},
                            {"col", pv.col}});
    j["equations"].push_back(je);
  }
  return j.dump();
}

bool check_interleaving(const Poset& p, const Barcode& I, const Barcode& M, const ScalarMorphism& phi,
                        const ScalarMorphism& psi, const Translation& L, const Translation& G, int field) {
  const int nI = static_cast<int>(I.size()), nM = static_cast<int>(M.size());
  if (phi.rows != nI || phi.cols != nM || psi.rows != nM || psi.cols != nI)
    throw std::invalid_argument("check_interleaving: shape mismatch");
  // zero pattern
  for (int s = 0; s < nI; ++s)
    for (int t = 0; t < nM; ++t) {
      if (phi.at(s, t) % field && !hom_nonzero(p, I[s], act_nvee(p, M[t], L))) return false;
      if (psi.at(t, s) % field && !hom_nonzero(p, M[t], act_nvee(p, I[s], G))) return false;
    }
  auto basis = [&](const Barcode& b, Vertex x) {
    std::vector<int> idx;
    if (x == p.inf()) return idx;
    for (int k = 0; k < static_cast<int>(b.size()); ++k)
      if (contains(b[k], x)) idx.push_back(k);
    return idx;
  };
  // matrix of f: A(x) -> B(y) where f_{a,b} = scal(a,b) * Phi_{A_a, B_b T} evaluated at x
  auto eval = [&](const Barcode& A, const Barcode& B, const std::function<int(int, int)>& scal,
                  const Translation& T, Vertex x) {
    auto ia = basis(A, x), ib = basis(B, T[x]);
    Mat m(static_cast<int>(ib.size()), static_cast<int>(ia.size()));
    for (size_t c = 0; c < ia.size(); ++c)
      for (size_t r = 0; r < ib.size(); ++r) {
        auto h = canonical_hom(p, A[ia[c]], act_nvee(p, B[ib[r]], T));
        if (h.nonzero && contains(h.support, x)) m.at(static_cast<int>(r), static_cast<int>(c)) = ((scal(ia[c], ib[r]) % field) + field) % field;
      }
    return m;
  };
  auto phis = [&](int s, int t) { return phi.at(s, t); };
  auto psis = [&](int t, int s) { return psi.at(t, s); };
  auto structure = [&](const Barcode& A, Vertex x, Vertex y) {
    auto ia = basis(A, x), ib = basis(A, y);
    Mat m(static_cast<int>(ib.size()), static_cast<int>(ia.size()));
    for (size_t c = 0; c < ia.size(); ++c)
      for (size_t r = 0; r < ib.size(); ++r)
        if (ia[c] == ib[r]) m.at(static_cast<int>(r), static_cast<int>(c)) = 1;
    return m;
  };
  for (Vertex x = 0; x < p.core_size(); ++x) {
    Mat lhs = mul(eval(M, I, psis, G, L[x]), eval(I, M, phis, L, x), field);
    if (lhs != structure(I, x, G[L[x]])) return false;
    Mat rhs = mul(eval(I, M, phis, L, G[x]), eval(M, I, psis, G, x), field);
    if (rhs != structure(M, x, L[G[x]])) return false;
  }
  return true;
}

namespace {

struct Component {
  std::vector<int> vars;
  std::vector<std::pair<std::vector<Monomial>, int>> eqs;
};

// Partial matrix: -1 marks an entry no equation pins down.
using SpecMat = std::vector<std::vector<int>>;

// Lower bound on the rank of every completion: the largest lower-unitriangular
// pattern (specified 1 diagonal, specified 0 above it) among the chosen rows/cols.
int forced_rank(const SpecMat& S, std::uint32_t rows, std::uint32_t cols) {
  const int nr = static_cast<int>(S.size()), nc = nr ? static_cast<int>(S[0].size()) : 0;
  int best = 0;
  long budget = 200000;
  std::vector<int> rs;
  std::function<void(std::uint32_t, std::uint32_t)> go = [&](std::uint32_t ur, std::uint32_t uc) {
    const int k = static_cast<int>(rs.size());
    best = std::max(best, k);
    const int room = std::min(std::popcount(rows & ~ur), std::popcount(cols & ~uc));
    if (k + room <= best || --budget < 0) return;
    for (int r = 0; r < nr; ++r) {
      if (!(rows >> r & 1) || (ur >> r & 1)) continue;
      for (int c = 0; c < nc; ++c) {
        if (!(cols >> c & 1) || (uc >> c & 1) || S[r][c] != 1) continue;
        bool ok = true;
        for (int r0 : rs)
          if (S[r0][c] != 0) ok = false;
        if (!ok) continue;
        rs.push_back(r);
        go(ur | 1u << r, uc | 1u << c);
        rs.pop_back();
      }
    }
  };
  go(0, 0);
  return best;
}

// Equations of one triangle at vertices sharing the inner mask are entries of
// one product (lam matrix)(mu matrix), up to order and transpose. Any
// completion of the pinned entries bounds the rank of either factor from below.
struct RankGroup {
  char triangle = 'I';
  SpecMat S;
  bool conflict = false;
  int need = 0;
  std::vector<int> side[2];  // [0]: lam vars, [1]: mu vars
};

int term_rank(const InterleavingSystem& sys, const std::vector<int>& vars) {
  std::vector<std::vector<int>> adj(sys.nI);
  for (int v : vars) adj[sys.vars[v].s].push_back(sys.vars[v].t);
  std::vector<int> owner(sys.nM, -1);
  int size = 0;
  for (int s = 0; s < sys.nI; ++s) {
    std::vector<char> seen(sys.nM, 0);
    std::function<bool(int)> augment = [&](int u) {
      for (int t : adj[u]) {
        if (seen[t]) continue;
        seen[t] = 1;
        if (owner[t] < 0 || augment(owner[t])) {
          owner[t] = u;
          return true;
        }
      }
      return false;
    };
    if (augment(s)) ++size;
  }
  return size;
}

std::vector<RankGroup> rank_groups(const InterleavingSystem& sys, const std::vector<char>& inner) {
  if (sys.nI > 30 || sys.nM > 30) return {};
  const int core = static_cast<int>(sys.L.size()) - 1;
  const Translation GL = compose(sys.G, sys.L), LG = compose(sys.L, sys.G);
  auto mask = [](const Barcode& b, Vertex x) {
    std::vector<char> m(b.size());
    for (size_t k = 0; k < b.size(); ++k) m[k] = contains(b[k], x);
    return m;
  };
  std::map<std::pair<char, std::vector<char>>, RankGroup> acc;
  for (Vertex x = 0; x < core; ++x) {
    for (char tri : {'I', 'M'}) {
      const bool isI = tri == 'I';
      const Barcode& own = isI ? sys.I : sys.M;
      auto rows = mask(own, x), cols = mask(own, isI ? GL[x] : LG[x]);
      auto inner_mask = isI ? mask(sys.ML, x) : mask(sys.IG, x);
      auto far_mask = isI ? mask(sys.IG, sys.L[x]) : mask(sys.ML, sys.G[x]);
      auto [it, fresh] = acc.try_emplace({tri, inner_mask});
      auto& g = it->second;
      const int n = static_cast<int>(own.size());
      if (fresh) {
        g.triangle = tri;
        g.S.assign(n, std::vector<int>(n, -1));
        for (size_t v = 0; v < sys.vars.size(); ++v) {
          if (!inner[v]) continue;
          const auto& y = sys.vars[v];
          // inner index: t for I triangles, s for M triangles
          if (isI && y.lam && inner_mask[y.t]) g.side[0].push_back(static_cast<int>(v));
          if (isI && !y.lam && inner_mask[y.t]) g.side[1].push_back(static_cast<int>(v));
          if (!isI && !y.lam && inner_mask[y.s]) g.side[1].push_back(static_cast<int>(v));
          if (!isI && y.lam && inner_mask[y.s]) g.side[0].push_back(static_cast<int>(v));
        }
      }
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
          // a column outside far_mask reads a zeroed copy of the product
          if (!rows[r] || !cols[c] || !far_mask[c]) continue;
          int want = r == c ? 1 : 0;
          if (g.S[r][c] >= 0 && g.S[r][c] != want) g.conflict = true;
          g.S[r][c] = want;
        }
    }
  }
  std::vector<RankGroup> out;
  for (auto& [_, g] : acc) {
    const int n = static_cast<int>(g.S.size());
    g.need = forced_rank(g.S, (1u << n) - 1, (1u << n) - 1);
    if (g.need == 0 && !g.conflict) continue;
    out.push_back(std::move(g));
  }
  return out;
}

// Solves one connected bilinear block by branching on the smaller family and
// eliminating the other.
class BlockSolver {
 public:
  BlockSolver(const InterleavingSystem& sys, const Component& c, int p, const std::vector<RankGroup>& groups = {})
      : p_(p), nI_(sys.nI), nM_(sys.nM) {
    std::vector<int> lams, mus;
    for (int v : c.vars) (sys.vars[v].lam ? lams : mus).push_back(v);
    branch_lam_ = lams.size() <= mus.size();
    const auto& f = branch_lam_ ? lams : mus;
    const auto& o = branch_lam_ ? mus : lams;
    fvars_ = f;
    ovars_ = o;
    std::map<int, int> fl, ol;
    for (size_t k = 0; k < f.size(); ++k) fl[f[k]] = static_cast<int>(k);
    for (size_t k = 0; k < o.size(); ++k) ol[o[k]] = static_cast<int>(k);
    for (const auto& [terms, rhs] : c.eqs) {
      Eq e;
      e.rhs = rhs;
      for (const auto& m : terms) {
        int fv = branch_lam_ ? m.lam : m.mu, ov = branch_lam_ ? m.mu : m.lam;
        e.terms.emplace_back(fl.at(fv), ol.at(ov));
      }
      eqs_.push_back(e);
    }
    // branching order: finish equations as early as possible
    const int nf = static_cast<int>(f.size());
    std::vector<char> placed(nf, 0);
    while (static_cast<int>(order_.size()) < nf) {
      int best = -1, bestc = 1 << 30;
      for (size_t k = 0; k < eqs_.size(); ++k) {
        int cnt = 0;
        for (auto [a, b] : eqs_[k].terms)
          if (!placed[a]) ++cnt;
        std::sort(eqs_[k].terms.begin(), eqs_[k].terms.end());
        if (cnt > 0 && cnt < bestc) {
          bestc = cnt;
          best = static_cast<int>(k);
        }
      }
      if (best < 0) {
        for (int v = 0; v < nf; ++v)
          if (!placed[v]) {
            placed[v] = 1;
            order_.push_back(v);
          }
        break;
      }
      for (auto [a, b] : eqs_[best].terms)
        if (!placed[a]) {
          placed[a] = 1;
          order_.push_back(a);
        }
    }
    std::vector<int> pos(nf, 0);
    for (int k = 0; k < nf; ++k) pos[order_[k]] = k;
    // rank groups living entirely on this block's branching family
    fvar_groups_.assign(nf, {});
    for (const auto& g : groups) {
      const auto& side = g.side[branch_lam_ ? 0 : 1];
      if (side.empty() || !std::all_of(side.begin(), side.end(), [&](int v) { return fl.count(v); })) continue;
      LocalGroup lg;
      lg.need = g.need;
      // outer index faces S: lam by rows in I triangles, mu by rows in M triangles
      const bool outer_s = g.triangle == 'I';
      lg.outer_is_row = (g.triangle == 'I') == branch_lam_;
      lg.S = g.S;
      lg.n_outer = outer_s ? nI_ : nM_;
      lg.n_inner = outer_s ? nM_ : nI_;
      lg.lb.assign(std::size_t{1} << lg.n_outer, -1);
      for (int v : side) {
        const auto& x = sys.vars[v];
        lg.entries.push_back({fl.at(v), outer_s ? x.s : x.t, outer_s ? x.t : x.s});
      }
      for (int v : side) fvar_groups_[fl.at(v)].push_back(static_cast<int>(lgroups_.size()));
      lgroups_.push_back(std::move(lg));
    }
    pos_ = pos;
    ready_.assign(nf + 1, {});
    for (size_t k = 0; k < eqs_.size(); ++k) {
      int last = 0;
      for (auto [a, b] : eqs_[k].terms) last = std::max(last, pos[a] + 1);
      ready_[last].push_back(static_cast<int>(k));
    }
  }

  int branching() const { return static_cast<int>(fvars_.size()); }

  // exists: stops at the first leaf
  bool find(std::vector<int>& out_values) {
    stop_at_first_ = true;
    count_ = 0;
    found_ = false;
    fval_.assign(fvars_.size(), 0);
    rows_.clear();
    if (!push_ready(0)) return false;
    dfs(0);
    if (found_) out_values = witness_;
    return found_;
  }

  std::uint64_t count() {
    stop_at_first_ = false;
    count_ = 0;
    found_ = false;
    fval_.assign(fvars_.size(), 0);
    rows_.clear();
    if (!push_ready(0)) return 0;
    dfs(0);
    return count_;
  }

  bool random_find(std::mt19937_64& rng, long tries, std::vector<int>& out_values) {
    std::uniform_int_distribution<int> d(0, p_ - 1);
    for (long k = 0; k < tries; ++k) {
      for (auto& v : fval_) v = d(rng);
      rows_.clear();
      bool ok = true;
      for (size_t depth = 0; depth < ready_.size() && ok; ++depth) ok = push_ready(static_cast<int>(depth));
      if (ok) {
        leaf();
        out_values = witness_;
        return true;
      }
    }
    return false;
  }

  const std::vector<int>& fvars() const { return fvars_; }
  const std::vector<int>& ovars() const { return ovars_; }

 private:
  struct Eq {
    std::vector<std::pair<int, int>> terms;  // (f local, o local)
    int rhs = 0;
  };
  struct Row {
    std::vector<int> c;  // o coefficients, then rhs
    int piv = -1;
  };

  bool push_ready(int depth) {
    const int no = static_cast<int>(ovars_.size());
    for (int k : ready_[depth]) {
      Row r;
      r.c.assign(no + 1, 0);
      for (auto [a, b] : eqs_[k].terms) r.c[b] = (r.c[b] + fval_[a]) % p_;
      r.c[no] = eqs_[k].rhs % p_;
      for (const auto& q : rows_) {
        int f = r.c[q.piv];
        if (!f) continue;
        for (int j = 0; j <= no; ++j) r.c[j] = ((r.c[j] - f * q.c[j]) % p_ + p_) % p_;
      }
      int piv = -1;
      for (int j = 0; j < no; ++j)
        if (r.c[j]) {
          piv = j;
          break;
        }
      if (piv < 0) {
        if (r.c[no]) return false;
        continue;
      }
      int iv = inv_mod(r.c[piv], p_);
      for (int j = 0; j <= no; ++j) r.c[j] = r.c[j] * iv % p_;
      r.piv = piv;
      rows_.push_back(std::move(r));
    }
    return true;
  }

  void leaf() {
    const int no = static_cast<int>(ovars_.size());
    std::vector<int> o(no, 0);
    for (int k = static_cast<int>(rows_.size()) - 1; k >= 0; --k) {
      const auto& r = rows_[k];
      int v = r.c[no];
      for (int j = 0; j < no; ++j)
        if (j != r.piv) v = ((v - r.c[j] * o[j]) % p_ + p_) % p_;
      o[r.piv] = v;
    }
    witness_.assign(fvars_.size() + ovars_.size(), 0);
    for (size_t k = 0; k < fvars_.size(); ++k) witness_[k] = fval_[k];
    for (int k = 0; k < no; ++k) witness_[fvars_.size() + k] = o[k];
  }

  void dfs(int depth) {
    if (found_ && stop_at_first_) return;
    if (depth == static_cast<int>(order_.size())) {
      if (stop_at_first_) {
        found_ = true;
        leaf();
      } else {
        std::uint64_t c = 1;
        for (size_t k = rows_.size(); k < ovars_.size(); ++k) c *= p_;
        count_ += c;
      }
      return;
    }
    const int v = order_[depth];
    const size_t saved = rows_.size();
    for (int k = 0; k < p_; ++k) {
      int val = k;
      fval_[v] = val;
      if (rank_ok(v, depth) && push_ready(depth + 1)) dfs(depth + 1);
      rows_.resize(saved);
      if (found_ && stop_at_first_) return;
    }
    fval_[v] = 0;
  }

  struct LocalGroup {
    int need = 0;
    bool outer_is_row = true;
    int n_outer = 0, n_inner = 0;
    SpecMat S;
    mutable std::vector<int> lb;  // forced rank per set of decided outer indices
    std::vector<std::array<int, 3>> entries;  // (f local, outer, inner)
  };

  // Can the groups touching v still reach their required rank?
  bool rank_ok(int v, int depth) const {
    for (int gi : fvar_groups_[v]) {
      const auto& g = lgroups_[gi];
      // outer indices whose entries are all decided
      std::vector<char> done(g.n_outer, 1);
      for (const auto& e : g.entries)
        if (pos_[e[0]] > depth) done[e[1]] = 0;
      std::vector<int> rows;
      std::uint32_t omask = 0;
      for (int o = 0; o < g.n_outer; ++o)
        if (done[o]) rows.push_back(o), omask |= 1u << o;
      if (!rows.empty()) {
        int& need = g.lb[omask];
        if (need < 0) {
          const std::uint32_t all = (1u << g.S.size()) - 1;
          need = g.outer_is_row ? forced_rank(g.S, omask, all) : forced_rank(g.S, all, omask);
        }
        if (need > 0) {
          std::vector<int> at(g.n_outer, -1);
          for (size_t k = 0; k < rows.size(); ++k) at[rows[k]] = static_cast<int>(k);
          Mat f(static_cast<int>(rows.size()), g.n_inner);
          for (const auto& e : g.entries)
            if (at[e[1]] >= 0) f.at(at[e[1]], e[2]) = fval_[e[0]];
          if (rank(f, p_) < need) return false;
        }
      }
      if (static_cast<int>(rows.size()) == g.n_outer) continue;
      std::vector<std::vector<int>> adj(g.n_outer);
      for (const auto& e : g.entries)
        if (pos_[e[0]] > depth || fval_[e[0]]) adj[e[1]].push_back(e[2]);
      std::vector<int> owner(g.n_inner, -1);
      int size = 0;
      for (int o = 0; o < g.n_outer && size < g.need; ++o) {
        std::vector<char> seen(g.n_inner, 0);
        std::function<bool(int)> augment = [&](int u) {
          for (int t : adj[u]) {
            if (seen[t]) continue;
            seen[t] = 1;
            if (owner[t] < 0 || augment(owner[t])) {
              owner[t] = u;
              return true;
            }
          }
          return false;
        };
        if (augment(o)) ++size;
      }
      if (size < g.need) return false;
    }
    return true;
  }

  int p_;
  int nI_ = 0, nM_ = 0;
  std::vector<LocalGroup> lgroups_;
  std::vector<std::vector<int>> fvar_groups_;
  std::vector<int> pos_;
  bool branch_lam_ = true;
  std::vector<int> fvars_, ovars_, order_;
  std::vector<Eq> eqs_;
  std::vector<std::vector<int>> ready_;
  std::vector<int> fval_;
  std::vector<Row> rows_;
  std::vector<int> witness_;
  bool stop_at_first_ = true, found_ = false;
  std::uint64_t count_ = 0;
};

// Groups equations (and their variables) into connected blocks.
std::vector<Component> split(int nvars, const std::vector<std::pair<std::vector<Monomial>, int>>& eqs,
                             const std::vector<char>& usable) {
  std::vector<int> parent(nvars);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (const auto& [terms, rhs] : eqs)
    for (const auto& m : terms) {
      parent[find(m.lam)] = find(terms.front().lam);
      parent[find(m.mu)] = find(terms.front().lam);
    }
  std::map<int, Component> comps;
  for (const auto& e : eqs) comps[find(e.first.front().lam)].eqs.push_back(e);
  std::vector<char> used(nvars, 0);
  for (const auto& e : eqs)
    for (const auto& m : e.first) used[m.lam] = used[m.mu] = 1;
  for (int v = 0; v < nvars; ++v)
    if (used[v] && usable[v]) comps[find(v)].vars.push_back(v);
  std::vector<Component> out;
  for (auto& [_, c] : comps) out.push_back(std::move(c));
  return out;
}

// Strongly connected components of the bar graph (lam: I_s -> M_t, mu: M_t -> I_s).
std::vector<int> bar_sccs(const InterleavingSystem& sys) {
  const int n = sys.nI + sys.nM;
  std::vector<std::vector<int>> adj(n);
  for (const auto& v : sys.vars) {
    if (v.lam)
      adj[v.s].push_back(sys.nI + v.t);
    else
      adj[sys.nI + v.t].push_back(v.s);
  }
  std::vector<int> idx(n, -1), low(n, 0), comp(n, -1), stack;
  std::vector<char> on(n, 0);
  int counter = 0, ncomp = 0;
  std::function<void(int)> visit = [&](int u) {
    idx[u] = low[u] = counter++;
    stack.push_back(u);
    on[u] = 1;
    for (int w : adj[u]) {
      if (idx[w] < 0) {
        visit(w);
        low[u] = std::min(low[u], low[w]);
      } else if (on[w]) {
        low[u] = std::min(low[u], idx[w]);
      }
    }
    if (low[u] == idx[u]) {
      while (true) {
        int w = stack.back();
        stack.pop_back();
        on[w] = 0;
        comp[w] = ncomp;
        if (w == u) break;
      }
      ++ncomp;
    }
  };
  for (int u = 0; u < n; ++u)
    if (idx[u] < 0) visit(u);
  return comp;
}

}  // namespace

SolveResult solve_over_field(const InterleavingSystem& sys, const SolveOptions& opt) {
  check_prime(opt.field);
  const int nv = static_cast<int>(sys.vars.size());
  SolveResult res;
  res.witness.assign(nv, 0);
  std::vector<std::pair<std::vector<Monomial>, int>> eqs;
  for (const auto& e : sys.eqs) {
    if (e.terms.empty()) {
      if (e.rhs % opt.field) {
        if (opt.count) res.count = 0;
        return res;
      }
      continue;
    }
    eqs.emplace_back(e.terms, e.rhs);
  }
  std::vector<char> all(nv, 1);

  if (opt.count) {
    auto comps = split(nv, eqs, all);
    auto cgroups = rank_groups(sys, all);
    std::uint64_t total = 1;
    std::vector<char> used(nv, 0);
    for (auto& c : comps) {
      for (int v : c.vars) used[v] = 1;
      BlockSolver b(sys, c, opt.field, cgroups);
      if (b.branching() > opt.cap) throw std::length_error("system too large for exhaustive counting");
      total *= b.count();
    }
    for (int v = 0; v < nv; ++v)
      if (!used[v]) total *= opt.field;
    res.count = total;
    if (total == 0) return res;
  }

  // existence: zero the variables joining different strongly connected blocks
  auto scc = bar_sccs(sys);
  std::vector<char> inner(nv, 0);
  for (int v = 0; v < nv; ++v) {
    const auto& x = sys.vars[v];
    inner[v] = scc[x.s] == scc[sys.nI + x.t];
  }
  std::vector<std::pair<std::vector<Monomial>, int>> kept;
  for (const auto& [terms, rhs] : eqs) {
    std::vector<Monomial> t2;
    for (const auto& m : terms)
      if (inner[m.lam] && inner[m.mu]) t2.push_back(m);
    if (t2.empty()) {
      if (rhs % opt.field) return res;
      continue;
    }
    kept.emplace_back(std::move(t2), rhs);
  }
  auto groups = rank_groups(sys, inner);
  for (const auto& g : groups) {
    if (g.conflict) return res;
    for (int k = 0; k < 2; ++k)
      if (term_rank(sys, g.side[k]) < g.need) return res;
  }
  std::mt19937_64 rng(opt.seed);
  for (auto& c : split(nv, kept, inner)) {
    BlockSolver b(sys, c, opt.field, groups);
    std::vector<int> vals;
    bool ok;
    if (b.branching() > opt.cap) {
      ok = b.random_find(rng, opt.random_tries, vals);
      if (!ok) res.exhaustive = false;
    } else {
      ok = b.find(vals);
    }
    if (!ok) return res;
    for (size_t k = 0; k < b.fvars().size(); ++k) res.witness[b.fvars()[k]] = vals[k];
    for (size_t k = 0; k < b.ovars().size(); ++k) res.witness[b.ovars()[k]] = vals[b.fvars().size() + k];
  }
  res.nonempty = true;
  return res;
}

ScalarMorphism phi_of(const InterleavingSystem& sys, const std::vector<int>& values) {
  ScalarMorphism m(sys.nI, sys.nM);
  for (size_t v = 0; v < sys.vars.size(); ++v)
    if (sys.vars[v].lam) m.at(sys.vars[v].s, sys.vars[v].t) = values[v];
  return m;
}

ScalarMorphism psi_of(const InterleavingSystem& sys, const std::vector<int>& values) {
  ScalarMorphism m(sys.nM, sys.nI);
  for (size_t v = 0; v < sys.vars.size(); ++v)
    if (!sys.vars[v].lam) m.at(sys.vars[v].t, sys.vars[v].s) = values[v];
  return m;
}

std::vector<int> widths(const Poset& p, const Ladder& ladder, const Barcode& b) {
  std::vector<int> w;
  for (const auto& s : b) w.push_back(width(p, ladder, s));
  return w;
}

DistanceResult interleaving_distance_ex(const Poset& p, const Ladder& ladder, const Barcode& I, const Barcode& M,
                                        int field, const SolveOptions& base) {
  int wmax = 0;
  for (int w : widths(p, ladder, I)) wmax = std::max(wmax, w);
  for (int w : widths(p, ladder, M)) wmax = std::max(wmax, w);
  SolveOptions opt = base;
  opt.field = field;
  opt.count = false;
  DistanceResult r;
  for (size_t k = 0; k < ladder.eps.size(); ++k) {
    const auto& L = ladder.lam[k];
    if (ladder.eps[k] >= wmax) {
      r = {ladder.eps[k], static_cast<int>(k), true, ScalarMorphism(static_cast<int>(I.size()), static_cast<int>(M.size())),
           ScalarMorphism(static_cast<int>(M.size()), static_cast<int>(I.size())), true};
      return r;
    }
    auto sys = build_system(p, I, M, L, L);
    auto sol = solve_over_field(sys, opt);
    if (!sol.exhaustive) r.exhaustive = false;
    if (sol.nonempty) {
      r.eps = ladder.eps[k];
      r.index = static_cast<int>(k);
      r.phi = phi_of(sys, sol.witness);
      r.psi = psi_of(sys, sol.witness);
      return r;
    }
  }
  throw std::logic_error("interleaving_distance: no threshold admits an interleaving");
}

int interleaving_distance(const Poset& p, const Ladder& ladder, const Barcode& I, const Barcode& M,
                          const std::vector<int>& fields) {
  if (fields.empty()) throw std::invalid_argument("no fields requested");
  int best = -1;
  for (int f : fields) {
    int d = interleaving_distance_ex(p, ladder, I, M, f).eps;
    if (best < 0 || d < best) best = d;
  }
  return best;
}

int interleaving_distance(const Poset& p, const Barcode& I, const Barcode& M, const std::vector<int>& fields) {
  return interleaving_distance(p, Ladder(p), I, M, fields);
}

namespace {

// Nonzero 1x1 interleaving at L: every rhs-1 equation of the 1x1 system has its term.
bool single_pair_nonzero(const Poset& p, const Support& a, const Support& b, const Translation& L) {
  Support bL = act_nvee(p, b, L), aL = act_nvee(p, a, L);
  if (!hom_nonzero(p, a, bL) || !hom_nonzero(p, b, aL)) return false;
  for (Vertex x = 0; x < p.core_size(); ++x) {
    if (L[x] == p.inf() || L[L[x]] == p.inf()) continue;
    if (contains(a, x) && contains(a, L[L[x]]) && !contains(b, L[x])) return false;
    if (contains(b, x) && contains(b, L[L[x]]) && !contains(a, L[x])) return false;
  }
  return true;
}

}  // namespace

int pairwise_convex_distance(const Poset& p, const Ladder& ladder, const Support& a, const Support& b) {
  int wa = width(p, ladder, a), wb = width(p, ladder, b);
  for (size_t k = 0; k < ladder.eps.size(); ++k) {
    if (ladder.eps[k] >= std::max(wa, wb)) return ladder.eps[k];
    if (single_pair_nonzero(p, a, b, ladder.lam[k])) return ladder.eps[k];
  }
  throw std::logic_error("pairwise distance: no threshold");
}

int pairwise_convex_distance(const Poset& p, const Support& a, const Support& b) {
  return pairwise_convex_distance(p, Ladder(p), a, b);
}

}  // namespace vee
