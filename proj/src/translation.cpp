#include "vee/translation.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace vee {

Translation identity_translation(const Poset& p) {
  Translation t(p.size());
  for (int v = 0; v < p.size(); ++v) t[v] = v;
  return t;
}

Translation all_to_inf(const Poset& p) { return Translation(p.size(), p.inf()); }

bool is_translation(const Poset& p, const Translation& t) {
  if (static_cast<int>(t.size()) != p.size()) return false;
  for (int x = 0; x < p.size(); ++x) {
    if (t[x] < 0 || t[x] >= p.size() || !p.leq(x, t[x])) return false;
    for (int y = 0; y < p.size(); ++y)
      if (p.leq(x, y) && !p.leq(t[x], t[y])) return false;
  }
  return !p.is_suspended() || t[p.inf()] == p.inf();
}

int height(const Poset& p, const Translation& t) {
  int h = 0;
  for (int x = 0; x < p.size(); ++x) h = std::max(h, p.distance(x, t[x]));
  return h;
}

Translation compose(const Translation& s, const Translation& t) {
  Translation r(t.size());
  for (size_t x = 0; x < t.size(); ++x) r[x] = s[t[x]];
  return r;
}

Translation power(const Translation& t, int k) {
  Translation r(t.size());
  for (size_t x = 0; x < t.size(); ++x) r[x] = static_cast<Vertex>(x);
  for (int i = 0; i < k; ++i) r = compose(t, r);
  return r;
}

bool pointwise_leq(const Poset& p, const Translation& s, const Translation& t) {
  for (int x = 0; x < p.size(); ++x)
    if (!p.leq(s[x], t[x])) return false;
  return true;
}

std::vector<Translation> enumerate_translations(const Poset& p, int cap) {
  if (!p.is_suspended()) throw std::invalid_argument("translations live on a suspended poset");
  if (p.size() > cap) throw std::length_error("poset too large to enumerate translations");
  const int n = p.size();
  std::vector<Translation> out;
  Translation img(n);
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      out.push_back(img);
      return;
    }
    for (Vertex y = 0; y < n; ++y) {
      if (!p.leq(i, y)) continue;
      if (i == p.inf() && y != i) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) {
        if (p.leq(j, i) && !p.leq(img[j], y)) ok = false;
        if (p.leq(i, j) && !p.leq(y, img[j])) ok = false;
      }
      if (ok) {
        img[i] = y;
        rec(i + 1);
      }
    }
  };
  rec(0);
  return out;
}

std::vector<int> candidate_thresholds(const Poset& p) {
  std::vector<int> c;
  for (int x = 0; x < p.size(); ++x)
    for (int y = 0; y < p.size(); ++y)
      if (p.leq(x, y)) c.push_back(p.distance(x, y));
  std::sort(c.begin(), c.end());
  c.erase(std::unique(c.begin(), c.end()), c.end());
  return c;
}

namespace {

// Greatest monotone choice g on the chain c_0 < ... < c_k (then inf) with
// g(c_j) >= c_j and d(c_j, g(c_j)) <= eps. Processes top-down.
std::vector<Vertex> push_chain(const Poset& p, const std::vector<Vertex>& chain, int eps) {
  std::vector<Vertex> g(chain.size());
  const int k = static_cast<int>(chain.size());
  Vertex cap = p.inf();
  for (int j = k - 1; j >= 0; --j) {
    Vertex best = chain[j];
    if (cap == p.inf() && p.distance(chain[j], p.inf()) <= eps) {
      best = p.inf();
    } else {
      for (int l = k - 1; l > j; --l) {
        if (!p.leq(chain[l], cap)) continue;
        if (p.distance(chain[j], chain[l]) <= eps) {
          best = chain[l];
          break;
        }
      }
    }
    g[j] = best;
    cap = best;
  }
  return g;
}

struct Cases {
  bool all_inf = false;
  std::vector<int> movers;  // branches into which m can move
};

Cases analyse(const Poset& p, int eps) {
  const auto& s = p.nvee();
  Cases c;
  c.all_inf = true;
  for (int x = 0; x < p.core_size(); ++x)
    if (p.distance(x, p.inf()) > eps) c.all_inf = false;
  if (c.all_inf) return c;
  for (size_t i = 0; i < s.branches.size(); ++i) {
    bool others = true;
    for (size_t j = 0; j < s.branches.size() && others; ++j)
      if (j != i)
        for (Vertex x : s.branches[j])
          if (p.distance(x, p.inf()) > eps) others = false;
    if (!others) continue;
    std::vector<Vertex> chain{s.m};
    chain.insert(chain.end(), s.branches[i].begin(), s.branches[i].end());
    if (push_chain(p, chain, eps)[0] != s.m) c.movers.push_back(static_cast<int>(i));
  }
  return c;
}

}  // namespace

Translation maximal_translation(const Poset& p, int eps) {
  if (eps < 0) throw std::invalid_argument("eps must be nonnegative");
  const auto& s = p.nvee();
  Cases c = analyse(p, eps);
  if (c.all_inf) return all_to_inf(p);
  Translation t = identity_translation(p);
  if (c.movers.size() == 1) {
    int i = c.movers[0];
    for (size_t j = 0; j < s.branches.size(); ++j)
      if (static_cast<int>(j) != i)
        for (Vertex x : s.branches[j]) t[x] = p.inf();
    std::vector<Vertex> chain{s.m};
    chain.insert(chain.end(), s.branches[i].begin(), s.branches[i].end());
    auto g = push_chain(p, chain, eps);
    for (size_t k = 0; k < chain.size(); ++k) t[chain[k]] = g[k];
    return t;
  }
  // m fixed; with several competing branches this is the m-fixing candidate
  for (const auto& br : s.branches) {
    auto g = push_chain(p, br, eps);
    for (size_t k = 0; k < br.size(); ++k) t[br[k]] = g[k];
  }
  return t;
}

bool maximal_is_unique(const Poset& p, int eps) {
  Cases c = analyse(p, eps);
  return c.all_inf || c.movers.size() <= 1;
}

std::vector<int> height_spectrum(const Poset& p) {
  std::vector<int> h;
  for (int c : candidate_thresholds(p)) h.push_back(height(p, maximal_translation(p, c)));
  std::sort(h.begin(), h.end());
  h.erase(std::unique(h.begin(), h.end()), h.end());
  return h;
}

Ladder::Ladder(const Poset& p) : eps(candidate_thresholds(p)) {
  for (int e : eps) {
    lam.push_back(maximal_translation(p, e));
    lam2.push_back(compose(lam.back(), lam.back()));
  }
}

int Ladder::index_at(int e) const {
  int k = -1;
  for (size_t i = 0; i < eps.size(); ++i)
    if (eps[i] <= e) k = static_cast<int>(i);
  return k;
}

}  // namespace vee
