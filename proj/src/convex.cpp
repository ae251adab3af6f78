#include "vee/convex.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace vee {

bool contains(const Support& s, Vertex v) { return std::binary_search(s.begin(), s.end(), v); }

Support intersect(const Support& a, const Support& b) {
  Support r;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

namespace {

// Components of s under the unoriented Hasse relation of the core.
std::vector<Support> components(const Poset& p, const Support& s) {
  std::vector<Support> out;
  std::vector<char> seen(p.size(), 0);
  for (Vertex start : s) {
    if (seen[start]) continue;
    Support comp;
    std::vector<Vertex> stack{start};
    seen[start] = 1;
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (auto [x, y] : p.covers()) {
        Vertex w = x == u ? y : (y == u ? x : -1);
        if (w >= 0 && w != p.inf() && !seen[w] && contains(s, w)) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool closure_ok(const Poset& p, const Support& comp, const Support& i, const Support& m) {
  for (Vertex x : comp) {
    for (Vertex y : m)
      if (p.leq(x, y) && !contains(i, y)) return false;
    for (Vertex y : i)
      if (p.leq(y, x) && !contains(m, y)) return false;
  }
  return true;
}

std::vector<Vertex> maxima(const Poset& p, const Support& s) {
  std::vector<Vertex> out;
  for (Vertex x : s) {
    bool top = true;
    for (Vertex y : s)
      if (p.lt(x, y)) top = false;
    if (top) out.push_back(x);
  }
  return out;
}

Support normalize(std::vector<Vertex> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

bool is_convex_support(const Poset& p, const Support& s) {
  if (s.empty()) return false;
  for (Vertex v : s)
    if (v < 0 || v >= p.core_size()) return false;
  for (Vertex s1 : s)
    for (Vertex s2 : s)
      if (p.leq(s1, s2))
        for (Vertex q = 0; q < p.core_size(); ++q)
          if (p.leq(s1, q) && p.leq(q, s2) && !contains(s, q)) return false;
  return components(p, s).size() == 1;
}

std::vector<Support> enumerate_sigma(const Poset& p, int cap) {
  const int n = p.core_size();
  if (n > cap) throw std::length_error("poset too large to enumerate convex supports");
  std::vector<Support> out;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    Support s;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1u) s.push_back(v);
    if (is_convex_support(p, s)) out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Barcode act(const Poset& p, const Support& m, const Translation& t) {
  Support pre;
  for (Vertex v = 0; v < p.core_size(); ++v)
    if (contains(m, t[v])) pre.push_back(v);
  return components(p, pre);
}

Support act_nvee(const Poset& p, const Support& m, const Translation& t) {
  Support pre;
  for (Vertex v = 0; v < p.core_size(); ++v)
    if (contains(m, t[v])) pre.push_back(v);
  return pre;
}

int hom_dim(const Poset& p, const Support& i, const Support& m) {
  int d = 0;
  for (const auto& c : components(p, intersect(i, m)))
    if (closure_ok(p, c, i, m)) ++d;
  return d;
}

bool hom_nonzero(const Poset& p, const Support& i, const Support& m) {
  if (i.empty() || m.empty()) return false;
  return hom_dim(p, i, m) > 0;
}

CanonicalHom canonical_hom(const Poset& p, const Support& i, const Support& m) {
  CanonicalHom h{i, m, false, {}};
  for (const auto& c : components(p, intersect(i, m)))
    if (closure_ok(p, c, i, m)) {
      h.nonzero = true;
      h.support = c;
      break;
    }
  return h;
}

Composite compose_canonical(const Poset& p, const CanonicalHom& f, const CanonicalHom& g) {
  if (f.target != g.source) throw std::invalid_argument("compose_canonical: endpoints do not match");
  Composite r;
  r.hom = canonical_hom(p, f.source, g.target);
  if (!r.hom.nonzero || !f.nonzero || !g.nonzero) return r;
  Vertex probe = r.hom.support.front();
  for (Vertex v : r.hom.support)
    if (p.lt(v, probe)) probe = v;
  r.c = contains(f.support, probe) && contains(g.support, probe) ? 1 : 0;
  return r;
}

Vertex min_element(const Poset& p, const Support& s) {
  for (Vertex x : s) {
    bool bot = true;
    for (Vertex y : s)
      if (!p.leq(x, y)) bot = false;
    if (bot) return x;
  }
  throw std::invalid_argument("support has no minimum");
}

Barcode trim_plus(const Poset& p, const Support& m, const Translation& g) {
  if (m.empty()) return {};
  Vertex a = g[min_element(p, m)];
  if (a == p.inf()) return {};
  Support s;
  for (Vertex b : maxima(p, m))
    for (Vertex v : m)
      if (p.leq(a, v) && p.leq(v, b)) s.push_back(v);
  s = normalize(s);
  if (s.empty()) return {};
  return {s};
}

Barcode trim_minus(const Poset& p, const Support& m, const Translation& g) {
  if (m.empty()) return {};
  Vertex x = min_element(p, m);
  Support s;
  for (Vertex top : maxima(p, m)) {
    Vertex best = -1;
    for (Vertex y : m)
      if (p.leq(x, y) && p.leq(y, top) && p.leq(g[y], top) && (best < 0 || p.lt(best, y))) best = y;
    if (best < 0) continue;
    for (Vertex v : m)
      if (p.leq(x, v) && p.leq(v, best)) s.push_back(v);
  }
  s = normalize(s);
  if (s.empty()) return {};
  return {s};
}

Barcode trim_plus(const Poset& p, const Barcode& b, const Translation& g) {
  Barcode out;
  for (const auto& s : b)
    for (auto& r : trim_plus(p, s, g)) out.push_back(r);
  return out;
}

Barcode trim_minus(const Poset& p, const Barcode& b, const Translation& g) {
  Barcode out;
  for (const auto& s : b)
    for (auto& r : trim_minus(p, s, g)) out.push_back(r);
  return out;
}

int width(const Poset& p, const Ladder& ladder, const Support& m) {
  for (size_t k = 0; k < ladder.eps.size(); ++k)
    if (!hom_nonzero(p, m, act_nvee(p, m, ladder.lam2[k]))) return ladder.eps[k];
  throw std::logic_error("width: no threshold annihilates the module");
}

int width(const Poset& p, const Support& m) { return width(p, Ladder(p), m); }

Support branch_restrict(const Poset& p, const Support& m, int j) {
  const auto& s = p.nvee();
  Support r;
  for (Vertex v : m)
    if (v == s.m || p.branch_of(v) == j) r.push_back(v);
  return r;
}

std::vector<std::pair<Support, int>> collapse(Barcode b) {
  std::sort(b.begin(), b.end());
  std::vector<std::pair<Support, int>> out;
  for (auto& s : b) {
    if (!out.empty() && out.back().first == s)
      ++out.back().second;
    else
      out.emplace_back(s, 1);
  }
  return out;
}

}  // namespace vee
