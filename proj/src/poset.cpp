#include "vee/poset.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <stdexcept>

namespace vee {

Poset Poset::from_covers(int n, std::vector<std::pair<Vertex, Vertex>> covers) {
  if (n <= 0) throw std::invalid_argument("poset needs at least one element");
  Poset p;
  p.n_ = n;
  p.leq_.assign(n * n, 0);
  for (auto [x, y] : covers) {
    if (x < 0 || y < 0 || x >= n || y >= n || x == y)
      throw std::invalid_argument("bad cover pair");
    p.leq_[x * n + y] = 1;
  }
  for (int v = 0; v < n; ++v) p.leq_[v * n + v] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (p.leq_[i * n + k])
        for (int j = 0; j < n; ++j)
          if (p.leq_[k * n + j]) p.leq_[i * n + j] = 1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && p.leq_[i * n + j] && p.leq_[j * n + i])
        throw std::invalid_argument("cover relation has a cycle");
  // transitive reduction check: no cover implied by a 2-path
  for (auto [x, y] : covers)
    for (int z = 0; z < n; ++z)
      if (z != x && z != y && p.leq_[x * n + z] && p.leq_[z * n + y])
        throw std::invalid_argument("cover relation is not transitively reduced");
  std::sort(covers.begin(), covers.end());
  covers.erase(std::unique(covers.begin(), covers.end()), covers.end());
  p.covers_ = std::move(covers);
  p.cover_w_.assign(p.covers_.size(), 1);
  return p;
}

std::vector<Vertex> Poset::maximal_core() const {
  std::vector<Vertex> out;
  for (int x = 0; x < core_size(); ++x) {
    bool top = true;
    for (int y = 0; y < core_size() && top; ++y)
      if (lt(x, y)) top = false;
    if (top) out.push_back(x);
  }
  return out;
}

std::vector<Vertex> Poset::minimal_core() const {
  std::vector<Vertex> out;
  for (int x = 0; x < core_size(); ++x) {
    bool bot = true;
    for (int y = 0; y < core_size() && bot; ++y)
      if (lt(y, x)) bot = false;
    if (bot) out.push_back(x);
  }
  return out;
}

Poset Poset::suspend(Weight w) const {
  if (suspended_) throw std::logic_error("poset already suspended");
  if (w.a < 1 || w.b < 1) throw std::invalid_argument("weights must be positive");
  auto covers = covers_;
  Vertex top = n_;
  for (Vertex x : maximal_core()) covers.emplace_back(x, top);
  Poset q = from_covers(n_ + 1, covers);
  q.suspended_ = true;
  q.w_ = w;
  const int n = q.n_;
  for (size_t e = 0; e < q.covers_.size(); ++e)
    q.cover_w_[e] = q.covers_[e].second == top ? w.b : w.a;
  const int big = INT_MAX / 4;
  q.dist_.assign(n * n, big);
  for (int v = 0; v < n; ++v) q.dist_[v * n + v] = 0;
  for (size_t e = 0; e < q.covers_.size(); ++e) {
    auto [x, y] = q.covers_[e];
    int c = q.cover_w_[e];
    q.dist_[x * n + y] = std::min(q.dist_[x * n + y], c);
    q.dist_[y * n + x] = std::min(q.dist_[y * n + x], c);
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        q.dist_[i * n + j] = std::min(q.dist_[i * n + j], q.dist_[i * n + k] + q.dist_[k * n + j]);
  if (shape_) q.attach_shape(*shape_);
  return q;
}

int Poset::distance(Vertex x, Vertex y) const {
  if (!suspended_) throw std::logic_error("distance needs a suspended poset");
  return dist_[x * n_ + y];
}

const NVeeShape& Poset::nvee() const {
  if (!shape_) throw std::logic_error("poset is not an n-Vee");
  return *shape_;
}

void Poset::attach_shape(NVeeShape s) {
  branch_of_.assign(n_, -1);
  level_.assign(n_, 0);
  for (size_t i = 0; i < s.branches.size(); ++i)
    for (size_t k = 0; k < s.branches[i].size(); ++k) {
      branch_of_[s.branches[i][k]] = static_cast<int>(i);
      level_[s.branches[i][k]] = static_cast<int>(k) + 1;
    }
  shape_ = std::move(s);
}

int Poset::branch_of(Vertex v) const { return branch_of_.empty() ? -1 : branch_of_[v]; }
int Poset::level(Vertex v) const { return level_.empty() ? 0 : level_[v]; }

static void finish_shape(NVeeShape& s) {
  s.branch_lengths.clear();
  for (auto& b : s.branches) s.branch_lengths.push_back(static_cast<int>(b.size()));
  s.i0 = -1;
  s.asymmetric = false;
  int best = -1, count = 0;
  for (size_t i = 0; i < s.branch_lengths.size(); ++i) {
    if (s.branch_lengths[i] > best) {
      best = s.branch_lengths[i];
      count = 1;
      s.i0 = static_cast<int>(i);
    } else if (s.branch_lengths[i] == best) {
      ++count;
    }
  }
  s.asymmetric = count == 1;
  if (!s.asymmetric) s.i0 = -1;
}

Poset build_nvee(const std::vector<int>& branch_lengths, Weight w) {
  if (branch_lengths.empty()) throw std::invalid_argument("n-Vee needs at least one branch");
  if (w.a < 1 || w.b < 1) throw std::invalid_argument("weights must be positive");
  NVeeShape s;
  std::vector<std::pair<Vertex, Vertex>> covers;
  int idx = 1;
  for (int len : branch_lengths) {
    if (len < 1) throw std::invalid_argument("branch lengths must be positive");
    std::vector<Vertex> br;
    Vertex prev = 0;
    for (int k = 0; k < len; ++k) {
      covers.emplace_back(prev, idx);
      br.push_back(idx);
      prev = idx++;
    }
    s.branches.push_back(std::move(br));
  }
  finish_shape(s);
  Poset core = Poset::from_covers(idx, covers);
  core.attach_shape(s);
  return core.suspend(w);
}

VeeCheck validate_nvee(const Poset& p) {
  VeeCheck r;
  const int n = p.core_size();
  auto mins = p.minimal_core();
  if (mins.size() != 1) {
    r.failed_condition = 1;
    r.reason = "no unique minimal element";
    return r;
  }
  Vertex m = mins[0];
  r.shape.m = m;
  std::vector<int> seen(n, -1);
  auto maxs = p.maximal_core();
  if (n == 1) maxs.clear();
  for (size_t i = 0; i < maxs.size(); ++i) {
    Vertex top = maxs[i];
    std::vector<Vertex> chain;
    for (int v = 0; v < n; ++v)
      if (v != m && p.leq(m, v) && p.leq(v, top)) chain.push_back(v);
    for (Vertex u : chain)
      for (Vertex v : chain)
        if (!p.leq(u, v) && !p.leq(v, u)) {
          r.failed_condition = 2;
          r.reason = "interval [m," + std::to_string(top) + "] is not totally ordered";
          return r;
        }
    std::sort(chain.begin(), chain.end(), [&](Vertex u, Vertex v) { return p.lt(u, v); });
    for (Vertex v : chain) {
      if (seen[v] >= 0) {
        r.failed_condition = 3;
        r.reason = "maximal intervals meet outside m";
        return r;
      }
      seen[v] = static_cast<int>(i);
    }
    r.shape.branches.push_back(chain);
  }
  finish_shape(r.shape);
  r.ok = true;
  return r;
}

std::vector<Vertex> fixed_points(const Poset& p, int cap) {
  if (p.is_suspended()) throw std::invalid_argument("fixed_points expects an unsuspended poset");
  const int n = p.size();
  if (n > cap) throw std::length_error("poset too large for brute force");
  std::vector<char> moved(n, 0);
  std::vector<Vertex> img(n);
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      for (int v = 0; v < n; ++v)
        if (img[v] != v) moved[v] = 1;
      return;
    }
    for (Vertex y = 0; y < n; ++y) {
      if (!p.leq(i, y)) continue;
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
  std::vector<Vertex> out;
  for (int v = 0; v < n; ++v)
    if (!moved[v]) out.push_back(v);
  return out;
}

std::string vertex_name(const Poset& p, Vertex v) {
  if (v == p.inf()) return "inf";
  if (!p.shape()) return std::to_string(v);
  int b = p.branch_of(v);
  if (b < 0) return "m";
  static const char* letters[] = {"x", "y", "z"};
  std::string base = b < 3 ? letters[b] : "b" + std::to_string(b + 1) + "_";
  return base + std::to_string(p.level(v));
}

}  // namespace vee
