#include "vee/chainrep.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace vee {

void ChainRep::check() const {
  check_prime(p);
  if (maps.size() + 1 != dims.size() && !(dims.empty() && maps.empty()))
    throw std::invalid_argument("chain rep needs one map per edge");
  for (size_t i = 0; i < maps.size(); ++i)
    if (maps[i].rows != dims[i + 1] || maps[i].cols != dims[i])
      throw std::invalid_argument("chain rep map has the wrong shape");
}

bool ChainMorphism::commutes() const {
  for (size_t i = 0; i + 1 < src.dims.size(); ++i)
    if (mul(dst.maps[i], at[i], src.p) != mul(at[i + 1], src.maps[i], src.p)) return false;
  return true;
}

ChainRep rep_from_barcode(int length, const ChainBarcode& b, int p) {
  ChainRep r;
  r.p = p;
  r.dims.assign(length, 0);
  // basis index of bar k at vertex i
  std::vector<std::vector<int>> slot(b.size(), std::vector<int>(length, -1));
  for (size_t k = 0; k < b.size(); ++k) {
    if (b[k].lo < 0 || b[k].hi >= length || b[k].lo > b[k].hi)
      throw std::invalid_argument("bar outside the chain");
    for (int i = b[k].lo; i <= b[k].hi; ++i) slot[k][i] = r.dims[i]++;
  }
  for (int i = 0; i + 1 < length; ++i) {
    Mat m(r.dims[i + 1], r.dims[i]);
    for (size_t k = 0; k < b.size(); ++k)
      if (slot[k][i] >= 0 && slot[k][i + 1] >= 0) m.at(slot[k][i + 1], slot[k][i]) = 1;
    r.maps.push_back(m);
  }
  return r;
}

ChainBarcode barcode_of_rep(const ChainRep& r) {
  const int n = r.length();
  // rk[i][j] = rank of the structure map i -> j
  std::vector<std::vector<int>> rk(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) {
    Mat acc = Mat::identity(r.dims[i]);
    rk[i][i] = r.dims[i];
    for (int j = i + 1; j < n; ++j) {
      acc = mul(r.maps[j - 1], acc, r.p);
      rk[i][j] = rank(acc, r.p);
    }
  }
  auto R = [&](int i, int j) { return (i < 0 || j >= n) ? 0 : rk[i][j]; };
  ChainBarcode out;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      int mult = R(i, j) - R(i - 1, j) - R(i, j + 1) + R(i - 1, j + 1);
      if (mult < 0) throw std::logic_error("negative interval multiplicity");
      for (int k = 0; k < mult; ++k) out.push_back({i, j});
    }
  return out;
}

KerImCok kernel_image_cokernel(const ChainMorphism& f) {
  f.src.check();
  f.dst.check();
  if (!f.commutes()) throw std::invalid_argument("morphism does not commute with the structure maps");
  const int n = f.src.length(), p = f.src.p;
  std::vector<Mat> kb(n), ib(n), comp(n);
  for (int i = 0; i < n; ++i) {
    kb[i] = nullspace(f.at[i], p);
    ib[i] = colspace(f.at[i], p);
    // complement of the image: unit vectors not in the span
    Mat cur = ib[i];
    Mat extra(f.dst.dims[i], 0);
    for (int e = 0; e < f.dst.dims[i]; ++e) {
      Mat u(f.dst.dims[i], 1);
      u.at(e, 0) = 1;
      Mat trial = hcat(cur, u);
      if (rank(trial, p) > cur.cols) {
        cur = trial;
        extra = hcat(extra, u);
      }
    }
    comp[i] = extra;
  }
  KerImCok out;
  for (auto* r : {&out.ker, &out.im, &out.cok}) r->p = p;
  for (int i = 0; i < n; ++i) {
    out.ker.dims.push_back(kb[i].cols);
    out.im.dims.push_back(ib[i].cols);
    out.cok.dims.push_back(comp[i].cols);
  }
  for (int i = 0; i + 1 < n; ++i) {
    auto k = solve(kb[i + 1], mul(f.src.maps[i], kb[i], p), p);
    auto m = solve(ib[i + 1], mul(f.dst.maps[i], ib[i], p), p);
    Mat basis = hcat(ib[i + 1], comp[i + 1]);
    auto c = solve(basis, mul(f.dst.maps[i], comp[i], p), p);
    if (!k || !m || !c) throw std::logic_error("induced map does not exist");
    out.ker.maps.push_back(*k);
    out.im.maps.push_back(*m);
    Mat cm(comp[i + 1].cols, comp[i].cols);
    for (int r = 0; r < cm.rows; ++r)
      for (int col = 0; col < cm.cols; ++col) cm.at(r, col) = c->at(ib[i + 1].cols + r, col);
    out.cok.maps.push_back(cm);
  }
  for (int i = 0; i < n; ++i)
    if (out.ker.dims[i] + out.im.dims[i] != f.src.dims[i] || out.im.dims[i] + out.cok.dims[i] != f.dst.dims[i])
      throw std::logic_error("kernel/image/cokernel dimensions do not add up");
  return out;
}

bool is_injective(const ChainMorphism& f) {
  for (size_t i = 0; i < f.at.size(); ++i)
    if (rank(f.at[i], f.src.p) != f.src.dims[i]) return false;
  return true;
}

bool is_surjective(const ChainMorphism& f) {
  for (size_t i = 0; i < f.at.size(); ++i)
    if (rank(f.at[i], f.src.p) != f.dst.dims[i]) return false;
  return true;
}

std::vector<int> induced_matching(const ChainBarcode& from, const ChainBarcode& to, MatchMode mode) {
  auto key = [&](const Interval& b) { return mode == MatchMode::injection ? b.hi : b.lo; };
  // longest first within a group, stable for equal bars
  auto order = [&](const ChainBarcode& bars) {
    std::map<int, std::vector<int>> groups;
    for (size_t k = 0; k < bars.size(); ++k) groups[key(bars[k])].push_back(static_cast<int>(k));
    for (auto& [_, g] : groups)
      std::stable_sort(g.begin(), g.end(), [&](int u, int v) {
        return bars[u].hi - bars[u].lo > bars[v].hi - bars[v].lo;
      });
    return groups;
  };
  auto gf = order(from), gt = order(to);
  std::vector<int> match(from.size(), -1);
  for (auto& [k, g] : gf) {
    auto it = gt.find(k);
    if (it == gt.end()) continue;
    for (size_t r = 0; r < g.size() && r < it->second.size(); ++r) match[g[r]] = it->second[r];
  }
  return match;
}

InducedMatching induced_matching(const ChainMorphism& f, MatchMode mode) {
  if (mode == MatchMode::injection && !is_injective(f)) throw std::invalid_argument("morphism is not injective");
  if (mode == MatchMode::surjection && !is_surjective(f)) throw std::invalid_argument("morphism is not surjective");
  InducedMatching m;
  m.source = barcode_of_rep(f.src);
  m.target = barcode_of_rep(f.dst);
  m.match = induced_matching(m.source, m.target, mode);
  return m;
}

}  // namespace vee
