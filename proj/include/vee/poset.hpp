#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace vee {

using Vertex = int;

struct Weight {
  int a = 1;
  int b = 1;
  bool operator==(const Weight&) const = default;
};

// Branch structure of an n-Vee. branches[i] lists the vertices of (m, M_i]
// bottom to top.
struct NVeeShape {
  Vertex m = 0;
  std::vector<int> branch_lengths;
  std::vector<std::vector<Vertex>> branches;
  int i0 = -1;  // strictly longest branch, -1 if none
  bool asymmetric = false;
};

class Poset {
 public:
  Poset() = default;

  // Unsuspended poset on 0..n-1 from cover pairs (x covered by y).
  static Poset from_covers(int n, std::vector<std::pair<Vertex, Vertex>> covers);

  // Adds a top element inf (last index) and the democratic weights.
  Poset suspend(Weight w) const;

  int size() const { return n_; }
  bool is_suspended() const { return suspended_; }
  Vertex inf() const { return suspended_ ? n_ - 1 : -1; }
  int core_size() const { return suspended_ ? n_ - 1 : n_; }
  Weight weight() const { return w_; }

  bool leq(Vertex x, Vertex y) const { return leq_[x * n_ + y]; }
  bool lt(Vertex x, Vertex y) const { return x != y && leq(x, y); }
  const std::vector<std::pair<Vertex, Vertex>>& covers() const { return covers_; }
  // weight of each cover edge, parallel to covers()
  const std::vector<int>& cover_weights() const { return cover_w_; }
  std::vector<Vertex> maximal_core() const;
  std::vector<Vertex> minimal_core() const;

  int distance(Vertex x, Vertex y) const;
  const std::optional<NVeeShape>& shape() const { return shape_; }
  const NVeeShape& nvee() const;

  // -1 for m (and inf), else branch index
  int branch_of(Vertex v) const;
  // position on its branch: m -> 0, k-th element of a branch -> k
  int level(Vertex v) const;

  void attach_shape(NVeeShape s);

 private:
  int n_ = 0;
  bool suspended_ = false;
  Weight w_{};
  std::vector<std::pair<Vertex, Vertex>> covers_;
  std::vector<int> cover_w_;
  std::vector<char> leq_;
  std::vector<int> dist_;
  std::optional<NVeeShape> shape_;
  std::vector<int> branch_of_, level_;
};

Poset build_nvee(const std::vector<int>& branch_lengths, Weight w);

struct VeeCheck {
  bool ok = false;
  int failed_condition = 0;  // 1..3 when rejected
  std::string reason;
  NVeeShape shape;
};

// Checks conditions (1)-(3): unique minimum, chains [m,M_i], pairwise meeting in m.
VeeCheck validate_nvee(const Poset& p);

// Points fixed by every inflationary monotone self-map of an unsuspended poset.
// Throws std::length_error above the cap.
std::vector<Vertex> fixed_points(const Poset& p, int cap = 9);

// Vertex names: m, x1.. for branch 0, y1.. for branch 1, z1.., then b3_1 ...
std::string vertex_name(const Poset& p, Vertex v);

}  // namespace vee
