#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vee/interleaving.hpp"

namespace vee {

struct Matching {
  int eps = 0;
  std::vector<std::pair<int, int>> pairs;  // (I index, M index), sorted
  std::vector<int> d2;                     // per pair
};

// Pairwise data for two barcodes at one poset.
struct PairTable {
  std::vector<int> wI, wM;
  std::vector<std::vector<int>> d2;  // d2[s][t]
  PairTable(const Poset& p, const Ladder& ladder, const Barcode& I, const Barcode& M);
};

// Maximum matching in a bipartite graph (Hopcroft-Karp). adj[u] lists right vertices.
// Returns match of each left vertex (-1 if free).
std::vector<int> hopcroft_karp(int nleft, int nright, const std::vector<std::vector<int>>& adj);

// Some matching covering all forced vertices on both sides, edges from `allowed`.
std::optional<std::vector<int>> forced_matching(int nleft, int nright, const std::vector<std::vector<int>>& allowed,
                                                const std::vector<char>& forced_left,
                                                const std::vector<char>& forced_right);

bool is_admissible(const PairTable& tab, const Matching& m, int eps, std::string* why = nullptr);

std::optional<Matching> epsilon_matching(const PairTable& tab, int eps);
std::optional<Matching> epsilon_matching(const Poset& p, const Barcode& I, const Barcode& M, int eps);

struct BottleneckResult {
  int eps = 0;
  Matching matching;
};
BottleneckResult bottleneck(const PairTable& tab);
int bottleneck_distance(const Poset& p, const Barcode& I, const Barcode& M);

struct HallViolation {
  std::vector<int> witness;  // S0 with |union x(s)| < |S0|
};

// Injection F with F(s) in x(s) by the minimal-tight-set recursion.
// Elements are 0..x.size()-1; targets are arbitrary ints. Throws HallViolation.
std::vector<int> half_matching(const std::vector<std::vector<int>>& x);

// Block-diagonal interleaving supported on the matched pairs.
std::pair<ScalarMorphism, ScalarMorphism> diagonal_interleaving_from_matching(const Poset& p, const Ladder& ladder,
                                                                             const Barcode& I, const Barcode& M,
                                                                             const Matching& m);

// Matching induced by a verified (L,L)-interleaving, L maximal of its height.
Matching induced_matching_from_interleaving(const Poset& p, const Ladder& ladder, const Barcode& I, const Barcode& M,
                                            const ScalarMorphism& phi, const ScalarMorphism& psi,
                                            const Translation& L, int field);

}  // namespace vee
