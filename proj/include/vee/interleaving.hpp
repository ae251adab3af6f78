#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vee/convex.hpp"
#include "vee/translation.hpp"

namespace vee {

// Scalars against the canonical-hom pattern: entry(s,t) multiplies
// Phi_{source_s, target_t L}. Entries where that Hom vanishes must stay 0.
struct ScalarMorphism {
  int rows = 0, cols = 0;  // rows: source bars, cols: target bars
  std::vector<int> e;
  ScalarMorphism() = default;
  ScalarMorphism(int r, int c) : rows(r), cols(c), e(static_cast<size_t>(r) * c, 0) {}
  int& at(int s, int t) { return e[static_cast<size_t>(s) * cols + t]; }
  int at(int s, int t) const { return e[static_cast<size_t>(s) * cols + t]; }
};

struct Var {
  bool lam = true;  // lam[s,t] : I_s -> M_t L ; mu[t,s] : M_t -> I_s G
  int s = 0, t = 0;
  std::string name() const;
};

struct Monomial {
  int lam = 0, mu = 0;  // variable indices
  auto operator<=>(const Monomial&) const = default;
};

struct Provenance {
  char triangle = 'I';  // 'I': [psi L][phi] = I(p <= GLp), 'M': [phi G][psi] = M(p <= LGp)
  Vertex at = 0;
  int row = 0, col = 0;  // (s,s') or (t,t')
};

struct Equation {
  std::vector<Monomial> terms;  // sorted
  int rhs = 0;
  std::vector<Provenance> from;
};

struct InterleavingSystem {
  int nI = 0, nM = 0;
  Translation L, G;
  Barcode I, M, IG, ML;  // bars and their translates
  std::vector<Var> vars;
  std::vector<int> lam_index;  // s*nM+t -> var or -1
  std::vector<int> mu_index;   // t*nI+s -> var or -1
  std::vector<Equation> eqs;
  int lam_var(int s, int t) const { return lam_index[static_cast<size_t>(s) * nM + t]; }
  int mu_var(int t, int s) const { return mu_index[static_cast<size_t>(t) * nI + s]; }
  std::string to_text(const Poset& p) const;
  std::string to_json(const Poset& p) const;
};

InterleavingSystem build_system(const Poset& p, const Barcode& I, const Barcode& M, const Translation& L,
                                const Translation& G);

// Evaluates both triangles with explicit per-vertex matrices.
bool check_interleaving(const Poset& p, const Barcode& I, const Barcode& M, const ScalarMorphism& phi,
                        const ScalarMorphism& psi, const Translation& L, const Translation& G, int field);

struct SolveOptions {
  int field = 2;
  bool count = false;
  int cap = 40;  // max branching variables per independent block
  std::uint64_t seed = 1;
  long random_tries = 20000;
};

struct SolveResult {
  bool nonempty = false;
  bool exhaustive = true;  // false if some block fell back to random search and found nothing
  std::vector<int> witness;  // value per variable
  std::optional<std::uint64_t> count;
};

SolveResult solve_over_field(const InterleavingSystem& sys, const SolveOptions& opt);

ScalarMorphism phi_of(const InterleavingSystem& sys, const std::vector<int>& values);
ScalarMorphism psi_of(const InterleavingSystem& sys, const std::vector<int>& values);

// Per-bar widths with the poset's ladder.
std::vector<int> widths(const Poset& p, const Ladder& ladder, const Barcode& b);

struct DistanceResult {
  int eps = 0;
  int index = 0;  // ladder index
  bool zero_shortcut = false;
  ScalarMorphism phi, psi;  // witness at eps
  bool exhaustive = true;
};

DistanceResult interleaving_distance_ex(const Poset& p, const Ladder& ladder, const Barcode& I, const Barcode& M,
                                        int field, const SolveOptions& base = {});
// Least eps certified over any of the fields.
int interleaving_distance(const Poset& p, const Ladder& ladder, const Barcode& I, const Barcode& M,
                          const std::vector<int>& fields);
int interleaving_distance(const Poset& p, const Barcode& I, const Barcode& M, const std::vector<int>& fields = {2});

// Combinatorial distance between single bars.
int pairwise_convex_distance(const Poset& p, const Ladder& ladder, const Support& a, const Support& b);
int pairwise_convex_distance(const Poset& p, const Support& a, const Support& b);

}  // namespace vee
