#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "vee/poset.hpp"
#include "vee/translation.hpp"

namespace vee {

// A convex module is determined by its support: sorted vertices of P (never inf).
using Support = std::vector<Vertex>;

// Bar occurrences; repeated supports encode multiplicity.
using Barcode = std::vector<Support>;

struct CanonicalHom {
  Support source, target;
  bool nonzero = false;
  Support support;  // Supp(source) meet Supp(target) when nonzero
};

bool is_convex_support(const Poset& p, const Support& s);
std::vector<Support> enumerate_sigma(const Poset& p, int cap = 16);

// Connected components of L^{-1}(Supp m) within P.
Barcode act(const Poset& p, const Support& m, const Translation& t);
// Single-component form for n-Vees; empty support means the zero module.
Support act_nvee(const Poset& p, const Support& m, const Translation& t);

bool contains(const Support& s, Vertex v);
Support intersect(const Support& a, const Support& b);

// Number of components of the intersection satisfying the two closure conditions.
int hom_dim(const Poset& p, const Support& i, const Support& m);
bool hom_nonzero(const Poset& p, const Support& i, const Support& m);
CanonicalHom canonical_hom(const Poset& p, const Support& i, const Support& m);

// Composite g o f as c * Phi_{f.source, g.target}; c in {0,1}.
struct Composite {
  CanonicalHom hom;
  int c = 0;
};
Composite compose_canonical(const Poset& p, const CanonicalHom& f, const CanonicalHom& g);

Barcode trim_plus(const Poset& p, const Support& m, const Translation& g);
Barcode trim_minus(const Poset& p, const Support& m, const Translation& g);
Barcode trim_plus(const Poset& p, const Barcode& b, const Translation& g);
Barcode trim_minus(const Poset& p, const Barcode& b, const Translation& g);

// Least candidate threshold with Hom(m, m L_eps^2) = 0.
int width(const Poset& p, const Ladder& ladder, const Support& m);
int width(const Poset& p, const Support& m);

// Support meet [m, M_j]; empty when zero.
Support branch_restrict(const Poset& p, const Support& m, int j);

// Unique minimal element of a support on an n-Vee.
Vertex min_element(const Poset& p, const Support& s);

// Canonical barcode form: sorted list of (support, multiplicity).
std::vector<std::pair<Support, int>> collapse(Barcode b);

}  // namespace vee
