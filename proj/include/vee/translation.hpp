#pragma once

#include <vector>

#include "vee/poset.hpp"

namespace vee {

// Image of each vertex of P+, indexed canonically.
using Translation = std::vector<Vertex>;

Translation identity_translation(const Poset& p);
Translation all_to_inf(const Poset& p);

bool is_translation(const Poset& p, const Translation& t);
int height(const Poset& p, const Translation& t);
// compose(s,t)[x] = s[t[x]]
Translation compose(const Translation& s, const Translation& t);
Translation power(const Translation& t, int k);
bool pointwise_leq(const Poset& p, const Translation& s, const Translation& t);

// Every monotone inflationary self-map of P+ fixing inf. Throws std::length_error above cap.
std::vector<Translation> enumerate_translations(const Poset& p, int cap = 10);

// All d(x,y) with x <= y in P+, sorted, distinct.
std::vector<int> candidate_thresholds(const Poset& p);

// Maximal translation of height <= eps on an n-Vee (direct construction).
Translation maximal_translation(const Poset& p, int eps);

// True when the translations of height <= eps have a single maximal element.
// For n-Vees this is decided by the same case analysis (no enumeration).
bool maximal_is_unique(const Poset& p, int eps);

std::vector<int> height_spectrum(const Poset& p);

// Candidate thresholds with the corresponding Lambda_eps, cached per poset.
struct Ladder {
  std::vector<int> eps;
  std::vector<Translation> lam;
  std::vector<Translation> lam2;  // Lambda_eps squared
  explicit Ladder(const Poset& p);
  // index of the largest threshold <= e
  int index_at(int e) const;
};

}  // namespace vee
