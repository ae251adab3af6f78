#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vee/matching.hpp"

namespace vee {

struct Instance {
  std::vector<int> branches;
  Weight weight;
  Barcode I, M;
  std::uint64_t seed = 0;
  std::vector<int> fields{2, 3};
};

struct ShapeBounds {
  int max_branches = 3;
  int max_length = 4;
  int max_bars = 5;
  std::vector<int> fixed_shape;  // used verbatim when nonempty
  std::vector<Weight> weights{{1, 1}, {1, 2}, {2, 1}, {2, 3}};
};

Instance random_instance(std::uint64_t seed, const ShapeBounds& bounds);

struct Report {
  std::uint64_t seed = 0;
  std::vector<int> branches;
  Weight weight;
  std::vector<int> fields;
  std::vector<int> D;  // per field
  int DB = 0;
  Matching matching;
  bool matching_ok = false;
  bool witnesses_ok = false;
  bool exhaustive = true;
  bool pass = false;
  std::string note;
  double millis = 0;
  std::string to_json(bool timing = false) const;
};

Report verify_isometry(const Instance& inst);
Report verify_isometry(const Poset& p, const Ladder& ladder, const Instance& inst);

struct SuiteResult {
  std::string name;
  bool ran = true;
  bool pass = true;
  std::string detail;
};

std::vector<SuiteResult> run_lemma_suites(const Poset& p, int translation_cap = 10);

// Individual suites, shared with the test binaries.
SuiteResult suite_maximal_translation(const Poset& p, const std::vector<Translation>& all);
SuiteResult suite_width_forms(const Poset& p, const std::vector<Translation>& all);
SuiteResult suite_width_vs_distance(const Poset& p, const std::vector<int>& fields);

// Widths of the bars of ker(phi) and cok(phi), phi restricted to the chain of a 1-Vee.
std::vector<int> kernel_cokernel_widths(const Poset& p, const Barcode& I, const Barcode& M, const ScalarMorphism& phi,
                                        const Translation& L, int field);

// Brute-force width forms.
int width_w1(const Poset& p, const std::vector<Translation>& all, const Support& s);
// For each element of all: min over pairs (i, j) with all[i] all[j] equal to it of max(h(i), h(j)); -1 if none.
std::vector<int> composite_heights(const Poset& p, const std::vector<Translation>& all);
int width_w1(const Poset& p, const std::vector<Translation>& all, const std::vector<int>& comp, const Support& s);
int width_w2(const Poset& p, const std::vector<Translation>& all, const Support& s);

}  // namespace vee
