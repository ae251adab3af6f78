#pragma once

#include <vector>

#include "vee/fp.hpp"

namespace vee {

// Representation of the chain 0 < 1 < ... < len-1 over F_p.
struct ChainRep {
  int p = 2;
  std::vector<int> dims;
  std::vector<Mat> maps;  // maps[i] : dims[i] -> dims[i+1]
  int length() const { return static_cast<int>(dims.size()); }
  void check() const;
};

struct Interval {
  int lo = 0, hi = 0;  // chain positions, inclusive
  bool operator==(const Interval&) const = default;
  auto operator<=>(const Interval&) const = default;
};
using ChainBarcode = std::vector<Interval>;

struct ChainMorphism {
  ChainRep src, dst;
  std::vector<Mat> at;  // at[i] : src.dims[i] -> dst.dims[i]
  bool commutes() const;
};

ChainRep rep_from_barcode(int length, const ChainBarcode& b, int p);
// Interval multiplicities from the rank function; sorted.
ChainBarcode barcode_of_rep(const ChainRep& r);

struct KerImCok {
  ChainRep ker, im, cok;
};
KerImCok kernel_image_cokernel(const ChainMorphism& f);

bool is_injective(const ChainMorphism& f);
bool is_surjective(const ChainMorphism& f);

enum class MatchMode { injection, surjection };

// match[k] = index into `to` of the bar matched with from[k], or -1.
// Injection: from = bars of the source, to = bars of the target, grouped by
// right endpoint. Surjection: from = bars of the source, to = bars of the
// target, grouped by left endpoint. Within a group bars go longest first;
// equal bars keep their input order.
std::vector<int> induced_matching(const ChainBarcode& from, const ChainBarcode& to, MatchMode mode);

// Decomposes both ends of f and returns the canonical matching between them.
struct InducedMatching {
  ChainBarcode source, target;
  std::vector<int> match;
};
InducedMatching induced_matching(const ChainMorphism& f, MatchMode mode);

}  // namespace vee
