#pragma once

#include <ostream>
#include <string>

#include "vee/convex.hpp"

namespace vee {

// Worked examples rebuilt from their stated supports.
struct ExFour {
  Poset p;
  Barcode X, YZ;  // X vs Y+Z, supported on the y branch
  Barcode AB, CD; // bars through m
};
ExFour make_ex4(Weight w = {1, 2});

struct ExNew {
  Poset p;  // 1-Vee of length 3, a < b
  Support A, B, C;
};
ExNew make_exnew(Weight w = {1, 2});

// Prints the reproduction and diffs it against the embedded fixtures. True on match.
bool reproduce_ex4(std::ostream& out);
bool reproduce_exnew(std::ostream& out);

}  // namespace vee
