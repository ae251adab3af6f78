#pragma once

#include <optional>
#include <string>
#include <vector>

namespace vee {

// Dense matrix over F_p, row-major, entries in [0,p).
struct Mat {
  int rows = 0, cols = 0;
  std::vector<int> a;
  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}
  int& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  int at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
  static Mat identity(int n);
  bool is_zero() const;
  bool operator==(const Mat&) const = default;
};

int inv_mod(int x, int p);
void check_prime(int p);

Mat mul(const Mat& x, const Mat& y, int p);
Mat sub(const Mat& x, const Mat& y, int p);
int rank(Mat m, int p);
// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(Mat& m, int p);
// Columns form a basis of the null space.
Mat nullspace(const Mat& m, int p);
// Columns form a basis of the column space (chosen among original columns).
Mat colspace(const Mat& m, int p);
// Some x with m x = b (b a matrix of right-hand sides), if any.
std::optional<Mat> solve(const Mat& m, const Mat& b, int p);
Mat hcat(const Mat& x, const Mat& y);
std::string dump(const Mat& m);

}  // namespace vee
