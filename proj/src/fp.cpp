#include "vee/fp.hpp"

#include <sstream>
#include <stdexcept>

namespace vee {

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool Mat::is_zero() const {
  for (int v : a)
    if (v) return false;
  return true;
}

void check_prime(int p) {
  if (p < 2) throw std::invalid_argument("field size must be a prime");
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) throw std::invalid_argument("field size must be a prime");
}

int inv_mod(int x, int p) {
  x %= p;
  if (x < 0) x += p;
  if (x == 0) throw std::domain_error("inverse of zero");
  int r = 1;
  for (int e = p - 2, b = x; e > 0; e >>= 1, b = b * b % p)
    if (e & 1) r = r * b % p;
  return r;
}

Mat mul(const Mat& x, const Mat& y, int p) {
  if (x.cols != y.rows) throw std::invalid_argument("matrix shape mismatch");
  Mat r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      int v = x.at(i, k);
      if (!v) continue;
      for (int j = 0; j < y.cols; ++j) r.at(i, j) = (r.at(i, j) + v * y.at(k, j)) % p;
    }
  return r;
}

Mat sub(const Mat& x, const Mat& y, int p) {
  if (x.rows != y.rows || x.cols != y.cols) throw std::invalid_argument("matrix shape mismatch");
  Mat r(x.rows, x.cols);
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = ((x.a[i] - y.a[i]) % p + p) % p;
  return r;
}

std::vector<int> rref(Mat& m, int p) {
  std::vector<int> piv;
  int row = 0;
  for (int c = 0; c < m.cols && row < m.rows; ++c) {
    int sel = -1;
    for (int i = row; i < m.rows; ++i)
      if (m.at(i, c)) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    for (int j = 0; j < m.cols; ++j) std::swap(m.at(row, j), m.at(sel, j));
    int iv = inv_mod(m.at(row, c), p);
    for (int j = 0; j < m.cols; ++j) m.at(row, j) = m.at(row, j) * iv % p;
    for (int i = 0; i < m.rows; ++i) {
      if (i == row || !m.at(i, c)) continue;
      int f = m.at(i, c);
      for (int j = 0; j < m.cols; ++j) m.at(i, j) = ((m.at(i, j) - f * m.at(row, j)) % p + p) % p;
    }
    piv.push_back(c);
    ++row;
  }
  return piv;
}

int rank(Mat m, int p) { return static_cast<int>(rref(m, p).size()); }

Mat nullspace(const Mat& m, int p) {
  Mat r = m;
  auto piv = rref(r, p);
  std::vector<char> is_piv(m.cols, 0);
  for (int c : piv) is_piv[c] = 1;
  Mat out(m.cols, m.cols - static_cast<int>(piv.size()));
  int k = 0;
  for (int f = 0; f < m.cols; ++f) {
    if (is_piv[f]) continue;
    out.at(f, k) = 1;
    for (size_t i = 0; i < piv.size(); ++i) out.at(piv[i], k) = (p - r.at(static_cast<int>(i), f)) % p;
    ++k;
  }
  return out;
}

Mat colspace(const Mat& m, int p) {
  Mat r = m;
  auto piv = rref(r, p);
  Mat out(m.rows, static_cast<int>(piv.size()));
  for (size_t k = 0; k < piv.size(); ++k)
    for (int i = 0; i < m.rows; ++i) out.at(i, static_cast<int>(k)) = m.at(i, piv[k]);
  return out;
}

Mat hcat(const Mat& x, const Mat& y) {
  if (x.rows != y.rows) throw std::invalid_argument("hcat: row mismatch");
  Mat r(x.rows, x.cols + y.cols);
  for (int i = 0; i < x.rows; ++i) {
    for (int j = 0; j < x.cols; ++j) r.at(i, j) = x.at(i, j);
    for (int j = 0; j < y.cols; ++j) r.at(i, x.cols + j) = y.at(i, j);
  }
  return r;
}

std::optional<Mat> solve(const Mat& m, const Mat& b, int p) {
  Mat aug = hcat(m, b);
  auto piv = rref(aug, p);
  for (int c : piv)
    if (c >= m.cols) return std::nullopt;
  Mat x(m.cols, b.cols);
  for (size_t i = 0; i < piv.size(); ++i)
    for (int j = 0; j < b.cols; ++j) x.at(piv[i], j) = aug.at(static_cast<int>(i), m.cols + j);
  return x;
}

std::string dump(const Mat& m) {
  std::ostringstream os;
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) os << (j ? " " : "") << m.at(i, j);
    os << '\n';
  }
  return os.str();
}

}  // namespace vee
