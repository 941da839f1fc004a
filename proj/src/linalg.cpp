#include "hallq/linalg.hpp"

#include <utility>

#include "hallq/error.hpp"

namespace hallq::linalg {

Mat multiply(const Field& F, const Mat& x, const Mat& y) {
  if (x.cols != y.rows) throw Error(ErrorKind::DimensionMismatch, "matrix product shapes");
  Mat out(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const Elem xik = x.at(i, k);
      if (xik == 0) continue;
      for (int j = 0; j < y.cols; ++j) out.at(i, j) = F.add(out.at(i, j), F.mul(xik, y.at(k, j)));
    }
  return out;
}

Mat frobenius(const Field& F, const Mat& x, int k) {
  Mat out = x;
  for (auto& e : out.a) e = F.frobenius(e, k);
  return out;
}

std::optional<Mat> inverse(const Field& F, Mat x) {
  if (x.rows != x.cols) return std::nullopt;
  const int n = x.rows;
  Mat inv = Mat::identity(n);
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (x.at(r, c) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return std::nullopt;
    if (piv != c)
      for (int j = 0; j < n; ++j) {
        std::swap(x.at(piv, j), x.at(c, j));
        std::swap(inv.at(piv, j), inv.at(c, j));
      }
    const Elem s = F.inv(x.at(c, c));
    for (int j = 0; j < n; ++j) {
      x.at(c, j) = F.mul(x.at(c, j), s);
      inv.at(c, j) = F.mul(inv.at(c, j), s);
    }
    for (int r = 0; r < n; ++r) {
      if (r == c || x.at(r, c) == 0) continue;
      const Elem f = x.at(r, c);
      for (int j = 0; j < n; ++j) {
        x.at(r, j) = F.sub(x.at(r, j), F.mul(f, x.at(c, j)));
        inv.at(r, j) = F.sub(inv.at(r, j), F.mul(f, inv.at(c, j)));
      }
    }
  }
  return inv;
}

bool entries_in_subfield(const Field& F, const Mat& x, int d) {
  for (Elem e : x.a)
    if (!F.in_subfield(e, d)) return false;
  return true;
}

Echelon rref(const Field& F, Mat x) {
  Echelon out;
  int row = 0;
  for (int c = 0; c < x.cols && row < x.rows; ++c) {
    int piv = -1;
    for (int r = row; r < x.rows; ++r)
      if (x.at(r, c) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != row)
      for (int j = 0; j < x.cols; ++j) std::swap(x.at(piv, j), x.at(row, j));
    const Elem s = F.inv(x.at(row, c));
    for (int j = 0; j < x.cols; ++j) x.at(row, j) = F.mul(x.at(row, j), s);
    for (int r = 0; r < x.rows; ++r) {
      if (r == row || x.at(r, c) == 0) continue;
      const Elem f = x.at(r, c);
      for (int j = 0; j < x.cols; ++j) x.at(r, j) = F.sub(x.at(r, j), F.mul(f, x.at(row, j)));
    }
    out.pivots.push_back(c);
    ++row;
  }
  out.basis = Mat(row, x.cols);
  for (int r = 0; r < row; ++r)
    for (int j = 0; j < x.cols; ++j) out.basis.at(r, j) = x.at(r, j);
  return out;
}

int rank_mod_p(std::vector<std::vector<int>> m, int p) {
  if (m.empty()) return 0;
  const std::size_t cols = m.front().size();
  auto inv_mod = [p](long long a) {
    long long r = 1, b = ((a % p) + p) % p;
    for (int n = p - 2; n > 0; n >>= 1, b = b * b % p)
      if (n & 1) r = r * b % p;
    return r;
  };
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t piv = m.size();
    for (std::size_t r = row; r < m.size(); ++r)
      if (m[r][c] % p != 0) {
        piv = r;
        break;
      }
    if (piv == m.size()) continue;
    std::swap(m[piv], m[row]);
    const long long s = inv_mod(m[row][c]);
    for (auto& v : m[row]) v = static_cast<int>(((v * s) % p + p) % p);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][c] % p == 0) continue;
      const long long f = m[r][c];
      for (std::size_t j = 0; j < cols; ++j) m[r][j] = static_cast<int>(((m[r][j] - f * m[row][j]) % p + p) % p);
    }
    ++row;
  }
  return static_cast<int>(row);
}

std::vector<Mat> grassmannian(const Field& F, int d, int n, int k) {
  std::vector<Mat> out;
  if (k < 0 || k > n) return out;
  const auto& elems = F.subfield(d);
  std::vector<int> piv(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) piv[static_cast<std::size_t>(i)] = i;
  while (true) {
    // Free slots: row r, non-pivot column c > piv[r].
    std::vector<char> is_piv(static_cast<std::size_t>(n), 0);
    for (int c : piv) is_piv[static_cast<std::size_t>(c)] = 1;
    std::vector<std::pair<int, int>> free;
    for (int r = 0; r < k; ++r)
      for (int c = piv[static_cast<std::size_t>(r)] + 1; c < n; ++c)
        if (!is_piv[static_cast<std::size_t>(c)]) free.emplace_back(r, c);
    std::vector<std::size_t> digit(free.size(), 0);
    while (true) {
      Mat m(k, n);
      for (int r = 0; r < k; ++r) m.at(r, piv[static_cast<std::size_t>(r)]) = Field::one();
      for (std::size_t f = 0; f < free.size(); ++f) m.at(free[f].first, free[f].second) = elems[digit[f]];
      out.push_back(std::move(m));
      std::size_t j = free.size();
      while (j > 0 && digit[j - 1] + 1 == elems.size()) digit[--j] = 0;
      if (j == 0) break;
      ++digit[j - 1];
    }
    // Next pivot combination.
    int i = k - 1;
    while (i >= 0 && piv[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++piv[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) piv[static_cast<std::size_t>(j)] = piv[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

}  // namespace hallq::linalg
