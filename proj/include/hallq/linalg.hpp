#pragma once

// Small dense matrices over the ambient field.

#include <optional>
#include <vector>

#include "hallq/gf.hpp"

namespace hallq::linalg {

using gf::Elem;
using gf::Field;

struct Mat {
  int rows = 0;
  int cols = 0;
  std::vector<Elem> a;  // row-major

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * static_cast<std::size_t>(c), 0) {}

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Field::one();
    return m;
  }

  Elem& at(int r, int c) { return a[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(c)]; }
  Elem at(int r, int c) const { return a[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(c)]; }

  friend bool operator==(const Mat&, const Mat&) = default;
};

Mat multiply(const Field& F, const Mat& x, const Mat& y);
// Entrywise Frob^k.
Mat frobenius(const Field& F, const Mat& x, int k);
std::optional<Mat> inverse(const Field& F, Mat x);
bool entries_in_subfield(const Field& F, const Mat& x, int d);

// Reduced row echelon form of the row space, zero rows dropped.
struct Echelon {
  Mat basis;
  std::vector<int> pivots;
};
Echelon rref(const Field& F, Mat x);

// Rank of an integer matrix modulo the prime p.
int rank_mod_p(std::vector<std::vector<int>> m, int p);

// Every k-dimensional subspace of F_{q^d}^n as a k x n RREF basis, ordered by
// pivot set (lexicographic) and then by free entries (odometer over the
// subfield in element order).
std::vector<Mat> grassmannian(const Field& F, int d, int n, int k);

}  // namespace hallq::linalg
