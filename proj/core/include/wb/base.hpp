#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

// Shared scalar/vector/matrix types for the lattice combinatorics.
// Everything is exact integer (or exact rational inside the solver);
// no floating point appears anywhere in the library.

namespace wb {

using Int = long long;
using Vec = std::vector<Int>;  // lattice vector, character or cocharacter side
using Mat = std::vector<Vec>;  // row-major square integer matrix

struct error : std::runtime_error {
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

inline Int dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw error("dimension mismatch in pairing");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw error("dimension mismatch in vector sum");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Vec sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw error("dimension mismatch in vector difference");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Vec negate(const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

inline Vec scaled(const Vec& a, Int c) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

inline bool is_zero(const Vec& a) {
  for (Int x : a)
    if (x != 0) return false;
  return true;
}

inline Mat identity_matrix(int n) {
  Mat m(n, Vec(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline Vec mat_vec(const Mat& m, const Vec& v) {
  if (m.empty() || m[0].size() != v.size()) throw error("dimension mismatch in matrix action");
  Vec r(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) r[i] += m[i][j] * v[j];
  return r;
}

inline Mat mat_mul(const Mat& a, const Mat& b) {
  std::size_t n = a.size();
  Mat r(n, Vec(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      Int aik = a[i][k];
      if (aik == 0) continue;
      for (std::size_t j = 0; j < n; ++j) r[i][j] += aik * b[k][j];
    }
  return r;
}

inline Mat transpose(const Mat& a) {
  std::size_t n = a.size();
  Mat r(n, Vec(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r[j][i] = a[i][j];
  return r;
}

// Transpose action on the opposite lattice: <M^T x, v> = <x, M v>.
inline Vec transpose_apply(const Mat& m, const Vec& x) {
  if (m.size() != x.size()) throw error("dimension mismatch in transpose action");
  Vec r(m.size(), 0);
  for (std::size_t j = 0; j < m.size(); ++j)
    for (std::size_t i = 0; i < m.size(); ++i) r[j] += m[i][j] * x[i];
  return r;
}

inline std::size_t hash_combine(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

inline std::size_t hash_vec(const Vec& v) {
  std::size_t h = 1469598103934665603ULL;
  for (Int x : v) h = hash_combine(h, std::hash<Int>{}(x));
  return h;
}

inline std::size_t hash_mat(const Mat& m) {
  std::size_t h = 14695981039346656037ULL;
  for (const Vec& row : m) h = hash_combine(h, hash_vec(row));
  return h;
}

// Solves sum_i x_i * basis[i] = target exactly over Q, where the basis
// vectors are linearly independent columns. Returns nothing when target
// is outside the rational span. Coordinates come back as reduced
// (numerator, denominator) pairs with positive denominator.
std::optional<std::vector<std::pair<Int, Int>>> solve_in_basis(
    const std::vector<Vec>& basis, const Vec& target);

// Integral solution or nothing (outside span or non-integral).
std::optional<Vec> solve_in_basis_integral(const std::vector<Vec>& basis,
                                           const Vec& target);

}  // namespace wb
