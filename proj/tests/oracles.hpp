#pragma once

// Test-local oracles, deliberately independent of the library algorithms:
// cofactor determinants, minor gcds, and brute-force enumerations.

#include <cstddef>
#include <vector>

#include "torarr/intlat.hpp"

namespace oracles {

using torarr::Int;
using torarr::intlat::IntMatrix;

inline Int cofactor_det(const std::vector<std::vector<Int>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Int acc = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j] == 0) continue;
    std::vector<std::vector<Int>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Int> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(m[i][c]);
      minor.push_back(row);
    }
    Int term = m[0][j] * cofactor_det(minor);
    acc += (j % 2 == 0) ? term : -term;
  }
  return acc;
}

inline void subsets_of_size(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    out.push_back(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// gcd of all k-by-k minors, 0 when every minor vanishes
inline Int minors_gcd(const IntMatrix& a, std::size_t k) {
  std::vector<std::vector<std::size_t>> rsel, csel;
  subsets_of_size(a.rows(), k, rsel);
  subsets_of_size(a.cols(), k, csel);
  Int g = 0;
  for (const auto& rs : rsel)
    for (const auto& cs : csel) {
      std::vector<std::vector<Int>> sub(k, std::vector<Int>(k));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) sub[i][j] = a.at(rs[i], cs[j]);
      g = boost::multiprecision::gcd(g, cofactor_det(sub));
    }
  return g < 0 ? Int(-g) : g;
}

// row-style echelon predicate: positive pivots on strictly increasing columns,
// entries above each pivot in [0, pivot), zero rows trailing
inline bool is_hermite_shaped(const IntMatrix& h) {
  long long last_pivot = -1;
  bool seen_zero_row = false;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    std::size_t p = 0;
    while (p < h.cols() && h.at(i, p) == 0) ++p;
    if (p == h.cols()) {
      seen_zero_row = true;
      continue;
    }
    if (seen_zero_row) return false;
    if (static_cast<long long>(p) <= last_pivot) return false;
    last_pivot = static_cast<long long>(p);
    if (h.at(i, p) <= 0) return false;
    for (std::size_t r = 0; r < i; ++r)
      if (h.at(r, p) < 0 || h.at(r, p) >= h.at(i, p)) return false;
  }
  return true;
}

// all 2x2 integer matrices with entries in [-bound, bound] and det = +-1
inline std::vector<IntMatrix> unimodular_2x2(int bound) {
  std::vector<IntMatrix> out;
  for (int a = -bound; a <= bound; ++a)
    for (int b = -bound; b <= bound; ++b)
      for (int c = -bound; c <= bound; ++c)
        for (int d = -bound; d <= bound; ++d) {
          int det = a * d - b * c;
          if (det != 1 && det != -1) continue;
          IntMatrix u(2, 2);
          u.at(0, 0) = a;
          u.at(0, 1) = b;
          u.at(1, 0) = c;
          u.at(1, 1) = d;
          out.push_back(u);
        }
  return out;
}

}  // namespace oracles
