#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "torarr/error.hpp"
#include "torarr/ints.hpp"

namespace torarr::intlat {

// Dense row-major matrix over Int. Zero-by-n and n-by-zero shapes are legal and
// show up routinely (empty systems, full-rank kernels).
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows, std::size_t cols_hint = 0);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Int& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  std::vector<Int> row(std::size_t r) const;
  void append_row(const std::vector<Int>& v);

  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& rhs) const;
  bool operator==(const IntMatrix& rhs) const = default;

  bool is_zero() const;
  bool row_is_zero(std::size_t r) const;

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  void negate_row(std::size_t i);
  // row i += m * row j
  void addmul_row(std::size_t i, std::size_t j, const Int& m);
  // col i += m * col j
  void addmul_col(std::size_t i, std::size_t j, const Int& m);

  std::string str() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> a_;
};

// U * input = h; h in row echelon form, pivots positive, entries above each
// pivot reduced into [0, pivot). Zero rows sink to the bottom.
struct HermiteForm {
  IntMatrix h;
  IntMatrix u;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
};

// u * input * v = d with d diagonal, nonnegative, each entry dividing the next.
struct SmithForm {
  IntMatrix d;
  IntMatrix u;
  IntMatrix v;
  std::size_t rank = 0;
  std::vector<Int> diagonal() const;
};

// Finitely generated abelian group: Z^free_rank + sum of Z/d with d the
// invariant factors (> 1, divisibility chain).
struct TorsionData {
  std::size_t free_rank = 0;
  std::vector<Int> invariant_factors;

  bool operator==(const TorsionData& rhs) const = default;
  bool is_trivial() const { return free_rank == 0 && invariant_factors.empty(); }
  Int torsion_order() const;
  std::string str() const;
};

HermiteForm hermite_row_form(const IntMatrix& a);
SmithForm smith_normal_form(const IntMatrix& a);

// Nonzero rows of the Hermite form: canonical basis of the row span.
IntMatrix hermite_basis(const IntMatrix& a);

// Basis of { x : x * a = 0 }, canonicalized; the kernel lattice is saturated.
IntMatrix kernel_rows(const IntMatrix& a);

// (kernel basis, basis of the saturation of the row span), both canonical.
std::pair<IntMatrix, IntMatrix> kernel_and_saturation(const IntMatrix& a);

// Invariants of Z^ambient_rank / rowspan(sub).
TorsionData quotient_invariants(std::size_t ambient_rank, const IntMatrix& sub);

std::size_t rank_of(const IntMatrix& a);
Int determinant(const IntMatrix& a);

// Integer coordinates of v against an echelon row basis (from hermite_basis);
// nullopt when v is not in the lattice spanned by those rows.
std::optional<std::vector<Int>> row_coordinates(const IntMatrix& echelon, const std::vector<Int>& v);

// g = gcd(a, b) >= 0 together with x, y such that x*a + y*b = g.
struct Xgcd {
  Int g, x, y;
};
Xgcd xgcd(const Int& a, const Int& b);

TorsionData direct_sum(const TorsionData& x, const TorsionData& y);
// n copies of x.
TorsionData power(const TorsionData& x, std::size_t n);

}  // namespace torarr::intlat
