#ifndef BSNQ_MATRIX_HPP
#define BSNQ_MATRIX_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "bsnq/arith.hpp"

namespace bsnq {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Int& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row a += k * row b
  void add_row(std::size_t a, std::size_t b, const Int& k);
  void add_col(std::size_t a, std::size_t b, const Int& k);
  void negate_row(std::size_t a);
  void negate_col(std::size_t a);

  IntMatrix operator*(const IntMatrix& other) const;
  bool operator==(const IntMatrix&) const = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> data_;
};

// left * a * right = diag(divisors), each divisor nonnegative and dividing the
// next, transforms unimodular. The divisor list has min(rows, cols) entries.
struct SmithResult {
  std::vector<Int> divisors;
  IntMatrix left, right;
};
SmithResult smith_normal_form(IntMatrix a);

// Row-style Hermite form of the lattice spanned by the rows: echelon with
// positive pivots in strictly increasing columns, entries above each pivot
// reduced into [0, pivot). Zero rows are dropped.
struct HermiteResult {
  IntMatrix basis;
  std::vector<std::size_t> pivot_cols;
};
HermiteResult hermite_normal_form(IntMatrix a);

// Exact determinant by fraction-free (Bareiss) elimination; square input.
Int determinant(const IntMatrix& a);

// Invariants of Z^ambient_rank / rowspan(relations) in canonical form:
// torsion entries are >= 2 and each divides the next.
struct AbelianInvariants {
  std::size_t free_rank = 0;
  std::vector<Int> torsion;

  bool is_finite() const { return free_rank == 0; }
  // Group order; finite groups only.
  Int order() const;
  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  std::string to_string() const;
  bool operator==(const AbelianInvariants&) const = default;
};

AbelianInvariants abelian_invariants(const IntMatrix& relations, std::size_t ambient_rank);

}  // namespace bsnq

#endif
