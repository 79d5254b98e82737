#include "bsnq/matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace bsnq {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap(at(a, c), at(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap(at(r, a), at(r, b));
}

void IntMatrix::add_row(std::size_t a, std::size_t b, const Int& k) {
  if (k == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) at(a, c) += k * at(b, c);
}

void IntMatrix::add_col(std::size_t a, std::size_t b, const Int& k) {
  if (k == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) at(r, a) += k * at(r, b);
}

void IntMatrix::negate_row(std::size_t a) {
  for (std::size_t c = 0; c < cols_; ++c) at(a, c) = -at(a, c);
}

void IntMatrix::negate_col(std::size_t a) {
  for (std::size_t r = 0; r < rows_; ++r) at(r, a) = -at(r, a);
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("IntMatrix: size mismatch");
  IntMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& v = at(i, k);
      if (v == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += v * o.at(k, j);
    }
  return r;
}

std::string IntMatrix::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < rows_; ++i) {
    out << '[';
    for (std::size_t j = 0; j < cols_; ++j) out << (j ? " " : "") << at(i, j).get_str();
    out << "]\n";
  }
  return out.str();
}

SmithResult smith_normal_form(IntMatrix a) {
  const std::size_t nr = a.rows(), nc = a.cols();
  IntMatrix left = IntMatrix::identity(nr);
  IntMatrix right = IntMatrix::identity(nc);
  const std::size_t k = std::min(nr, nc);

  for (std::size_t t = 0; t < k; ++t) {
    // Pivot on the minimal-absolute-value nonzero entry to slow growth.
    std::size_t pr = t, pc = t;
    bool found = false;
    for (std::size_t i = t; i < nr; ++i)
      for (std::size_t j = t; j < nc; ++j) {
        if (a.at(i, j) == 0) continue;
        if (!found || abs(a.at(i, j)) < abs(a.at(pr, pc))) {
          pr = i;
          pc = j;
          found = true;
        }
      }
    if (!found) break;
    a.swap_rows(t, pr);
    left.swap_rows(t, pr);
    a.swap_cols(t, pc);
    right.swap_cols(t, pc);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < nr; ++i) {
        if (a.at(i, t) == 0) continue;
        Int q = floor_divmod(a.at(i, t), a.at(t, t)).first;
        a.add_row(i, t, -q);
        left.add_row(i, t, -q);
        if (a.at(i, t) != 0) {
          a.swap_rows(t, i);
          left.swap_rows(t, i);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < nc; ++j) {
        if (a.at(t, j) == 0) continue;
        Int q = floor_divmod(a.at(t, j), a.at(t, t)).first;
        a.add_col(j, t, -q);
        right.add_col(j, t, -q);
        if (a.at(t, j) != 0) {
          a.swap_cols(t, j);
          right.swap_cols(t, j);
          clean = false;
        }
      }
      if (clean) break;
    }

    if (a.at(t, t) < 0) {
      a.negate_row(t);
      left.negate_row(t);
    }
  }

  // Enforce the divisibility chain on the diagonal.
  for (;;) {
    bool changed = false;
    for (std::size_t t = 0; t + 1 < k; ++t) {
      const Int d1 = a.at(t, t), d2 = a.at(t + 1, t + 1);
      if (d1 == 0 && d2 != 0) {
        a.swap_rows(t, t + 1);
        left.swap_rows(t, t + 1);
        a.swap_cols(t, t + 1);
        right.swap_cols(t, t + 1);
        changed = true;
        continue;
      }
      if (d1 == 0 || d2 % d1 == 0) continue;
      // diag(d1, d2) ~ diag(gcd, lcm): fold d2 into column t and redo the
      // 2x2 block with Euclid row steps, then one exact column clear.
      a.add_col(t, t + 1, 1);
      right.add_col(t, t + 1, 1);
      while (a.at(t + 1, t) != 0) {
        Int q = floor_divmod(a.at(t, t), a.at(t + 1, t)).first;
        a.add_row(t, t + 1, -q);
        left.add_row(t, t + 1, -q);
        a.swap_rows(t, t + 1);
        left.swap_rows(t, t + 1);
      }
      Int q = a.at(t, t + 1) / a.at(t, t);  // pivot divides the entry here
      a.add_col(t + 1, t, -q);
      right.add_col(t + 1, t, -q);
      if (a.at(t, t) < 0) {
        a.negate_row(t);
        left.negate_row(t);
      }
      if (a.at(t + 1, t + 1) < 0) {
        a.negate_row(t + 1);
        left.negate_row(t + 1);
      }
      changed = true;
    }
    if (!changed) break;
  }

  SmithResult res;
  res.divisors.resize(k);
  for (std::size_t t = 0; t < k; ++t) res.divisors[t] = a.at(t, t);
  res.left = std::move(left);
  res.right = std::move(right);
  return res;
}

HermiteResult hermite_normal_form(IntMatrix a) {
  const std::size_t nr = a.rows(), nc = a.cols();
  std::size_t row = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t col = 0; col < nc && row < nr; ++col) {
    // gcd the column below `row` into one entry
    for (;;) {
      std::size_t best = nr;
      for (std::size_t i = row; i < nr; ++i)
        if (a.at(i, col) != 0 && (best == nr || abs(a.at(i, col)) < abs(a.at(best, col))))
          best = i;
      if (best == nr) break;
      a.swap_rows(row, best);
      bool done = true;
      for (std::size_t i = row + 1; i < nr; ++i) {
        if (a.at(i, col) == 0) continue;
        Int q = floor_divmod(a.at(i, col), a.at(row, col)).first;
        a.add_row(i, row, -q);
        if (a.at(i, col) != 0) done = false;
      }
      if (done) break;
    }
    if (a.at(row, col) == 0) continue;
    if (a.at(row, col) < 0) a.negate_row(row);
    // reduce the entries above the pivot into [0, pivot)
    for (std::size_t i = 0; i < row; ++i) {
      Int q = floor_divmod(a.at(i, col), a.at(row, col)).first;
      a.add_row(i, row, -q);
    }
    pivots.push_back(col);
    ++row;
  }
  IntMatrix basis(row, nc);
  for (std::size_t i = 0; i < row; ++i)
    for (std::size_t j = 0; j < nc; ++j) basis.at(i, j) = a.at(i, j);
  return {std::move(basis), std::move(pivots)};
}

Int determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant: square matrix required");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      std::size_t swap = n;
      for (std::size_t i = k + 1; i < n; ++i)
        if (m.at(i, k) != 0) {
          swap = i;
          break;
        }
      if (swap == n) return 0;
      m.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
    prev = m.at(k, k);
  }
  return sign * m.at(n - 1, n - 1);
}

Int AbelianInvariants::order() const {
  if (!is_finite()) throw std::logic_error("AbelianInvariants::order: infinite group");
  Int n = 1;
  for (const Int& t : torsion) n *= t;
  return n;
}

std::string AbelianInvariants::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream out;
  bool first = true;
  auto sep = [&] {
    if (!first) out << " + ";
    first = false;
  };
  if (free_rank == 1) {
    sep();
    out << "Z";
  } else if (free_rank > 1) {
    sep();
    out << "Z^" << free_rank;
  }
  for (const Int& t : torsion) {
    sep();
    out << "Z/" << t.get_str();
  }
  return out.str();
}

AbelianInvariants abelian_invariants(const IntMatrix& relations, std::size_t ambient_rank) {
  if (relations.cols() != ambient_rank && relations.rows() != 0)
    throw std::invalid_argument("abelian_invariants: column count mismatch");
  AbelianInvariants inv;
  if (relations.rows() == 0) {
    inv.free_rank = ambient_rank;
    return inv;
  }
  auto snf = smith_normal_form(relations);
  std::size_t nonzero = 0;
  for (const Int& d : snf.divisors)
    if (d != 0) {
      ++nonzero;
      if (d > 1) inv.torsion.push_back(d);
    }
  inv.free_rank = ambient_rank - nonzero;
  return inv;
}

}  // namespace bsnq
