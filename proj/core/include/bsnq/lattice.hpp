#ifndef BSNQ_LATTICE_HPP
#define BSNQ_LATTICE_HPP

#include <span>
#include <vector>

#include "bsnq/matrix.hpp"
#include "bsnq/nq.hpp"

namespace bsnq {

// A subgroup of a pc quotient stored as an echelonized sequence of normal-form
// exponent vectors (one pivot coordinate per row, strictly increasing).
// Because exponent vectors of a nonabelian pc group do not add componentwise,
// reduction steps use the group operations; on each graded layer this
// coincides with row Hermite reduction. Membership is decided by sifting.
class ExponentLattice {
 public:
  explicit ExponentLattice(const PcPresentation& pc) : pc_(&pc) {}

  const PcPresentation& pc() const { return *pc_; }

  // Sift an element in; no-op if it already reduces to the identity.
  void add(ExpVec v);

  bool contains(ExpVec v) const;
  bool contains(const ExponentLattice& other) const;

  bool is_zero() const { return rows_.empty(); }
  std::size_t rank() const { return rows_.size(); }
  std::span<const ExpVec> rows() const { return rows_; }
  IntMatrix basis_matrix() const;

  bool operator==(const ExponentLattice& other) const;

 private:
  static std::size_t lead(const ExpVec& v);

  const PcPresentation* pc_;
  std::vector<ExpVec> rows_;  // sorted by lead coordinate
};

// Smallest subgroup containing the given elements that is closed under
// conjugation by every pc generator: repeatedly sift conjugates, products and
// torsion wraps of the basis until stable.
ExponentLattice normal_closure_lattice(const PcPresentation& pc, std::span<const ExpVec> gens);
ExponentLattice normal_closure_lattice(const PcPresentation& pc, std::span<const FreeWord> gens);

// Closure generated by the commutators of basis representatives of a and b,
// saturated under conjugation. Rejects mismatched ambient presentations.
ExponentLattice commutator_lattice(const PcPresentation& pc, const ExponentLattice& a,
                                   const ExponentLattice& b);

// The whole group and the trivial subgroup.
ExponentLattice full_lattice(const PcPresentation& pc);
ExponentLattice zero_lattice(const PcPresentation& pc);

}  // namespace bsnq

#endif
