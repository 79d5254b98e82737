#ifndef BSNQ_NQ_HPP
#define BSNQ_NQ_HPP

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bsnq/arith.hpp"
#include "bsnq/matrix.hpp"
#include "bsnq/presentations.hpp"
#include "bsnq/words.hpp"

namespace bsnq {

// Normal-form exponent vector over the pc generators.
using ExpVec = std::vector<Int>;

struct NqOptions {
  std::size_t max_generators = 512;
  // Cap on the bit length of any single exponent during collection.
  std::size_t max_entry_bits = 1u << 20;
};

// Raised when a computation exceeds the configured budget; never a silent
// truncation.
struct NqResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Weighted polycyclic presentation of G/gamma_{cls+1}(G) together with the
// epimorphism from the source presentation's generators and the abelian
// invariants of each lower-central layer. Immutable once computed; collection
// is pure, so sharing across threads is safe.
class PcPresentation {
 public:
  struct PcGenerator {
    int weight = 1;
    Int order = 0;     // relative order, 0 = infinite
    ExpVec power_rhs;  // normal form of g^order over later generators; empty = 1
  };

  int cls() const { return cls_; }
  std::size_t size() const { return gens_.size(); }
  const PcGenerator& generator(std::size_t i) const { return gens_[i]; }
  int weight(std::size_t i) const { return gens_[i].weight; }

  // Right-hand side of [g_j, g_i] for j > i; nullptr when the two commute.
  const ExpVec* commutator_rhs(std::size_t j, std::size_t i) const;

  // Images of the source presentation's generators.
  const std::vector<ExpVec>& epimorphism_images() const { return epi_; }
  const GroupPresentation& source() const { return source_; }

  // graded_quotients()[c-1] = invariants of gamma_c / gamma_{c+1}.
  const std::vector<AbelianInvariants>& graded_quotients() const { return graded_; }

  // --- collection -----------------------------------------------------
  ExpVec one() const { return ExpVec(size()); }
  ExpVec unit(std::size_t i) const;

  // a * g_i^s, collected.
  ExpVec multiply_gen(ExpVec a, std::size_t i, Int s) const;
  ExpVec multiply(ExpVec a, const ExpVec& b) const;
  ExpVec inverse(const ExpVec& a) const;
  ExpVec power(const ExpVec& a, const Int& e) const;
  // g^-1 a g
  ExpVec conjugate(const ExpVec& a, const ExpVec& g) const;
  // a^-1 b^-1 a b
  ExpVec commutator(const ExpVec& a, const ExpVec& b) const;

  // Canonical form of a word in the pc generators.
  ExpVec collect(std::span<const std::pair<std::size_t, Int>> word) const;

  // Image of a word in the source group's generators.
  ExpVec image(const FreeWord& w) const;

  // True iff image(w) vanishes on every generator of weight <= i, i.e. the
  // image lies in gamma_{i+1} of the quotient. Requires 1 <= i <= cls().
  bool in_gamma(const FreeWord& w, int i) const;

  // Re-runs the standard consistency pairs; true when all collect equally.
  bool is_consistent() const;

  std::string format_element(const ExpVec& v) const;  // "g1^2 g3^-1", "1"

 private:
  friend class NqBuilder;

  // Difference vectors of the standard consistency pairs (triple overlaps
  // filtered to weight sum <= weight_cap), nonzero ones only.
  std::vector<ExpVec> consistency_defects(int weight_cap) const;

  ExpVec conjugate_by_gen_power(ExpVec x, std::size_t i, const Int& s) const;
  ExpVec conjugated_gen(std::size_t j, std::size_t i, const Int& s) const;
  void check_entry(const Int& v) const;

  int cls_ = 0;
  std::vector<PcGenerator> gens_;
  // comm_[j][i], j > i; empty vector = trivial relation.
  std::vector<std::vector<ExpVec>> comm_;
  std::vector<ExpVec> epi_;
  std::vector<AbelianInvariants> graded_;
  GroupPresentation source_;
  NqOptions opts_;
};

// Computes the weighted pc presentation of G/gamma_{cls+1}(G): stage 1 is the
// abelianization via Smith reduction of the relator exponent matrix; each
// later stage introduces central tails on the non-defining relations, imposes
// consistency and relator conditions as integer rows, and eliminates via
// Hermite reduction.
PcPresentation nilpotent_quotient(const GroupPresentation& pres, int cls,
                                  const NqOptions& opts = {});

}  // namespace bsnq

#endif
