#ifndef BSNQ_FREE_PRODUCT_HPP
#define BSNQ_FREE_PRODUCT_HPP

#include <vector>

#include "bsnq/presentations.hpp"
#include "bsnq/words.hpp"

namespace bsnq {

// Normal form of an element of Z * Z_m = <t, a | a^m>: an alternating
// sequence of nonzero t-powers and a-powers with residues in 1..m-1. Unique
// per group element.
struct FreeProductNormalForm {
  std::vector<Syllable> syllables;

  bool is_identity() const { return syllables.empty(); }
  FreeWord to_word() const;
  bool operator==(const FreeProductNormalForm&) const = default;
};

// Reduces a-exponents mod m, merges adjacent like-generator syllables and
// drops the ones that vanish. Rejects m < 2.
FreeProductNormalForm free_product_reduce(const Int& m, const FreeWord& w);

}  // namespace bsnq

#endif
