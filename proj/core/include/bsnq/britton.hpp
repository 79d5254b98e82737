#ifndef BSNQ_BRITTON_HPP
#define BSNQ_BRITTON_HPP

#include <vector>

#include "bsnq/presentations.hpp"
#include "bsnq/words.hpp"

namespace bsnq {

// Canonical normal form a^head (t^e1 a^r1) ... (t^ek a^rk) of an element of
// BS(m,n). Residues satisfy 0 <= r < m after t^-1 and 0 <= r < |n| after t,
// and no pinch t^-1 a^0 t or t a^0 t^-1 remains. Two words are equal in the
// group iff their forms are identical.
struct BrittonNormalForm {
  struct Factor {
    int epsilon;  // +1 or -1
    Int residue;
    bool operator==(const Factor&) const = default;
  };

  Int head = 0;
  std::vector<Factor> tail;

  bool is_identity() const { return head == 0 && tail.empty(); }
  std::size_t t_length() const { return tail.size(); }
  FreeWord to_word() const;
  bool operator==(const BrittonNormalForm&) const = default;
};

// Rewrites w (a word over {t, a}) to its normal form, scanning right to left:
//   t^-1 a^z -> a^(q n) t^-1 a^j   with z = q m + j, 0 <= j < m
//   t    a^z -> a^(q m) t    a^j   with z = q n + j, 0 <= j < |n|
// cancelling t^-1 a^0 t and t a^0 t^-1 as they appear.
BrittonNormalForm britton_reduce(const BSParams& p, const FreeWord& w);

bool is_identity(const BSParams& p, const FreeWord& w);
bool words_equal(const BSParams& p, const FreeWord& u, const FreeWord& v);

// Exponent sum of t; invariant under britton_reduce.
Int t_exponent_sum(const FreeWord& w);

}  // namespace bsnq

#endif
