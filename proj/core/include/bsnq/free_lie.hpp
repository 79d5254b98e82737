#ifndef BSNQ_FREE_LIE_HPP
#define BSNQ_FREE_LIE_HPP

#include <map>
#include <mutex>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bsnq/arith.hpp"
#include "bsnq/presentations.hpp"

namespace bsnq {

// Integer linear combination of Hall basis trees, keyed by tree id within a
// FreeLie instance. Zero coefficients are never stored.
class LieElement {
 public:
  LieElement() = default;

  static LieElement basis(int tree, Int coeff = 1) {
    LieElement e;
    e.add(tree, coeff);
    return e;
  }

  void add(int tree, const Int& coeff);
  bool is_zero() const { return terms_.empty(); }
  const std::map<int, Int>& terms() const { return terms_; }
  Int coefficient(int tree) const;

  LieElement& operator+=(const LieElement& o);
  LieElement& operator-=(const LieElement& o);
  LieElement operator-() const;
  LieElement& operator*=(const Int& k);
  bool operator==(const LieElement&) const = default;

 private:
  std::map<int, Int> terms_;
};

LieElement operator+(LieElement a, const LieElement& b);
LieElement operator-(LieElement a, const LieElement& b);
LieElement operator*(const Int& k, LieElement a);

// Rank-2 free Lie ring over Z with generators x and y. Hall trees are interned
// and identified by int ids assigned degree by degree in canonical order, so
// comparing ids compares trees in the Hall order. The tree arena and the
// bracket straightening memo grow lazily behind a mutex; cached and uncached
// results are identical.
class FreeLie {
 public:
  FreeLie();

  // Tree ids double as the total order, so the leaf ids encode y < x; with
  // that choice the degree-2 basis tree is [x, y].
  static constexpr int kY = 0;
  static constexpr int kX = 1;

  // Hall set convention: a node (u, v) is in the Hall set iff u, v are, u > v,
  // and when u = (u1, u2) also u2 <= v. Leaves are ordered y < x.
  struct Tree {
    int left = -1, right = -1;  // -1, -1 for leaves
    int degree = 1;
    int y_degree = 0;
    bool is_leaf() const { return left < 0; }
  };

  const Tree& tree(int id) const { return trees_[id]; }
  std::string tree_string(int id) const;  // e.g. "[[x,y],y]"

  // All Hall trees of degree exactly c, in canonical order.
  std::vector<int> hall_basis(int c);

  // Lie bracket with straightening into the Hall basis.
  LieElement bracket(const LieElement& u, const LieElement& v);

  // u(x, y) -> u(x, kappa*y): scales each basis tree by kappa^y_degree.
  LieElement psi_substitute(const Int& kappa, const LieElement& u);

  // Sum of y-degrees over the degree-c Hall basis.
  Int y_degree_sum(int c);

  LieElement x() { return LieElement::basis(kX); }
  LieElement y() { return LieElement::basis(kY); }

 private:
  void extend_to_degree(int c);
  LieElement bracket_trees(int u, int v);
  bool is_hall_pair(int u, int v) const;

  std::vector<Tree> trees_;
  std::vector<std::vector<int>> by_degree_;  // by_degree_[c-1] = ids of degree c
  std::map<std::pair<int, int>, int> node_ids_;
  std::map<std::pair<int, int>, LieElement> bracket_memo_;
  std::mutex mutex_;
};

// Rank of the degree-c component: (1/c) sum_{e | c} mobius(e) 2^(c/e).
Int witt_rank(int c);

// Index |kappa|^(T_c) of the image of psi_c in the degree-c component, T_c the
// y-degree sum; cross-checked against |det| of the matrix of psi_c for small c.
Int lattice_index(FreeLie& lie, int c, const Int& kappa);

// Divisor bound for the order of the degree-c layer of the lower central
// series of BS(m,n): |delta|^(T_c) when delta = n - m is nonzero, m^(T_c)
// when delta = 0. Requires c >= 2.
Int grc_order_bound(FreeLie& lie, const BSParams& p, int c);

}  // namespace bsnq

#endif
