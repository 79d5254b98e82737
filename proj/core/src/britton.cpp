#include "bsnq/britton.hpp"

#include <algorithm>
#include <stdexcept>

namespace bsnq {

FreeWord BrittonNormalForm::to_word() const {
  FreeWord w;
  w.append(kGenA, head);
  for (const auto& f : tail) {
    w.append(kGenT, f.epsilon);
    w.append(kGenA, f.residue);
  }
  return w;
}

BrittonNormalForm britton_reduce(const BSParams& p, const FreeWord& w) {
  // Process the word right to left, maintaining the normal form of the suffix
  // seen so far. The tail is kept reversed (rightmost factor first) so that
  // prepending a t-letter touches only the container's back.
  Int head = 0;
  std::vector<BrittonNormalForm::Factor> rev_tail;

  auto prepend_t = [&](int eps) {
    // head currently holds the leading a-exponent z of the suffix.
    const Int& modulus = eps < 0 ? p.m : p.n;
    auto [q, j] = floor_divmod(head, modulus);
    // t^-1 a^(qm+j) = a^(qn) t^-1 a^j  /  t a^(qn+j) = a^(qm) t a^j
    Int carry = q * (eps < 0 ? p.n : p.m);
    if (j == 0 && !rev_tail.empty() && rev_tail.back().epsilon == -eps) {
      // pinch: t^-eps t^eps cancels, the carried power joins the next residue
      Int next = rev_tail.back().residue;
      rev_tail.pop_back();
      head = carry + next;
    } else {
      rev_tail.push_back({eps, j});
      head = carry;
    }
  };

  auto syls = w.syllables();
  for (auto it = syls.rbegin(); it != syls.rend(); ++it) {
    if (it->gen == kGenA) {
      head += it->exp;
    } else if (it->gen == kGenT) {
      int eps = it->exp < 0 ? -1 : 1;
      for (Int c = abs(it->exp); c > 0; --c) prepend_t(eps);
    } else {
      throw std::invalid_argument("britton_reduce: word must use generators t, a");
    }
  }

  BrittonNormalForm nf;
  nf.head = head;
  nf.tail.assign(rev_tail.rbegin(), rev_tail.rend());
  return nf;
}

bool is_identity(const BSParams& p, const FreeWord& w) {
  return britton_reduce(p, w).is_identity();
}

bool words_equal(const BSParams& p, const FreeWord& u, const FreeWord& v) {
  return britton_reduce(p, u * v.inverse()).is_identity();
}

Int t_exponent_sum(const FreeWord& w) { return w.exponent_sum(kGenT); }

}  // namespace bsnq
