#ifndef BSNQ_PRESENTATIONS_HPP
#define BSNQ_PRESENTATIONS_HPP

#include <string>
#include <vector>

#include "bsnq/arith.hpp"
#include "bsnq/words.hpp"

namespace bsnq {

// Generator indices for words over the BS(m,n) alphabet {t, a}; every word
// handed to the rewriting and classification routines uses this convention.
inline constexpr int kGenT = 0;
inline constexpr int kGenA = 1;

const std::vector<std::string>& bs_generator_names();

// Normalized parameters of BS(m,n) = <t, a | t^-1 a^m t = a^n>,
// with 0 < m <= |n|, d = gcd(m, n), m = d*m1, n = d*n1, delta = n - m.
struct BSParams {
  Int m, n, d, m1, n1, delta;
  bool operator==(const BSParams&) const = default;
};

// BS(m,n), BS(n,m) and BS(-m,-n) are pairwise isomorphic; normalization
// applies swaps and double sign flips until 0 < m <= |n|.
enum class NormalizationMove { kSwap, kNegateBoth };

struct BSNormalization {
  BSParams params;
  std::vector<NormalizationMove> moves;  // applied left to right
};

// Throws std::invalid_argument on zero input.
BSNormalization normalize_bs(const Int& m, const Int& n);

// Convenience: normalize and keep only the parameters.
BSParams bs_params(const Int& m, const Int& n);

struct GroupPresentation {
  std::vector<std::string> generator_names;
  std::vector<FreeWord> relators;

  int generator_count() const { return static_cast<int>(generator_names.size()); }
};

// The single relator a^(n-m) t^-1 a^-m t a^m, freely reduced; equivalent to
// t^-1 a^m t = a^n.
FreeWord bs_relator(const BSParams& p);

GroupPresentation bs_presentation(const BSParams& p);

// <t, a | a^m>, the free product Z * Z_m over the same alphabet.
GroupPresentation zzm_presentation(const Int& m);

// Free group on the given generator names (no relators).
GroupPresentation free_presentation(std::vector<std::string> names);

// Words used throughout: t^-k a^mu t^k.
FreeWord conjugated_a_power(const Int& k, const Int& mu);

}  // namespace bsnq

#endif
