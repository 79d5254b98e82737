#ifndef BSNQ_CLASSIFIER_HPP
#define BSNQ_CLASSIFIER_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bsnq/presentations.hpp"
#include "bsnq/words.hpp"

namespace bsnq {

// Finite symbolic description of an infinite normal-closure generating set.
// A template (mu, nu) stands for the commutators [t^-k a^mu t^k, a^nu] over
// all k in Z; both orientations (mu, nu) and (nu, mu) are listed explicitly
// where a family needs them.
struct GeneratorFamily {
  std::vector<FreeWord> constant_words;
  std::vector<std::pair<Int, Int>> parametric_templates;
  std::vector<FreeWord> extra_words;

  bool empty() const {
    return constant_words.empty() && parametric_templates.empty() && extra_words.empty();
  }
};

struct ResidualReport {
  bool residually_finite = false;
  bool residually_nilpotent = false;
  std::map<Int, bool> residually_p;
  std::string witness_case;
};

// true iff m = 1 or |n| = m.
bool is_residually_finite(const BSParams& p);

// true iff (m = 1 and n != 2) or |n| = m is a positive prime power.
bool is_residually_nilpotent(const BSParams& p);

// true iff m = 1 and n = 1 (mod p), or n = m = p^r, or n = -m with p = 2 and
// m = 2^r (r >= 1). Rejects non-prime p.
bool is_residually_p(const BSParams& p, const Int& prime);

ResidualReport classify(const BSParams& p, const std::vector<Int>& primes);

// All ordered pairs (mu, nu) of positive integers with gcd(mu, nu) = 1 and
// mu * nu = d; there are 2^omega(d) of them.
std::vector<std::pair<Int, Int>> coprime_factor_pairs(const Int& d);

// Generating family of the intersection of the lower central series. The case
// split is on the existence of a prime dividing n1 - m1, which holds exactly
// when |n1 - m1| != 1; without such a prime the family carries the extra
// torsion word a^d (just a when d = 1).
GeneratorFamily gamma_omega_generators(const BSParams& p);

// Whether gamma_omega carries the constant torsion word a^d.
bool gamma_omega_has_torsion_word(const BSParams& p);

// Generating family of the intersection of all finite-index subgroups.
GeneratorFamily n_omega_generators(const BSParams& p);

// Generating family of the intersection of all normal subgroups of p-power
// index. Rejects non-prime q.
GeneratorFamily np_omega_generators(const BSParams& p, const Int& q);

// Generating family of gamma_omega(Z * Z_m) for m >= 2.
GeneratorFamily zzm_gamma_omega_generators(const Int& m);

// Finite truncation: constants, extra words, and every template instantiated
// for |k| <= k_window, all freely reduced.
std::vector<FreeWord> instantiate(const GeneratorFamily& f, long k_window);

}  // namespace bsnq

#endif
