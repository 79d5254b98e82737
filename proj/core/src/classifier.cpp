#include "bsnq/classifier.hpp"

#include <algorithm>
#include <stdexcept>

namespace bsnq {

bool is_residually_finite(const BSParams& p) { return p.m == 1 || abs(p.n) == p.m; }

bool is_residually_nilpotent(const BSParams& p) {
  if (p.m == 1) return p.n != 2;
  return abs(p.n) == p.m && is_prime_power(p.m);
}

bool is_residually_p(const BSParams& p, const Int& prime) {
  if (!is_prime(prime)) throw std::invalid_argument("is_residually_p: p must be prime");
  if (p.m == 1 && floor_mod(p.n, prime) == 1) return true;
  if (p.n == p.m && p.m != 1) {
    auto f = factorize(p.m);
    if (f.size() == 1 && f[0].first == prime) return true;
  }
  if (p.n == -p.m && prime == 2 && p.m != 1) {
    auto f = factorize(p.m);
    if (f.size() == 1 && f[0].first == 2) return true;
  }
  return false;
}

ResidualReport classify(const BSParams& p, const std::vector<Int>& primes) {
  ResidualReport r;
  r.residually_finite = is_residually_finite(p);
  r.residually_nilpotent = is_residually_nilpotent(p);
  for (const Int& q : primes) r.residually_p[q] = is_residually_p(p, q);
  if (r.residually_nilpotent)
    r.witness_case = p.m == 1 ? "residually-nilpotent:m=1" : "residually-nilpotent:prime-power";
  else if (gamma_omega_has_torsion_word(p))
    r.witness_case =
        p.d == 1 ? "gamma-omega:closure-of-a" : "gamma-omega:torsion-and-commutators";
  else
    r.witness_case = "gamma-omega:commutators-only";
  return r;
}

std::vector<std::pair<Int, Int>> coprime_factor_pairs(const Int& d) {
  if (d < 1) throw std::invalid_argument("coprime_factor_pairs: d must be positive");
  // One prime power per distinct prime goes entirely to one side.
  auto factors = factorize(d);
  std::vector<std::pair<Int, Int>> pairs = {{1, d}};
  for (const auto& [prime, mult] : factors) {
    Int q = pow(prime, mult);
    std::size_t count = pairs.size();
    for (std::size_t i = 0; i < count; ++i) {
      auto [mu, nu] = pairs[i];
      pairs.emplace_back(mu * q, nu / q);
    }
  }
  if (d == 1) pairs = {{1, 1}};
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  return pairs;
}

bool gamma_omega_has_torsion_word(const BSParams& p) {
  // A prime divides n1 - m1 iff |n1 - m1| != 1 (every prime divides 0).
  return abs(p.n1 - p.m1) == 1;
}

GeneratorFamily gamma_omega_generators(const BSParams& p) {
  GeneratorFamily f;
  bool torsion = gamma_omega_has_torsion_word(p);
  if (p.d == 1) {
    // Degenerate coprime case: either the closure of a alone, or the single
    // commutator family [t^-k a t^k, a].
    if (torsion)
      f.constant_words.push_back(FreeWord::generator(kGenA));
    else
      f.parametric_templates.emplace_back(1, 1);
    return f;
  }
  if (torsion) f.constant_words.push_back(FreeWord::generator(kGenA, p.d));
  f.parametric_templates = coprime_factor_pairs(p.d);
  return f;
}

GeneratorFamily n_omega_generators(const BSParams& p) {
  GeneratorFamily f;
  f.parametric_templates.emplace_back(p.d, 1);
  return f;
}

GeneratorFamily np_omega_generators(const BSParams& p, const Int& q) {
  if (!is_prime(q)) throw std::invalid_argument("np_omega_generators: q must be prime");
  int r = valuation(p.m, q);
  int s = valuation(p.n, q);
  Int m1p = p.m / pow(q, r);
  Int n1p = p.n / pow(q, s);
  GeneratorFamily f;
  if (r != s || floor_mod(m1p - n1p, q) != 0) {
    int xi = std::min(r, s);
    f.constant_words.push_back(FreeWord::generator(kGenA, pow(q, xi)));
    return f;
  }
  Int dp = gcd(m1p, n1p);
  Int u = m1p / dp;
  Int v = n1p / dp;
  Int qr = pow(q, r);
  FreeWord w;
  w.append(kGenT, -1);
  w.append(kGenA, qr * u);
  w.append(kGenT, 1);
  w.append(kGenA, -qr * v);
  f.extra_words.push_back(w);
  f.parametric_templates.emplace_back(qr, 1);
  return f;
}

GeneratorFamily zzm_gamma_omega_generators(const Int& m) {
  if (m < 2) throw std::invalid_argument("zzm_gamma_omega_generators: m must be >= 2");
  GeneratorFamily f;
  f.parametric_templates = coprime_factor_pairs(m);
  return f;
}

std::vector<FreeWord> instantiate(const GeneratorFamily& f, long k_window) {
  if (k_window < 0) throw std::invalid_argument("instantiate: k_window must be >= 0");
  std::vector<FreeWord> words = f.constant_words;
  words.insert(words.end(), f.extra_words.begin(), f.extra_words.end());
  for (const auto& [mu, nu] : f.parametric_templates)
    for (long k = -k_window; k <= k_window; ++k)
      words.push_back(
          commutator_word(conjugated_a_power(k, mu), FreeWord::generator(kGenA, nu)));
  return words;
}

}  // namespace bsnq
