#include "bsnq/presentations.hpp"

#include <stdexcept>

namespace bsnq {

const std::vector<std::string>& bs_generator_names() {
  static const std::vector<std::string> names = {"t", "a"};
  return names;
}

static BSParams params_from_normalized(const Int& m, const Int& n) {
  BSParams p;
  p.m = m;
  p.n = n;
  p.d = gcd(m, n);
  p.m1 = m / p.d;
  p.n1 = n / p.d;
  p.delta = n - m;
  return p;
}

BSNormalization normalize_bs(const Int& m_in, const Int& n_in) {
  if (m_in == 0 || n_in == 0)
    throw std::invalid_argument("normalize_bs: m and n must be nonzero");
  Int m = m_in, n = n_in;
  std::vector<NormalizationMove> moves;
  // Each swap or double flip replaces the pair by an isomorphic one; the loop
  // reaches 0 < m <= |n| in at most three moves.
  while (!(m > 0 && abs(m) <= abs(n))) {
    if (abs(m) > abs(n)) {
      std::swap(m, n);
      moves.push_back(NormalizationMove::kSwap);
    } else {
      m = -m;
      n = -n;
      moves.push_back(NormalizationMove::kNegateBoth);
    }
  }
  return {params_from_normalized(m, n), std::move(moves)};
}

BSParams bs_params(const Int& m, const Int& n) { return normalize_bs(m, n).params; }

FreeWord bs_relator(const BSParams& p) {
  FreeWord w;
  w.append(kGenA, p.delta);
  w.append(kGenT, -1);
  w.append(kGenA, -p.m);
  w.append(kGenT, 1);
  w.append(kGenA, p.m);
  return w;
}

GroupPresentation bs_presentation(const BSParams& p) {
  return {bs_generator_names(), {bs_relator(p)}};
}

GroupPresentation zzm_presentation(const Int& m) {
  if (m < 2) throw std::invalid_argument("zzm_presentation: m must be >= 2");
  return {bs_generator_names(), {FreeWord::generator(kGenA, m)}};
}

GroupPresentation free_presentation(std::vector<std::string> names) {
  return {std::move(names), {}};
}

FreeWord conjugated_a_power(const Int& k, const Int& mu) {
  FreeWord w;
  w.append(kGenT, -k);
  w.append(kGenA, mu);
  w.append(kGenT, k);
  return w;
}

}  // namespace bsnq
