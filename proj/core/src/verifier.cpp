#include "bsnq/verifier.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "bsnq/britton.hpp"
#include "bsnq/free_lie.hpp"
#include "bsnq/free_product.hpp"
#include "bsnq/lattice.hpp"

namespace bsnq {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kPass: return "pass";
    case Verdict::kFail: return "fail";
    case Verdict::kNotApplicable: return "not-applicable";
    case Verdict::kInconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

std::string bs_label(const BSParams& p) {
  return "BS(" + p.m.get_str() + "," + p.n.get_str() + ")";
}

std::string word_str(const FreeWord& w) { return format_word(w, bs_generator_names()); }

void base_params(VerificationReport& r, const BSParams& p) {
  r.params["m"] = p.m.get_str();
  r.params["n"] = p.n.get_str();
}

void finish(VerificationReport& r) {
  if (r.verdict == Verdict::kNotApplicable || r.verdict == Verdict::kInconclusive) return;
  bool ok = std::all_of(r.details.begin(), r.details.end(),
                        [](const CheckInstance& c) { return c.ok; });
  r.verdict = ok ? Verdict::kPass : Verdict::kFail;
}

void add_instance(VerificationReport& r, std::string desc, std::string observed,
                  std::string expected, bool ok) {
  r.details.push_back({std::move(desc), std::move(observed), std::move(expected), ok});
}

// Lowest class where the image of w picks up a nonzero coordinate, or 0 if it
// vanishes through the whole quotient.
int first_nonvanishing_class(const PcPresentation& pc, const FreeWord& w) {
  ExpVec v = pc.image(w);
  int cls = 0;
  for (std::size_t j = 0; j < pc.size(); ++j)
    if (v[j] != 0 && (cls == 0 || pc.weight(j) < cls)) cls = pc.weight(j);
  return cls;
}

void check_vanishing(VerificationReport& r, const PcPresentation& pc,
                     const std::vector<FreeWord>& words) {
  for (const FreeWord& w : words) {
    int bad = first_nonvanishing_class(pc, w);
    add_instance(r, word_str(w),
                 bad == 0 ? "image vanishes" : "image has weight-" + std::to_string(bad) + " part",
                 "image vanishes through class " + std::to_string(pc.cls()), bad == 0);
  }
}

struct StableClosure {
  ExponentLattice lattice;
  bool stable;
  int k_used;
};

StableClosure stable_closure(const PcPresentation& pc, const GeneratorFamily& fam, int k0) {
  auto closure_at = [&](int k) {
    std::vector<FreeWord> words = instantiate(fam, k);
    return normal_closure_lattice(pc, std::span<const FreeWord>(words));
  };
  int k = k0;
  ExponentLattice cur = closure_at(k);
  for (int attempt = 0; attempt <= 2; ++attempt) {
    ExponentLattice next = closure_at(k + 1);
    if (next == cur) return {std::move(cur), true, k};
    cur = std::move(next);
    ++k;
  }
  return {std::move(cur), false, k};
}

FreeWord random_free_word(std::mt19937& rng, int alphabet, int max_syllables) {
  std::uniform_int_distribution<int> len(0, max_syllables);
  std::uniform_int_distribution<int> gen(0, alphabet - 1);
  std::uniform_int_distribution<int> exp(-3, 3);
  FreeWord w;
  int syllables = len(rng);
  for (int i = 0; i < syllables; ++i) {
    int e = exp(rng);
    if (e == 0) e = 1;
    w.append(gen(rng), e);
  }
  return w;
}

}  // namespace

VerificationReport verify_gamma_omega_vanishing(const BSParams& p, int c_max, int k_window,
                                                const NqOptions& nq) {
  VerificationReport r;
  r.name = "gamma-omega-vanishing";
  base_params(r, p);
  r.params["class"] = std::to_string(c_max);
  r.params["k_window"] = std::to_string(k_window);
  PcPresentation pc = nilpotent_quotient(bs_presentation(p), c_max, nq);
  check_vanishing(r, pc, instantiate(gamma_omega_generators(p), k_window));
  finish(r);
  return r;
}

VerificationReport verify_trivial_when_residually_nilpotent(const BSParams& p, int k_window) {
  VerificationReport r;
  r.name = "residually-nilpotent-degeneracy";
  base_params(r, p);
  r.params["k_window"] = std::to_string(k_window);
  if (!is_residually_nilpotent(p)) {
    r.verdict = Verdict::kNotApplicable;
    r.note = bs_label(p) + " is not residually nilpotent";
    return r;
  }
  for (const FreeWord& w : instantiate(gamma_omega_generators(p), k_window)) {
    bool ok = is_identity(p, w);
    add_instance(r, word_str(w), ok ? "reduces to 1" : "nontrivial normal form",
                 "reduces to 1", ok);
  }
  finish(r);
  return r;
}

VerificationReport verify_unit_difference_identity(const BSParams& p) {
  VerificationReport r;
  r.name = "unit-difference-identity";
  base_params(r, p);
  Int s = p.m1 - p.n1;
  if (abs(s) != 1) {
    r.verdict = Verdict::kNotApplicable;
    r.note = "|m1 - n1| != 1";
    return r;
  }
  // m = d(n1 + s), so [a^(d(n1+s)), t] = a^(-s d) holds in the group.
  FreeWord lhs = commutator_word(FreeWord::generator(kGenA, p.d * (p.n1 + s)),
                                 FreeWord::generator(kGenT));
  FreeWord probe = lhs * FreeWord::generator(kGenA, s * p.d);
  bool ok = is_identity(p, probe);
  {
    std::ostringstream desc;
    desc << "[a^" << Int(p.d * (p.n1 + s)).get_str() << ", t] = a^" << Int(-s * p.d).get_str();
    add_instance(r, desc.str(), ok ? "holds" : "fails", "holds", ok);
  }
  if (p.d == 1) {
    // Coprime specialization [t, a^-(n+s)] = a^-s.
    FreeWord lhs2 = commutator_word(FreeWord::generator(kGenT),
                                    FreeWord::generator(kGenA, -(p.n + s)));
    FreeWord probe2 = lhs2 * FreeWord::generator(kGenA, s);
    bool ok2 = is_identity(p, probe2);
    std::ostringstream desc;
    desc << "[t, a^" << Int(-(p.n + s)).get_str() << "] = a^" << Int(-s).get_str();
    add_instance(r, desc.str(), ok2 ? "holds" : "fails", "holds", ok2);
  }
  finish(r);
  return r;
}

VerificationReport verify_gamma_omega_commutator_fixed(const BSParams& p, int c_max,
                                                       const NqOptions& nq) {
  VerificationReport r;
  r.name = "gamma-omega-commutator-fixed";
  base_params(r, p);
  r.params["class"] = std::to_string(c_max);
  PcPresentation pc = nilpotent_quotient(bs_presentation(p), c_max, nq);
  StableClosure sc = stable_closure(pc, gamma_omega_generators(p), c_max);
  r.params["k_window"] = std::to_string(sc.k_used);
  if (!sc.stable) {
    r.verdict = Verdict::kInconclusive;
    r.note = "closure did not stabilize after enlarging the k-window twice";
    return r;
  }
  r.note = "k-window truncation: the check uses the stabilized finite sub-closure";
  ExponentLattice full = full_lattice(pc);
  ExponentLattice comm = commutator_lattice(pc, sc.lattice, full);
  bool ok = comm == sc.lattice;
  add_instance(r, "[closure, G] = closure at class " + std::to_string(c_max),
               ok ? "lattices equal" : "lattices differ", "lattices equal", ok);
  finish(r);
  return r;
}

VerificationReport verify_power_commutator_membership(const BSParams& p, int c_max, int k_window,
                                                      int exp_window, const NqOptions& nq) {
  VerificationReport r;
  r.name = "power-commutator-membership";
  base_params(r, p);
  r.params["class"] = std::to_string(c_max);
  r.params["k_window"] = std::to_string(k_window);
  r.params["exp_window"] = std::to_string(exp_window);
  PcPresentation pc = nilpotent_quotient(bs_presentation(p), c_max, nq);
  std::vector<FreeWord> words;
  for (long k = -k_window; k <= k_window; ++k)
    for (long x = -exp_window; x <= exp_window; ++x)
      for (long y = -exp_window; y <= exp_window; ++y) {
        words.push_back(commutator_word(conjugated_a_power(k, p.d).pow(x),
                                        FreeWord::generator(kGenA, y)));
        words.push_back(commutator_word(conjugated_a_power(k, 1).pow(y),
                                        FreeWord::generator(kGenA, p.d * x)));
      }
  check_vanishing(r, pc, words);
  finish(r);
  return r;
}

VerificationReport verify_coprime_commutator_membership(const BSParams& p, int c_max,
                                                        int k_window, const NqOptions& nq) {
  VerificationReport r;
  r.name = "coprime-commutator-membership";
  base_params(r, p);
  r.params["class"] = std::to_string(c_max);
  r.params["k_window"] = std::to_string(k_window);
  PcPresentation pc = nilpotent_quotient(bs_presentation(p), c_max, nq);
  std::vector<FreeWord> words;
  for (const auto& [mu, nu] : coprime_factor_pairs(p.d))
    for (long k = -k_window; k <= k_window; ++k)
      words.push_back(commutator_word(conjugated_a_power(k, mu), FreeWord::generator(kGenA, nu)));
  check_vanishing(r, pc, words);
  finish(r);
  return r;
}

VerificationReport verify_closure_chain(const BSParams& p, int c_max,
                                        const std::vector<Int>& primes, const NqOptions& nq) {
  VerificationReport r;
  r.name = "closure-chain";
  base_params(r, p);
  r.params["class"] = std::to_string(c_max);
  PcPresentation pc = nilpotent_quotient(bs_presentation(p), c_max, nq);
  StableClosure n_cl = stable_closure(pc, n_omega_generators(p), c_max);
  StableClosure g_cl = stable_closure(pc, gamma_omega_generators(p), c_max);
  if (!n_cl.stable || !g_cl.stable) {
    r.verdict = Verdict::kInconclusive;
    r.note = "closure did not stabilize after enlarging the k-window twice";
    return r;
  }
  add_instance(r, "finite-index core inside gamma-omega",
               g_cl.lattice.contains(n_cl.lattice) ? "contained" : "not contained", "contained",
               g_cl.lattice.contains(n_cl.lattice));
  for (const Int& q : primes) {
    StableClosure np_cl = stable_closure(pc, np_omega_generators(p, q), c_max);
    if (!np_cl.stable) {
      r.verdict = Verdict::kInconclusive;
      r.note = "closure did not stabilize after enlarging the k-window twice";
      return r;
    }
    bool ok = np_cl.lattice.contains(g_cl.lattice);
    add_instance(r, "gamma-omega inside the " + q.get_str() + "-power-index core",
                 ok ? "contained" : "not contained", "contained", ok);
  }
  finish(r);
  return r;
}

VerificationReport verify_subgroup_relation(const BSParams& p, const Int& q) {
  if (!is_prime(q)) throw std::invalid_argument("verify_subgroup_relation: q must be prime");
  VerificationReport r;
  r.name = "subgroup-relation";
  base_params(r, p);
  r.params["q"] = q.get_str();
  int mu = valuation(p.d, q);
  if (mu == 0) {
    r.verdict = Verdict::kNotApplicable;
    r.note = "q does not divide d";
    return r;
  }
  Int qmu = pow(q, mu);
  Int mj = p.m / qmu, nj = p.n / qmu;
  // u = a^(q^mu); check t^-1 u^mj t = u^nj by Britton reduction.
  FreeWord probe;
  probe.append(kGenT, -1);
  probe.append(kGenA, qmu * mj);
  probe.append(kGenT, 1);
  probe.append(kGenA, -qmu * nj);
  bool ok = is_identity(p, probe);
  std::ostringstream desc;
  desc << "with u = a^" << qmu.get_str() << ": t^-1 u^" << mj.get_str() << " t = u^"
       << nj.get_str();
  add_instance(r, desc.str(), ok ? "holds" : "fails", "holds", ok);
  finish(r);
  return r;
}

VerificationReport verify_commutator_identities(int sample_size, const NqOptions& nq) {
  VerificationReport r;
  r.name = "commutator-identities";
  r.params["sample_size"] = std::to_string(sample_size);
  std::mt19937 rng(0x5eedu);
  int bad_left = 0, bad_right = 0;
  for (int i = 0; i < sample_size; ++i) {
    FreeWord a = random_free_word(rng, 3, 3);
    FreeWord b = random_free_word(rng, 3, 3);
    FreeWord c = random_free_word(rng, 3, 3);
    // [ab, c] = [a,c] [[a,c],b] [b,c]
    FreeWord ac = commutator_word(a, c);
    if (commutator_word(a * b, c) != ac * commutator_word(ac, b) * commutator_word(b, c))
      ++bad_left;
    // [a, bc] = [a,c] [a,b] [[a,b],c]
    FreeWord ab = commutator_word(a, b);
    if (commutator_word(a, b * c) !=
        commutator_word(a, c) * ab * commutator_word(ab, c))
      ++bad_right;
  }
  add_instance(r, "[ab,c] expansion on random triples",
               std::to_string(bad_left) + " mismatches", "0 mismatches", bad_left == 0);
  add_instance(r, "[a,bc] expansion on random triples",
               std::to_string(bad_right) + " mismatches", "0 mismatches", bad_right == 0);

  // Power congruences [x^k, y] = [x,y]^k and [x, y^k] = [x,y]^k modulo
  // weight >= 3, in free nilpotent quotients of class 3 and 4.
  GroupPresentation free2 = free_presentation({"x", "y"});
  for (int cls = 3; cls <= 4; ++cls) {
    PcPresentation pc = nilpotent_quotient(free2, cls, nq);
    FreeWord x = FreeWord::generator(0), y = FreeWord::generator(1);
    FreeWord xy = commutator_word(x, y);
    for (int kappa = 1; kappa <= 5; ++kappa) {
      FreeWord lhs1 = commutator_word(x.pow(kappa), y) * xy.pow(-kappa);
      FreeWord lhs2 = commutator_word(x, y.pow(kappa)) * xy.pow(-kappa);
      bool ok1 = pc.in_gamma(lhs1, 2);
      bool ok2 = pc.in_gamma(lhs2, 2);
      add_instance(r,
                   "[x^" + std::to_string(kappa) + ", y] = [x,y]^" + std::to_string(kappa) +
                       " mod weight>=3, class " + std::to_string(cls),
                   ok1 ? "holds" : "fails", "holds", ok1);
      add_instance(r,
                   "[x, y^" + std::to_string(kappa) + "] = [x,y]^" + std::to_string(kappa) +
                       " mod weight>=3, class " + std::to_string(cls),
                   ok2 ? "holds" : "fails", "holds", ok2);
    }
  }
  finish(r);
  return r;
}

VerificationReport verify_grc_finiteness(const BSParams& p, int c_max, const NqOptions& nq) {
  if (c_max < 2) throw std::invalid_argument("verify_grc_finiteness: c_max must be >= 2");
  VerificationReport r;
  r.name = "grc-finiteness";
  base_params(r, p);
  r.params["class"] = std::to_string(c_max);
  PcPresentation pc = nilpotent_quotient(bs_presentation(p), c_max, nq);
  const auto& graded = pc.graded_quotients();

  AbelianInvariants expected1;
  expected1.free_rank = p.delta == 0 ? 2 : 1;
  if (p.delta != 0 && abs(p.delta) > 1) expected1.torsion = {abs(p.delta)};
  bool ok1 = graded[0] == expected1;
  add_instance(r, "gr_1", graded[0].to_string(), expected1.to_string(), ok1);

  FreeLie lie;
  for (int c = 2; c <= c_max; ++c) {
    const AbelianInvariants& inv = graded[c - 1];
    Int bound = grc_order_bound(lie, p, c);
    bool finite = inv.is_finite();
    bool divides = finite && (inv.order() == 0 ? false : bound % inv.order() == 0);
    add_instance(r, "gr_" + std::to_string(c) + " finite", inv.to_string(), "finite rank 0",
                 finite);
    add_instance(r, "|gr_" + std::to_string(c) + "| divides " + bound.get_str(),
                 finite ? inv.order().get_str() : "infinite", "divisor of " + bound.get_str(),
                 divides);
  }
  finish(r);
  return r;
}

VerificationReport verify_zzm_vanishing(const Int& m, int c_max, int k_window,
                                        const NqOptions& nq) {
  if (m < 2) throw std::invalid_argument("verify_zzm_vanishing: m must be >= 2");
  VerificationReport r;
  r.name = "zzm-vanishing";
  r.params["m"] = m.get_str();
  r.params["class"] = std::to_string(c_max);
  r.params["k_window"] = std::to_string(k_window);
  PcPresentation pc = nilpotent_quotient(zzm_presentation(m), c_max, nq);
  std::vector<FreeWord> words = instantiate(zzm_gamma_omega_generators(m), k_window);
  check_vanishing(r, pc, words);
  if (omega(m) >= 2) {
    bool some_nontrivial = std::any_of(words.begin(), words.end(), [&](const FreeWord& w) {
      return !free_product_reduce(m, w).is_identity();
    });
    add_instance(r, "some emitted generator is a nontrivial element of Z * Z_m",
                 some_nontrivial ? "found one" : "all trivial", "found one", some_nontrivial);
  }
  finish(r);
  return r;
}

const std::vector<std::string>& verifier_check_names() {
  static const std::vector<std::string> names = {
      "gamma-omega-vanishing",      "residually-nilpotent-degeneracy",
      "unit-difference-identity",   "gamma-omega-commutator-fixed",
      "power-commutator-membership", "coprime-commutator-membership",
      "closure-chain",              "subgroup-relation",
      "commutator-identities",      "grc-finiteness",
      "zzm-vanishing"};
  return names;
}

VerificationReport run_named_check(const std::string& name, const BSParams& p,
                                   const VerifyOptions& o) {
  if (name == "gamma-omega-vanishing")
    return verify_gamma_omega_vanishing(p, o.class_bound, o.k_window, o.nq);
  if (name == "residually-nilpotent-degeneracy")
    return verify_trivial_when_residually_nilpotent(p, o.k_window);
  if (name == "unit-difference-identity") return verify_unit_difference_identity(p);
  if (name == "gamma-omega-commutator-fixed")
    return verify_gamma_omega_commutator_fixed(p, o.class_bound, o.nq);
  if (name == "power-commutator-membership")
    return verify_power_commutator_membership(p, o.class_bound, o.k_window, o.exp_window, o.nq);
  if (name == "coprime-commutator-membership")
    return verify_coprime_commutator_membership(p, o.class_bound, o.k_window, o.nq);
  if (name == "closure-chain") return verify_closure_chain(p, o.class_bound, o.primes, o.nq);
  if (name == "subgroup-relation") {
    // One report covering every prime divisor of d; vacuous for d = 1.
    VerificationReport merged;
    bool any = false;
    for (const auto& [q, mult] : p.d > 1 ? factorize(p.d)
                                         : std::vector<std::pair<Int, int>>{}) {
      VerificationReport one = verify_subgroup_relation(p, q);
      if (!any) merged = one;
      else
        merged.details.insert(merged.details.end(), one.details.begin(), one.details.end());
      any = true;
    }
    if (!any) {
      merged.name = "subgroup-relation";
      base_params(merged, p);
      merged.verdict = Verdict::kNotApplicable;
      merged.note = "d = 1 has no prime divisors";
      return merged;
    }
    merged.params.erase("q");
    bool ok = std::all_of(merged.details.begin(), merged.details.end(),
                          [](const CheckInstance& c) { return c.ok; });
    merged.verdict = ok ? Verdict::kPass : Verdict::kFail;
    return merged;
  }
  if (name == "commutator-identities") return verify_commutator_identities(o.sample_size, o.nq);
  if (name == "grc-finiteness")
    return verify_grc_finiteness(p, std::max(o.class_bound, 2), o.nq);
  if (name == "zzm-vanishing") {
    if (p.d < 2) {
      VerificationReport r;
      r.name = "zzm-vanishing";
      base_params(r, p);
      r.verdict = Verdict::kNotApplicable;
      r.note = "d = 1: the associated free product is Z * Z_1";
      return r;
    }
    return verify_zzm_vanishing(p.d, o.class_bound, o.k_window, o.nq);
  }
  throw std::invalid_argument("unknown check name: " + name);
}

std::vector<VerificationReport> verify_all(const BSParams& p, const VerifyOptions& opts) {
  std::vector<VerificationReport> out;
  for (const std::string& name : verifier_check_names())
    out.push_back(run_named_check(name, p, opts));
  return out;
}

}  // namespace bsnq
