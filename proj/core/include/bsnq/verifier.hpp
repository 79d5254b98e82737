#ifndef BSNQ_VERIFIER_HPP
#define BSNQ_VERIFIER_HPP

#include <map>
#include <string>
#include <vector>

#include "bsnq/classifier.hpp"
#include "bsnq/nq.hpp"
#include "bsnq/presentations.hpp"

namespace bsnq {

enum class Verdict { kPass, kFail, kNotApplicable, kInconclusive };

std::string to_string(Verdict v);

struct CheckInstance {
  std::string description;
  std::string observed;
  std::string expected;
  bool ok = false;
};

// Outcome of one desk-scale check. The verdict is pass exactly when every
// instance matched, not-applicable exactly when the hypothesis of the fact
// being checked excludes the input, and inconclusive when a truncation window
// failed to stabilize. Resource errors propagate as exceptions instead.
struct VerificationReport {
  std::string name;
  std::map<std::string, std::string> params;
  Verdict verdict = Verdict::kPass;
  std::vector<CheckInstance> details;
  std::string note;

  bool passed() const { return verdict == Verdict::kPass; }
};

struct VerifyOptions {
  int class_bound = 5;
  int k_window = 3;
  int exp_window = 2;
  std::vector<Int> primes = {Int(2), Int(3)};
  int sample_size = 200;
  NqOptions nq;
};

// Every instantiated gamma-omega generator lies in each gamma_i of the
// class-c quotient (the necessary half of the generating-set description).
VerificationReport verify_gamma_omega_vanishing(const BSParams& p, int c_max, int k_window,
                                                const NqOptions& nq = {});

// For residually nilpotent groups every instantiated gamma-omega generator is
// the identity element (checked by Britton reduction).
VerificationReport verify_trivial_when_residually_nilpotent(const BSParams& p, int k_window);

// Word identity [a^(d(n1+s)), t] = a^(-s*d) with s = m1 - n1 = +-1, plus the
// coprime specialization [t, a^-m] = a^delta when d = 1; applicable only when
// |m1 - n1| = 1.
VerificationReport verify_unit_difference_identity(const BSParams& p);

// In the class-c quotient, the closure A of the gamma-omega generators
// satisfies [A, G] = A as exponent lattices. The k-window is grown until the
// closure stabilizes; persistent instability is reported as inconclusive.
VerificationReport verify_gamma_omega_commutator_fixed(const BSParams& p, int c_max,
                                                       const NqOptions& nq = {});

// [(t^-k a^d t^k)^x, a^y] and [(t^-k a t^k)^y, (a^d)^x] land in gamma-omega.
VerificationReport verify_power_commutator_membership(const BSParams& p, int c_max, int k_window,
                                                      int exp_window, const NqOptions& nq = {});

// [t^-k a^mu t^k, a^nu] lands in gamma-omega for every coprime pair with
// mu * nu = d.
VerificationReport verify_coprime_commutator_membership(const BSParams& p, int c_max,
                                                        int k_window, const NqOptions& nq = {});

// Closure chain: the finite-index core sits inside gamma-omega, which sits
// inside every p-power-index core, as lattices in the class-c quotient.
VerificationReport verify_closure_chain(const BSParams& p, int c_max,
                                        const std::vector<Int>& primes, const NqOptions& nq = {});

// <a^(q^mu), t> is a Baumslag-Solitar subgroup: its defining relation holds.
// Applicable only when the prime q divides d.
VerificationReport verify_subgroup_relation(const BSParams& p, const Int& q);

// Commutator expansion identities as free-group word identities, and the
// power congruence [x^k, y] = [x,y]^k modulo weight >= 3 in free nilpotent
// quotients.
VerificationReport verify_commutator_identities(int sample_size, const NqOptions& nq = {});

// gr_c is finite for 2 <= c <= c_max with order dividing the Lie-ring bound;
// gr_1 matches the abelianization.
VerificationReport verify_grc_finiteness(const BSParams& p, int c_max, const NqOptions& nq = {});

// In Z * Z_m the emitted gamma-omega generators vanish in every nilpotent
// quotient, yet at least one is a nontrivial group element when m has two or
// more prime factors.
VerificationReport verify_zzm_vanishing(const Int& m, int c_max, int k_window,
                                        const NqOptions& nq = {});

// All checks applicable to BS(m,n), in a fixed order.
std::vector<VerificationReport> verify_all(const BSParams& p, const VerifyOptions& opts);

// Check names for CLI selection.
const std::vector<std::string>& verifier_check_names();
VerificationReport run_named_check(const std::string& name, const BSParams& p,
                                   const VerifyOptions& opts);

}  // namespace bsnq

#endif
