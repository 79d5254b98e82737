#include "bsnq/arith.hpp"

#include <stdexcept>

namespace bsnq {

Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

std::pair<Int, Int> floor_divmod(const Int& a, const Int& b) {
  if (b == 0) throw std::invalid_argument("floor_divmod: division by zero");
  Int q, r;
  // fdiv for b > 0 and cdiv for b < 0 both leave 0 <= r < |b|.
  if (b > 0)
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  else
    mpz_cdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return {q, r};
}

Int floor_mod(const Int& a, const Int& b) { return floor_divmod(a, b).second; }

Int pow(const Int& base, unsigned long exp) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

bool is_prime(const Int& n) {
  if (n < 2) return false;
  for (Int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::pair<Int, int>> factorize(const Int& n) {
  if (n == 0) throw std::invalid_argument("factorize: zero has no factorization");
  std::vector<std::pair<Int, int>> out;
  Int m = abs(n);
  for (Int d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      int e = 0;
      while (m % d == 0) {
        m /= d;
        ++e;
      }
      out.emplace_back(d, e);
    }
  }
  if (m > 1) out.emplace_back(m, 1);
  return out;
}

int omega(const Int& n) { return static_cast<int>(factorize(n).size()); }

bool is_prime_power(const Int& n) {
  if (n < 2) return false;
  return factorize(n).size() == 1;
}

int mobius(long n) {
  if (n < 1) throw std::invalid_argument("mobius: argument must be positive");
  int count = 0;
  long m = n;
  for (long d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      m /= d;
      if (m % d == 0) return 0;
      ++count;
    }
  }
  if (m > 1) ++count;
  return count % 2 == 0 ? 1 : -1;
}

int valuation(const Int& n, const Int& p) {
  if (n == 0) throw std::invalid_argument("valuation: zero argument");
  if (p < 2) throw std::invalid_argument("valuation: base must be >= 2");
  int r = 0;
  Int m = abs(n);
  while (m % p == 0) {
    m /= p;
    ++r;
  }
  return r;
}

}  // namespace bsnq
