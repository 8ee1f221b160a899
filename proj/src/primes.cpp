#include "octic/primes.hpp"

#include <array>

#include "octic/error.hpp"

namespace octic {

long Valuation::value() const {
  if (infinite_) throw Error(ErrorCode::InvalidArgument, "valuation is infinite");
  return value_;
}

std::string Valuation::to_string() const { return infinite_ ? "inf" : std::to_string(value_); }

namespace {

constexpr std::array<unsigned, 25> kSmallPrimes = {2,  3,  5,  7,  11, 13, 17, 19, 23,
                                                   29, 31, 37, 41, 43, 47, 53, 59, 61,
                                                   67, 71, 73, 79, 83, 89, 97};

bool strong_probable_prime_base2(const Integer& n) {
  Integer d = n - 1;
  const mp_bitcnt_t s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  Integer x;
  const Integer two = 2;
  mpz_powm(x.get_mpz_t(), two.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  const Integer minus_one = n - 1;
  if (x == 1 || x == minus_one) return true;
  for (mp_bitcnt_t r = 1; r < s; ++r) {
    x = x * x % n;
    if (x == minus_one) return true;
    if (x == 1) return false;
  }
  return false;
}

// Halving modulo odd n.
void half_mod(Integer& x, const Integer& n) {
  if (mpz_odd_p(x.get_mpz_t())) x += n;
  mpz_tdiv_q_2exp(x.get_mpz_t(), x.get_mpz_t(), 1);
}

void reduce(Integer& x, const Integer& n) {
  mpz_mod(x.get_mpz_t(), x.get_mpz_t(), n.get_mpz_t());
}

// Strong Lucas test with Selfridge's method A parameters (P = 1).
bool strong_lucas_probable_prime(const Integer& n) {
  if (mpz_perfect_square_p(n.get_mpz_t())) return false;
  long d_param = 5;
  for (;;) {
    const Integer dz = d_param;
    const int j = mpz_jacobi(dz.get_mpz_t(), n.get_mpz_t());
    if (j == -1) break;
    if (j == 0) {
      Integer a = abs(dz);
      if (a != n) return false;
    }
    d_param = d_param > 0 ? -(d_param + 2) : -d_param + 2;
  }
  const Integer D = d_param;
  const Integer Q = (1 - d_param) / 4;

  Integer d = n + 1;
  const mp_bitcnt_t s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);

  Integer U = 1, V = 1, Qk = Q;
  reduce(Qk, n);
  const long bits = static_cast<long>(mpz_sizeinbase(d.get_mpz_t(), 2));
  for (long b = bits - 2; b >= 0; --b) {
    U = U * V;
    reduce(U, n);
    V = V * V - 2 * Qk;
    reduce(V, n);
    Qk = Qk * Qk;
    reduce(Qk, n);
    if (mpz_tstbit(d.get_mpz_t(), static_cast<mp_bitcnt_t>(b))) {
      Integer u2 = U + V;
      Integer v2 = D * U + V;
      reduce(u2, n);
      reduce(v2, n);
      half_mod(u2, n);
      half_mod(v2, n);
      U = u2;
      V = v2;
      Qk = Qk * Q;
      reduce(Qk, n);
    }
  }
  if (U == 0 || V == 0) return true;
  for (mp_bitcnt_t r = 1; r < s; ++r) {
    V = V * V - 2 * Qk;
    reduce(V, n);
    if (V == 0) return true;
    Qk = Qk * Qk;
    reduce(Qk, n);
  }
  return false;
}

}  // namespace

bool is_probable_prime(const Integer& n) {
  if (n < 2) return false;
  for (unsigned p : kSmallPrimes) {
    if (n == p) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  if (n < 97 * 97) return true;
  return strong_probable_prime_base2(n) && strong_lucas_probable_prime(n);
}

Certainty primality_certainty(const Integer& n) {
  if (!is_probable_prime(n)) return Certainty::Unresolved;
  return mpz_sizeinbase(n.get_mpz_t(), 2) <= 64 ? Certainty::Proven : Certainty::Probable;
}

void require_prime(const Integer& p) {
  if (!is_probable_prime(p)) throw Error(ErrorCode::NotPrime, p.get_str() + " is not a prime");
}

Valuation padic_valuation(const Rational& x, const Integer& p) {
  require_prime(p);
  if (x.is_zero()) return Valuation::infinity();
  Integer scratch;
  const long up = static_cast<long>(
      mpz_remove(scratch.get_mpz_t(), x.raw().get_num_mpz_t(), p.get_mpz_t()));
  const long down = static_cast<long>(
      mpz_remove(scratch.get_mpz_t(), x.raw().get_den_mpz_t(), p.get_mpz_t()));
  return Valuation(up - down);
}

}  // namespace octic
