#include "torusknot/obstructions.hpp"

#include <numeric>

namespace torusknot {

namespace {

bool all_prime_exponents_odd(long long n) {
  // trial division; q stays <= 1e4 in every sweep we run
  for (long long f = 2; f * f <= n; ++f) {
    if (n % f != 0) continue;
    int exponent = 0;
    while (n % f == 0) {
      n /= f;
      ++exponent;
    }
    if (exponent % 2 == 0) return false;
  }
  return true;  // leftover n is prime (exponent 1) or 1
}

// Smallest n in [1, mod-1] with gcd(n, mod) = 1 and -(half) n^2 == +-1 (mod mod).
std::optional<long long> witness_mod(long long half, long long mod) {
  const long long neg_half = (mod - half % mod) % mod;
  for (long long n = 1; n < mod; ++n) {
    if (std::gcd(n, mod) != 1) continue;
    const long long v = (neg_half * ((n * n) % mod)) % mod;
    if (v == 1 || v == mod - 1) return n;
  }
  return std::nullopt;
}

}  // namespace

bool sigma_arf_obstructed(const TorusKnot& k) {
  return (signature_mirror(k) + 4 * arf_invariant(k)) % 8 == 4;
}

long long upsilon_sigma_lower(const TorusKnot& k) {
  const Rational v = Rational(upsilon(k)) + Rational(signature_mirror(k), 2);
  return v.abs().to_integer();
}

long long batson_lower(const TorusKnot& k) {
  const Rational v = Rational(signature_mirror(k), 2) - Rational(d_invariant(k));
  return v.to_integer();
}

bool in_pinch_family(const TorusKnot& k) {
  if (k.is_unknot()) return false;
  const long long r = k.q() % k.p();
  return r == 1 || r == k.p() - 1;
}

PinchStep pinch_reduce(const TorusKnot& k) {
  if (!in_pinch_family(k)) throw NotPinchFamilyError(k);
  const long long p = k.p();
  const long long q = k.q();
  if (p - 2 <= 1) return PinchStep{k, TorusKnot(1, 1)};
  const bool plus = q % p == 1;
  const long long steps = plus ? (q - 1) / p : (q + 1) / p;
  const long long target_q = steps * (p - 2) + (plus ? 1 : -1);
  return PinchStep{k, TorusKnot(p - 2, target_q)};
}

long long theta(const TorusKnot& k) {
  if (!in_pinch_family(k)) throw NotPinchFamilyError(k);
  return k.p() % 2 ? (k.p() - 1) / 2 : k.p() / 2;
}

std::optional<PinchInterval> pinch_theorem_interval(const TorusKnot& k) {
  const long long p = k.p();
  const long long q = k.q();
  if (p <= 3) return std::nullopt;
  const long long r = q % (2 * p);
  if (p % 2 == 1) {
    if (r == p - 1) return PinchInterval{(p - 3) / 2, (p - 1) / 2};
    if (r == p + 1 || r == 2 * p - 1) return PinchInterval{(p - 1) / 2, (p - 1) / 2};
  } else if (r == p - 1 || r == p + 1 || r == 2 * p - 1) {
    return PinchInterval{(p - 2) / 2, p / 2};
  }
  return std::nullopt;
}

bool mobius_family(const TorusKnot& k) {
  const auto hit = [](long long m, long long other) {
    return m >= 3 && m % 2 == 1 && (other % m == 2 || other % m == m - 2);
  };
  return hit(k.p(), k.q()) || hit(k.q(), k.p());
}

ObstructionResult linking_form_obstruction(const TorusKnot& k) {
  if (k.is_unknot())
    return {ObstructionStatus::Inapplicable, std::nullopt, "unknot"};
  if (k.p() % 2 == 1 && k.q() % 2 == 1)
    return {ObstructionStatus::Inapplicable, std::nullopt, "both parameters odd"};

  const long long even = k.p() % 2 == 0 ? k.p() : k.q();
  const long long modulus = k.p() % 2 == 0 ? k.q() : k.p();  // odd, >= 3 here
  const long long half = even / 2;

  // Reduction mod 5: a witness mod q would reduce to one mod 5, so an empty
  // search there already obstructs, whatever the factorization of q.
  if (modulus % 5 == 0 && !witness_mod(half, 5))
    return {ObstructionStatus::Obstructed, std::nullopt, "no witness modulo 5"};

  if (!all_prime_exponents_odd(modulus))
    return {ObstructionStatus::Inapplicable, std::nullopt,
            "q has a prime factor with even exponent"};

  if (auto n = witness_mod(half, modulus))
    return {ObstructionStatus::NotObstructed, n, "witness found"};
  return {ObstructionStatus::Obstructed, std::nullopt, "no witness modulo q"};
}

long long band_move_upper(const TorusKnot& /*from*/, const TorusKnot& /*to*/,
                          long long gamma4_of_to) {
  return gamma4_of_to + 1;
}

}  // namespace torusknot
