#include "torusknot/invariants.hpp"

#include <utility>

#include "torusknot/laurent.hpp"

namespace torusknot {

namespace {

// sigma(a,b) for any order of arguments.  Case (ii) negates the recursive
// value, so we carry a running sign; case (i) subtracts 2b from a, which we
// batch into a single division step.  Both parameters shrink strictly, so
// the loop terminates.
long long sigma_pair(long long a, long long b) {
  if (a < b) std::swap(a, b);
  long long acc = 0;
  long long sign = 1;
  for (;;) {
    if (b == 1) return acc;
    if (b == 2) return acc + sign * (a - 1);
    if (a > 2 * b) {
      long long r = a % (2 * b);  // in [1, 2b-1], coprime to b
      long long steps = (a - r) / (2 * b);
      acc += sign * steps * (b * b - (b % 2 ? 1 : 0));
      a = r;
      if (a < b) std::swap(a, b);
      continue;
    }
    // b <= a <= 2b; a == 2b is impossible for coprime a,b with b >= 3
    acc += sign * (b * b - (b % 2 ? 1 : 2));
    sign = -sign;
    a = 2 * b - a;  // in [1, b-1]
    std::swap(a, b);
  }
}

// Picks the closed-form family: whenever one parameter is `m`, evaluate the
// family with the other parameter in the q slot, even if that q is smaller
// than m.  T(5,6) matches both families and they agree.
template <typename Fn>
long long closed_family(const TorusKnot& k, long long m, Fn fn, bool& matched) {
  if (k.p() == m || k.q() == m) {
    matched = true;
    return fn(k.p() == m ? k.q() : k.p());
  }
  matched = false;
  return 0;
}

}  // namespace

long long signature_mirror(const TorusKnot& k) { return sigma_pair(k.q(), k.p()); }

long long sigma_closed_p5(long long q) {
  switch (q % 10) {
    case 1: return 24 * ((q - 1) / 10);
    case 4: return 24 * ((q - 4) / 10) + 8;
    case 6: return 24 * ((q - 6) / 10) + 16;
    case 9: return 24 * ((q - 9) / 10) + 24;
    default: break;
  }
  switch (q % 5) {
    case 2: return 12 * ((q - 2) / 5) + 4;
    case 3: return 12 * ((q - 3) / 5) + 8;
    default:
      throw UnsupportedParameterError("sigma closed form needs q coprime to 5, got q = " +
                                      std::to_string(q));
  }
}

long long sigma_closed_p6(long long q) {
  switch (q % 6) {
    case 1: return 18 * ((q - 1) / 6);
    case 5: return 18 * ((q - 5) / 6) + 16;
    default:
      throw UnsupportedParameterError("sigma closed form needs q coprime to 6, got q = " +
                                      std::to_string(q));
  }
}

long long signature_closed(const TorusKnot& k) {
  bool matched = false;
  long long v = closed_family(k, 5, sigma_closed_p5, matched);
  if (matched) return v;
  v = closed_family(k, 6, sigma_closed_p6, matched);
  if (matched) return v;
  throw UnsupportedParameterError("signature_closed is defined only when a parameter is 5 or 6, got " +
                                  to_string(k));
}

int arf_invariant(const TorusKnot& k) {
  if (k.p() % 2 == 1 && k.q() % 2 == 1) return 0;
  const long long odd = k.p() % 2 == 1 ? k.p() : k.q();
  const long long r = odd % 8;
  return (r == 3 || r == 5) ? 1 : 0;
}

long long upsilon_adjacent(long long p) {
  const long long i = p / 2;
  // -i(i+1) - p(p-1-2i)/2; the half-integer term always sums to an integer
  const Rational total = Rational(-i * (i + 1)) - Rational(p * (p - 1 - 2 * i), 2);
  return total.to_integer();
}

long long upsilon_using(const TorusKnot& k, const AdjacentFn& adjacent) {
  long long a = k.p();
  long long b = k.q();
  long long total = 0;
  while (a >= 2) {
    total += (b / a) * adjacent(a);
    const long long r = b % a;  // in [1, a-1] by coprimality
    b = a;
    a = r;
  }
  return total;
}

long long upsilon(const TorusKnot& k) { return upsilon_using(k, upsilon_adjacent); }

long long upsilon_closed_p5(long long q) {
  const long long r = q % 5;
  if (r == 0)
    throw UnsupportedParameterError("upsilon closed form needs q coprime to 5, got q = " +
                                    std::to_string(q));
  const long long steps = (q - r) / 5;
  return -6 * steps - (r == 1 ? 0 : r);
}

long long upsilon_closed_p6(long long q) {
  switch (q % 6) {
    case 1: return -9 * ((q - 1) / 6);
    case 5: return -9 * ((q - 5) / 6) - 6;
    default:
      throw UnsupportedParameterError("upsilon closed form needs q coprime to 6, got q = " +
                                      std::to_string(q));
  }
}

long long upsilon_closed(const TorusKnot& k) {
  bool matched = false;
  long long v = closed_family(k, 5, upsilon_closed_p5, matched);
  if (matched) return v;
  v = closed_family(k, 6, upsilon_closed_p6, matched);
  if (matched) return v;
  throw UnsupportedParameterError("upsilon_closed is defined only when a parameter is 5 or 6, got " +
                                  to_string(k));
}

long long d_invariant_using(const TorusKnot& k, const DivFn& div) {
  if (k.is_unknot()) return 0;
  const long long p = k.p();
  const long long q = k.q();
  long long sum = p / 2;
  for (long long j = 0; j <= p / 2 - 1; ++j)
    sum += div((p - 1 - 2 * j) * q - p - 1, 2 * p);
  return 2 * sum;
}

long long d_invariant(const TorusKnot& k) {
  return d_invariant_using(k, [](long long a, long long b) { return floor_div(a, b); });
}

long long d_invariant_oracle(const TorusKnot& k) {
  const SymmetricCoefficients coeffs = symmetric_coefficients(alexander_polynomial(k));
  long long weighted = 0;
  for (std::size_t j = 0; j < coeffs.positive.size(); ++j)
    weighted += static_cast<long long>(j + 1) * coeffs.positive[j];
  return 2 * weighted;
}

long long d_closed_p5(long long q) {
  const long long r = q % 5;
  if (r == 0)
    throw UnsupportedParameterError("d closed form needs q coprime to 5, got q = " +
                                    std::to_string(q));
  return 6 * ((q - r) / 5) + (r == 1 ? 0 : 2 * (r - 1));
}

long long d_closed_p6(long long q) {
  const long long r = q % 12;
  long long offset;
  switch (r) {
    case 1: offset = 0; break;
    case 5: offset = 6; break;
    case 7: offset = 12; break;
    case 11: offset = 18; break;
    default:
      throw UnsupportedParameterError("d closed form needs q coprime to 6, got q = " +
                                      std::to_string(q));
  }
  return 18 * ((q - r) / 12) + offset;
}

long long d_closed(const TorusKnot& k) {
  bool matched = false;
  long long v = closed_family(k, 5, d_closed_p5, matched);
  if (matched) return v;
  v = closed_family(k, 6, d_closed_p6, matched);
  if (matched) return v;
  throw UnsupportedParameterError("d_closed is defined only when a parameter is 5 or 6, got " +
                                  to_string(k));
}

InvariantRecord full_record(const TorusKnot& k) {
  return InvariantRecord{
      .sigma_mirror = signature_mirror(k),
      .arf = arf_invariant(k),
      .upsilon = upsilon(k),
      .d_minus_one_surgery = d_invariant(k),
  };
}

}  // namespace torusknot
