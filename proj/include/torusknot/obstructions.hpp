#pragma once

// Individual lower- and upper-bound producers for the non-orientable
// 4-genus: the sigma+4*arf obstruction, |upsilon + sigma/2|, the d-invariant
// bound, pinch-move machinery, the Moebius-band families, and the linking
// form obstruction on the double branched cover.

#include <optional>
#include <string>

#include "torusknot/invariants.hpp"
#include "torusknot/knot.hpp"

namespace torusknot {

struct NotPinchFamilyError : std::domain_error {
  explicit NotPinchFamilyError(const TorusKnot& k)
      : std::domain_error(to_string(k) + " is not of the form T(p, kp +- 1)") {}
};

// One non-oriented band move T(p, kp+-1) -> T(p-2, k(p-2)+-1); targets with
// a parameter <= 1 collapse to the unknot.
struct PinchStep {
  TorusKnot from;
  TorusKnot to;
};

enum class ObstructionStatus { Obstructed, NotObstructed, Inapplicable };

// Outcome of the linking-form test.  A witness n (present iff NotObstructed)
// satisfies -(p/2) n^2 == +-1 (mod q) with gcd(n, q) = 1.
struct ObstructionResult {
  ObstructionStatus status = ObstructionStatus::Inapplicable;
  std::optional<long long> witness;
  std::string reason;
};

struct PinchInterval {
  long long lo = 0;
  long long hi = 0;
};

// True iff sigma(p,q) + 4*arf == 4 (mod 8); implies gamma4 >= 2.
bool sigma_arf_obstructed(const TorusKnot& k);

// |upsilon + sigma/2|, a lower bound for gamma4.
long long upsilon_sigma_lower(const TorusKnot& k);

// sigma/2 - d(-1-surgery); a lower bound for gamma4, reported unclamped
// (it may be negative, in which case it carries no information).
long long batson_lower(const TorusKnot& k);

// q == +-1 (mod p) for the normalized pair, excluding the unknot.
bool in_pinch_family(const TorusKnot& k);

// The pinch move on T(p, kp+-1); throws NotPinchFamilyError otherwise.
PinchStep pinch_reduce(const TorusKnot& k);

// Minimum number of pinch moves to reach the unknot: (p-1)/2 for odd p,
// p/2 for even p (the q = p-1 reading collapses into the odd case once the
// pair is normalized).  Defined on the pinch family only.
long long theta(const TorusKnot& k);

// gamma4 interval from the pinch-move theorem, present only for p > 3 and
// q in the listed residue classes mod 2p.  When present, hi equals theta.
std::optional<PinchInterval> pinch_theorem_interval(const TorusKnot& k);

// True iff the knot is T(mk +- 2, m) for some odd m >= 3, hence bounds a
// Moebius band (gamma4 <= 1).
bool mobius_family(const TorusKnot& k);

// Linking form on the double branched cover (a Brieskorn sphere when one
// parameter is even, with first homology Z_q for the odd parameter q).
// The form is -(p/2)/q on a generator; the knot can only bound a Moebius
// band if some multiple n of a generator gives -(p/2) n^2 == +-1 (mod q).
//
//   - both parameters odd, or the unknot: Inapplicable
//   - 5 | q and no witness mod 5: Obstructed (the mod-5 reduction applies
//     regardless of the square-factor hypothesis below)
//   - q has a prime factor with even exponent: Inapplicable
//   - otherwise exhaustive search over n in [1, q-1], gcd(n, q) = 1:
//     witness found -> NotObstructed, none -> Obstructed (gamma4 >= 2)
ObstructionResult linking_form_obstruction(const TorusKnot& k);

// gamma4(K) <= gamma4(K') + 1 across one non-oriented band move; with a
// slice target (gamma4 = 0) the bound is exactly 1.
long long band_move_upper(const TorusKnot& from, const TorusKnot& to,
                          long long gamma4_of_to);

}  // namespace torusknot
