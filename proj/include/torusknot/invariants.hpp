#pragma once

// Signature, Arf, upsilon and d-invariant of torus knots.
//
// Sign convention: signature_mirror reports sigma(p,q) = -sigma(T(p,q)) >= 0,
// i.e. the signature of the mirror knot.  All bound computations downstream
// consume that convention.

#include <functional>

#include "torusknot/knot.hpp"

namespace torusknot {

struct UnsupportedParameterError : std::domain_error {
  explicit UnsupportedParameterError(const std::string& what) : std::domain_error(what) {}
};

struct InvariantRecord {
  long long sigma_mirror = 0;          // even, >= 0; 0 iff unknot
  int arf = 0;                         // in {0, 1}
  long long upsilon = 0;               // <= 0; 0 iff unknot
  long long d_minus_one_surgery = 0;   // even, >= 0
};

// sigma(p,q) by the classical recursion: for a >= b,
//   2b < a:       sigma(a,b) = sigma(a-2b,b) + b^2 - (b odd ? 1 : 0)
//   b <= a <= 2b: sigma(a,b) = -sigma(2b-a,b) + b^2 - (b odd ? 1 : 2)
// with bases sigma(a,1) = 0 and sigma(a,2) = a-1, and sigma symmetric.
long long signature_mirror(const TorusKnot& k);

// Piecewise closed forms, valid when one parameter is 5 (or 6); indexed by
// the other parameter's residue.  Throws UnsupportedParameterError otherwise.
long long signature_closed(const TorusKnot& k);
long long sigma_closed_p5(long long q);
long long sigma_closed_p6(long long q);

// 0 if both parameters are odd or the odd one is +-1 mod 8;
// 1 if one parameter is even and the odd one is +-3 mod 8.
int arf_invariant(const TorusKnot& k);

// upsilon(T(p,q)) at t = 1, via the Euclidean descent
//   upsilon(p,q) = upsilon(p, q-p) + upsilon(p, p+1)   (p < q)
// with the adjacent-pair base below; quotient steps are batched so a sweep
// over many q is linear.  Always a nonpositive integer.
long long upsilon(const TorusKnot& k);

// upsilon(p, p+1) = -i(i+1) - p(p-1-2i)/2 with i = floor(p/2).
long long upsilon_adjacent(long long p);

long long upsilon_closed(const TorusKnot& k);
long long upsilon_closed_p5(long long q);
long long upsilon_closed_p6(long long q);

// d(S^3_{-1}(T(p,q))) for p < q:
//   2 * ( floor(p/2) + sum_{k=0}^{floor(p/2)-1} floor(((p-1-2k)q - p - 1)/(2p)) )
// and 0 on the unknot.  Always an even nonnegative integer.
long long d_invariant(const TorusKnot& k);

// Independent route: d = 2 * sum_{j>=1} j*a_j over the symmetric Alexander
// coefficients.  Must agree with d_invariant on every torus knot.
long long d_invariant_oracle(const TorusKnot& k);

long long d_closed(const TorusKnot& k);
long long d_closed_p5(long long q);
long long d_closed_p6(long long q);

InvariantRecord full_record(const TorusKnot& k);

// Injectable variants used by the self-check harness so that a deliberately
// broken floor division or adjacent-pair base is detectable.  The production
// functions above are these with the library defaults.
using DivFn = std::function<long long(long long, long long)>;
using AdjacentFn = std::function<long long(long long)>;
long long d_invariant_using(const TorusKnot& k, const DivFn& div);
long long upsilon_using(const TorusKnot& k, const AdjacentFn& adjacent);

}  // namespace torusknot
