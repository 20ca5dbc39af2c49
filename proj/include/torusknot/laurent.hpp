#pragma once

// Sparse integer Laurent polynomials in one variable, the torus-knot
// Alexander polynomial by exact synthetic division, and the truncated
// double-sum expansion used to cross-check the d-invariant formula.

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "torusknot/knot.hpp"

namespace torusknot {

struct NotSymmetricError : std::domain_error {
  explicit NotSymmetricError(long long exponent)
      : std::domain_error("polynomial is not symmetric at exponent " +
                          std::to_string(exponent)) {}
};

struct ExactDivisionError : std::logic_error {
  ExactDivisionError()
      : std::logic_error("polynomial division left a nonzero remainder") {}
};

// Finite map from exponent to nonzero coefficient.  Exponents may be huge
// (up to (p-1)(q-1) ~ 1e8 for the sweeps we run) while the number of stored
// terms stays small, hence the sparse representation.
class LaurentPoly {
 public:
  using Terms = std::map<long long, long long>;

  LaurentPoly() = default;

  static LaurentPoly constant(long long c) {
    LaurentPoly p;
    p.add_term(0, c);
    return p;
  }
  static LaurentPoly monomial(long long coeff, long long exp) {
    LaurentPoly p;
    p.add_term(exp, coeff);
    return p;
  }
  // 1 - t^m
  static LaurentPoly one_minus_power(long long m) {
    LaurentPoly p;
    p.add_term(0, 1);
    p.add_term(m, -1);
    return p;
  }

  void add_term(long long exp, long long coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(exp, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  long long coefficient(long long exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? 0 : it->second;
  }

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }

  long long min_exponent() const {
    if (is_zero()) throw std::logic_error("zero polynomial has no exponents");
    return terms_.begin()->first;
  }
  long long max_exponent() const {
    if (is_zero()) throw std::logic_error("zero polynomial has no exponents");
    return terms_.rbegin()->first;
  }

  long long evaluate_at_one() const {
    long long s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
  }

  // multiply by t^delta
  LaurentPoly shifted(long long delta) const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e + delta, c);
    return out;
  }

  const Terms& terms() const noexcept { return terms_; }

  LaurentPoly& operator+=(const LaurentPoly& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
    a += b;
    return a;
  }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
    return out;
  }

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  // One line per term, "exponent<TAB>coefficient", ascending exponent.
  std::string to_tsv() const;

 private:
  Terms terms_;
};

// Quotient of `dividend` by (1 - t^m), processing terms highest-exponent
// first; throws ExactDivisionError if the remainder is nonzero.  Dividend
// exponents must be nonnegative.
LaurentPoly divide_exact_one_minus_power(LaurentPoly dividend, long long m);

// Delta_{p,q}(t) = t^{-(p-1)(q-1)/2} (1-t)(1-t^{pq}) / ((1-t^p)(1-t^q)).
// The division is exact; the result is symmetric with coefficients in
// {-1, +1} and value 1 at t = 1.
LaurentPoly alexander_polynomial(const TorusKnot& k);

// Decomposition of a symmetric polynomial as a0 + sum a_i (t^i + t^-i);
// positive[i-1] holds a_i for i = 1..max_exponent (zeros included).
struct SymmetricCoefficients {
  long long a0 = 0;
  std::vector<long long> positive;
};
SymmetricCoefficients symmetric_coefficients(const LaurentPoly& p);

using DivFn = std::function<long long(long long, long long)>;

// Truncation of the power-series identity
//   t^{(p-1)(q-1)/2} Delta_{p,q}(t) = sum_{k=0}^{p-1} sum_{n>=0} t^{np+kq}(1-t)
// to k <= floor(p/2)-1 and n <= floor(((p-1-2k)q - p - 1)/(2p)).  The result
// agrees with the shifted Alexander polynomial on all exponents strictly
// below (p-1)(q-1)/2.  Requires 2 <= p < q.
LaurentPoly truncated_expansion(const TorusKnot& k);

// Same, with an injectable floor division (used by the self-check harness).
LaurentPoly truncated_expansion_using(const TorusKnot& k, const DivFn& div);

}  // namespace torusknot
