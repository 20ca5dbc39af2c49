#include "torusknot/laurent.hpp"

#include <utility>

namespace torusknot {

std::string LaurentPoly::to_tsv() const {
  std::string out;
  for (const auto& [e, c] : terms_) {
    out += std::to_string(e);
    out += '\t';
    out += std::to_string(c);
    out += '\n';
  }
  return out;
}

LaurentPoly divide_exact_one_minus_power(LaurentPoly dividend, long long m) {
  if (m < 1) throw std::invalid_argument("divisor exponent must be >= 1");
  // The divisor's leading term is -t^m.  Each step cancels the current top
  // term c*t^e against the quotient term (-c)*t^(e-m) and pushes +c down to
  // exponent e-m, so the top exponent strictly decreases.
  LaurentPoly quotient;
  auto terms = dividend.terms();
  while (!terms.empty()) {
    auto top = std::prev(terms.end());
    long long e = top->first;
    long long c = top->second;
    if (e < m) throw ExactDivisionError();
    terms.erase(top);
    quotient.add_term(e - m, -c);
    auto [it, inserted] = terms.try_emplace(e - m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }
  return quotient;
}

LaurentPoly alexander_polynomial(const TorusKnot& k) {
  const long long p = k.p();
  const long long q = k.q();
  // (1 - t)(1 - t^{pq}) = 1 - t - t^{pq} + t^{pq+1}
  LaurentPoly numerator;
  numerator.add_term(0, 1);
  numerator.add_term(1, -1);
  numerator.add_term(p * q, -1);
  numerator.add_term(p * q + 1, 1);

  LaurentPoly unshifted = divide_exact_one_minus_power(std::move(numerator), p);
  unshifted = divide_exact_one_minus_power(std::move(unshifted), q);
  return unshifted.shifted(-((p - 1) * (q - 1) / 2));
}

SymmetricCoefficients symmetric_coefficients(const LaurentPoly& p) {
  for (const auto& [e, c] : p.terms())
    if (p.coefficient(-e) != c) throw NotSymmetricError(e);

  SymmetricCoefficients out;
  out.a0 = p.coefficient(0);
  if (!p.is_zero() && p.max_exponent() > 0) {
    out.positive.resize(static_cast<std::size_t>(p.max_exponent()), 0);
    for (const auto& [e, c] : p.terms())
      if (e > 0) out.positive[static_cast<std::size_t>(e - 1)] = c;
  }
  return out;
}

LaurentPoly truncated_expansion_using(const TorusKnot& knot, const DivFn& div) {
  const long long p = knot.p();
  const long long q = knot.q();
  if (p < 2 || p >= q)
    throw std::invalid_argument("truncated_expansion requires 2 <= p < q, got " +
                                to_string(knot));
  LaurentPoly out;
  for (long long k = 0; k <= p / 2 - 1; ++k) {
    const long long n_max = div((p - 1 - 2 * k) * q - p - 1, 2 * p);
    for (long long n = 0; n <= n_max; ++n) {
      const long long base = n * p + k * q;
      out.add_term(base, 1);
      out.add_term(base + 1, -1);
    }
  }
  return out;
}

LaurentPoly truncated_expansion(const TorusKnot& knot) {
  return truncated_expansion_using(knot, [](long long a, long long b) {
    return floor_div(a, b);
  });
}

}  // namespace torusknot
