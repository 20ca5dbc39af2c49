#include "torusknot/verify.hpp"

#include <algorithm>
#include <numeric>

#include "torusknot/gamma4.hpp"
#include "torusknot/laurent.hpp"
#include "torusknot/obstructions.hpp"

namespace torusknot::verify {

namespace {

std::string pair_tag(long long p, long long q) {
  return "(" + std::to_string(p) + "," + std::to_string(q) + ")";
}

bool all_prime_exponents_odd(long long n) {
  for (long long f = 2; f * f <= n; ++f) {
    if (n % f != 0) continue;
    int e = 0;
    while (n % f == 0) {
      n /= f;
      ++e;
    }
    if (e % 2 == 0) return false;
  }
  return true;
}

CheckResult check_floor_div_bracket(const Hooks& hooks) {
  CheckResult c{.name = "floor-div-bracket"};
  for (long long a = -200; a <= 200; ++a)
    for (long long b = 1; b <= 24; ++b) {
      const long long q = hooks.div(a, b);
      c.record(q * b <= a && a < q * b + b, pair_tag(a, b));
    }
  return c;
}

CheckResult check_alexander_properties(const Options& opts) {
  CheckResult c{.name = "alexander-properties"};
  const long long q_cap = std::min<long long>(opts.q_max, 60);
  for (long long p = 2; p <= q_cap; ++p)
    for (long long q = p + 1; q <= q_cap; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const TorusKnot k(p, q);
      const LaurentPoly delta = alexander_polynomial(k);
      const long long genus2 = (p - 1) * (q - 1);

      bool ok = delta.evaluate_at_one() == 1;
      ok = ok && delta.max_exponent() - delta.min_exponent() == genus2;
      for (const auto& [e, coeff] : delta.terms()) {
        ok = ok && (coeff == 1 || coeff == -1);
        ok = ok && delta.coefficient(-e) == coeff;
      }
      // (1 - t^p)(1 - t^q) * unshifted == (1 - t)(1 - t^{pq})
      const LaurentPoly unshifted = delta.shifted(genus2 / 2);
      LaurentPoly numerator;
      numerator.add_term(0, 1);
      numerator.add_term(1, -1);
      numerator.add_term(p * q, -1);
      numerator.add_term(p * q + 1, 1);
      ok = ok && LaurentPoly::one_minus_power(p) * LaurentPoly::one_minus_power(q) *
                         unshifted ==
                     numerator;
      c.record(ok, pair_tag(p, q));
    }
  return c;
}

CheckResult check_d_vs_oracle(const Options& opts, const Hooks& hooks) {
  CheckResult c{.name = "d-closed-vs-oracle"};
  for (long long p = 2; p <= opts.p_max; ++p)
    for (long long q = p + 1; q <= opts.q_max; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const TorusKnot k(p, q);
      c.record(d_invariant_using(k, hooks.div) == d_invariant_oracle(k), pair_tag(p, q));
    }
  return c;
}

CheckResult check_sigma_closed(const Options& opts) {
  CheckResult c{.name = "sigma-closed-vs-recursion"};
  for (long long p : {5LL, 6LL})
    for (long long q = 1; q <= opts.q_max; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const long long closed = p == 5 ? sigma_closed_p5(q) : sigma_closed_p6(q);
      c.record(closed == signature_mirror(TorusKnot(p, q)), pair_tag(p, q));
    }
  return c;
}

CheckResult check_upsilon_closed(const Options& opts, const Hooks& hooks) {
  CheckResult c{.name = "upsilon-closed-vs-recursion"};
  for (long long p : {5LL, 6LL})
    for (long long q = 1; q <= opts.q_max; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const long long closed = p == 5 ? upsilon_closed_p5(q) : upsilon_closed_p6(q);
      c.record(closed == upsilon_using(TorusKnot(p, q), hooks.upsilon_adjacent),
               pair_tag(p, q));
    }
  return c;
}

CheckResult check_d_piecewise(const Options& opts, const Hooks& hooks) {
  CheckResult c{.name = "d-piecewise-vs-formula"};
  for (long long p : {5LL, 6LL})
    for (long long q = 1; q <= opts.q_max; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const long long closed = p == 5 ? d_closed_p5(q) : d_closed_p6(q);
      c.record(closed == d_invariant_using(TorusKnot(p, q), hooks.div), pair_tag(p, q));
    }
  return c;
}

CheckResult check_sigma_arf_table(const Options& opts) {
  CheckResult c{.name = "sigma-arf-mod8-table"};
  const auto expected_p5 = [](long long q) -> long long {
    switch (q % 10) {
      case 4:
      case 6: return 4;
      default: return 0;
    }
  };
  const auto expected_p6 = [](long long q) -> long long {
    switch (q % 12) {
      case 5: return 4;
      case 7: return 2;
      case 11: return 6;
      default: return 0;  // residue 1
    }
  };
  for (long long p : {5LL, 6LL})
    for (long long q = 2; q <= opts.q_max; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const TorusKnot k(p, q);
      const long long got = (signature_mirror(k) + 4 * arf_invariant(k)) % 8;
      c.record(got == (p == 5 ? expected_p5(q) : expected_p6(q)), pair_tag(p, q));
    }
  return c;
}

CheckResult check_upsilon_sigma_piecewise(const Options& opts, const Hooks& hooks) {
  CheckResult c{.name = "upsilon-sigma-piecewise"};
  const auto expected_p5 = [](long long q) -> long long {
    switch (q % 10) {
      case 6:
      case 9: return 2;
      default: break;
    }
    return q % 5 == 3 ? 1 : 0;
  };
  for (long long p : {5LL, 6LL})
    for (long long q = 2; q <= opts.q_max; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const TorusKnot k(p, q);
      const Rational v = Rational(upsilon_using(k, hooks.upsilon_adjacent)) +
                         Rational(signature_mirror(k), 2);
      const long long expected = p == 5 ? expected_p5(q) : (q % 6 == 5 ? 2 : 0);
      c.record(v.abs().to_integer() == expected, pair_tag(p, q));
    }
  return c;
}

CheckResult check_batson_piecewise(const Options& opts, const Hooks& hooks) {
  CheckResult c{.name = "batson-piecewise"};
  const auto expected_p5 = [](long long q) -> long long {
    switch (q % 10) {
      case 4: return -2;
      case 6: return 2;
      default: return 0;
    }
  };
  const auto expected_p6 = [](long long q) -> long long {
    switch (q % 12) {
      case 5: return 2;
      case 7: return -3;
      case 11: return -1;
      default: return 0;  // residue 1
    }
  };
  for (long long p : {5LL, 6LL})
    for (long long q = 2; q <= opts.q_max; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const TorusKnot k(p, q);
      const Rational v =
          Rational(signature_mirror(k), 2) - Rational(d_invariant_using(k, hooks.div));
      c.record(v.to_integer() == (p == 5 ? expected_p5(q) : expected_p6(q)),
               pair_tag(p, q));
    }
  return c;
}

CheckResult check_truncation_agreement(const Options& opts, const Hooks& hooks) {
  CheckResult c{.name = "truncation-agreement"};
  const long long q_cap = std::min<long long>(opts.q_max, 40);
  for (long long p = 2; p <= std::min(opts.p_max, q_cap); ++p)
    for (long long q = p + 1; q <= q_cap; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const TorusKnot k(p, q);
      const long long half = (p - 1) * (q - 1) / 2;
      const LaurentPoly shifted = alexander_polynomial(k).shifted(half);
      const LaurentPoly truncated = truncated_expansion_using(k, hooks.div);
      bool ok = true;
      for (const auto& [e, coeff] : shifted.terms())
        if (e < half && truncated.coefficient(e) != coeff) ok = false;
      for (const auto& [e, coeff] : truncated.terms())
        if (e < half && shifted.coefficient(e) != coeff) ok = false;
      c.record(ok, pair_tag(p, q));
    }
  return c;
}

CheckResult check_pinch_chains(const Options& opts) {
  CheckResult c{.name = "pinch-chain-length"};
  for (long long p = 2; p <= std::min<long long>(opts.p_max, 12); ++p)
    for (long long k = 1; k <= 20; ++k)
      for (long long sign : {1LL, -1LL}) {
        const long long q = k * p + sign;
        if (q < 2 || std::gcd(p, q) != 1) continue;
        const TorusKnot knot(p, q);
        if (knot.is_unknot()) continue;
        long long steps = 0;
        TorusKnot current = knot;
        while (!current.is_unknot() && steps <= p) {
          current = pinch_reduce(current).to;
          ++steps;
        }
        c.record(current.is_unknot() && steps == theta(knot), pair_tag(p, q));
      }
  return c;
}

CheckResult check_gamma4_consistency(const Options& opts) {
  CheckResult c{.name = "gamma4-consistency"};
  for (long long p = 2; p <= std::min<long long>(opts.p_max, 8); ++p)
    for (long long q = 1; q <= std::min<long long>(opts.q_max, 300); ++q) {
      if (std::gcd(p, q) != 1) continue;
      const TorusKnot k(p, q);
      const BoundResult b = gamma4_bounds(k);

      bool ok = !b.upper || b.lower <= *b.upper;
      ok = ok && b.exact == (b.upper && b.lower == *b.upper);
      ok = ok && (k.is_unknot() ? b.lower == 0 && b.upper == 0 : b.lower >= 1);

      // lower/upper equal the extrema of the provenance entries (the always
      // present nontrivial/unknot entry dominates a negative batson value)
      std::optional<long long> max_low;
      std::optional<long long> min_up;
      for (const auto& entry : b.provenance) {
        if (entry.side == BoundSide::Lower)
          max_low = max_low ? std::max(*max_low, entry.value) : entry.value;
        else
          min_up = min_up ? std::min(*min_up, entry.value) : entry.value;
      }
      ok = ok && max_low == b.lower;
      ok = ok && min_up == b.upper;

      if (const auto fact = curated_fact_for(k)) {
        ok = ok && b.upper && *b.upper <= fact->value;
        if (fact->kind == FactKind::Exact)
          ok = ok && b.exact && b.lower == fact->value;
      }
      c.record(ok, pair_tag(p, q));
    }
  return c;
}

CheckResult check_lower_vs_upper_producers(const Options& opts) {
  CheckResult c{.name = "lower-bounds-vs-uppers"};
  for (long long p = 2; p <= std::min<long long>(opts.p_max, 8); ++p)
    for (long long q = 2; q <= std::min<long long>(opts.q_max, 200); ++q) {
      if (std::gcd(p, q) != 1) continue;
      const TorusKnot k(p, q);
      std::vector<long long> uppers;
      if (mobius_family(k)) uppers.push_back(1);
      if (in_pinch_family(k)) uppers.push_back(theta(k));
      if (const auto interval = pinch_theorem_interval(k)) uppers.push_back(interval->hi);
      bool ok = true;
      for (long long upper : uppers) {
        ok = ok && upsilon_sigma_lower(k) <= upper;
        ok = ok && batson_lower(k) <= upper;
      }
      c.record(ok, pair_tag(p, q));
    }
  return c;
}

CheckResult check_linking_witnesses(const Options& opts) {
  CheckResult c{.name = "linking-form-witnesses"};
  for (long long p : {2LL, 4LL, 6LL, 8LL}) {
    if (p > opts.p_max) continue;
    for (long long q = 3; q <= std::min<long long>(opts.q_max, 200); q += 2) {
      if (std::gcd(p, q) != 1) continue;
      const TorusKnot k(p, q);
      const ObstructionResult r = linking_form_obstruction(k);
      bool ok = (r.status == ObstructionStatus::NotObstructed) == r.witness.has_value();
      if (r.witness) {
        const long long n = *r.witness;
        ok = ok && n >= 1 && n < q && std::gcd(n, q) == 1;
        const long long v = ((q - (p / 2) % q) % q) * ((n * n) % q) % q;
        ok = ok && (v == 1 || v == q - 1);
      }
      c.record(ok, pair_tag(p, q));
    }
  }
  return c;
}

CheckResult check_linking_t6_families(const Options& opts) {
  CheckResult c{.name = "linking-form-t6-families"};
  // q == 1 (mod 12): obstructed when 5 | q; otherwise a witness exists for
  // every odd-exponent q in range except 493 = 17*29, where -3 n^2 == +-1
  // has no solution modulo either prime factor.
  for (long long q = 13; q <= std::min<long long>(opts.q_max, 600); q += 12) {
    if (std::gcd(q, 6LL) != 1) continue;
    if (!all_prime_exponents_odd(q)) continue;
    const ObstructionResult r = linking_form_obstruction(TorusKnot(6, q));
    const bool expect_obstructed = q % 5 == 0 || q == 493;
    c.record(r.status == (expect_obstructed ? ObstructionStatus::Obstructed
                                            : ObstructionStatus::NotObstructed),
             pair_tag(6, q));
  }
  return c;
}

CheckResult check_gamma4_residues_p5(const Options& opts) {
  CheckResult c{.name = "gamma4-residues-p5"};
  for (const auto& row : classify_range(5, 2, opts.q_max).rows) {
    const BoundResult& b = row.bounds;
    bool ok = true;
    const long long r5 = row.q % 5;
    if (r5 == 2 || r5 == 3) {
      ok = b.exact && b.lower == 1;
    } else if (row.q % 10 == 4 || row.q % 10 == 6 || row.q % 10 == 9) {
      ok = b.exact && b.lower == 2;
    } else {  // q == 1 (mod 10): gamma4 lies in {1, 2}
      ok = b.lower >= 1 && b.upper && *b.upper <= 2;
    }
    c.record(ok, pair_tag(5, row.q));
  }
  return c;
}

CheckResult check_gamma4_residues_p6(const Options& opts) {
  CheckResult c{.name = "gamma4-residues-p6"};
  if (opts.q_max < 5) return c;
  for (const auto& row : classify_range(6, 5, opts.q_max).rows) {
    const BoundResult& b = row.bounds;
    const long long r12 = row.q % 12;
    bool ok = true;
    if (r12 == 5 || r12 == 7 || r12 == 11) {
      // gamma4 in {2, 3}
      ok = b.lower >= 2 && b.upper && *b.upper <= 3 && b.lower <= *b.upper;
    } else if (row.q % 5 == 0) {
      ok = b.lower >= 2 && b.upper && *b.upper <= 3;
    } else {
      // gamma4 in {1, 2, 3}
      ok = b.lower >= 1 && b.upper && *b.upper <= 3;
    }
    c.record(ok, pair_tag(6, row.q));
  }
  return c;
}

}  // namespace

Report run_all(const Options& opts, const Hooks& hooks) {
  Report report;
  report.checks.push_back(check_floor_div_bracket(hooks));
  report.checks.push_back(check_alexander_properties(opts));
  report.checks.push_back(check_d_vs_oracle(opts, hooks));
  report.checks.push_back(check_sigma_closed(opts));
  report.checks.push_back(check_upsilon_closed(opts, hooks));
  report.checks.push_back(check_d_piecewise(opts, hooks));
  report.checks.push_back(check_sigma_arf_table(opts));
  report.checks.push_back(check_upsilon_sigma_piecewise(opts, hooks));
  report.checks.push_back(check_batson_piecewise(opts, hooks));
  report.checks.push_back(check_truncation_agreement(opts, hooks));
  report.checks.push_back(check_pinch_chains(opts));
  report.checks.push_back(check_gamma4_consistency(opts));
  report.checks.push_back(check_lower_vs_upper_producers(opts));
  report.checks.push_back(check_linking_witnesses(opts));
  report.checks.push_back(check_linking_t6_families(opts));
  report.checks.push_back(check_gamma4_residues_p5(opts));
  report.checks.push_back(check_gamma4_residues_p6(opts));
  return report;
}

std::string to_tsv(const Report& report) {
  std::string out;
  for (const auto& c : report.checks) {
    out += c.name;
    out += '\t';
    out += std::to_string(c.instances);
    out += '\t';
    out += std::to_string(c.failures);
    out += '\t';
    out += c.failures == 0 ? "-" : c.first_failure;
    out += '\n';
  }
  return out;
}

}  // namespace torusknot::verify
