#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cstdio>
#include <numeric>
#include <string>
#include <vector>

#include "torusknot/gamma4.hpp"
#include "torusknot/laurent.hpp"
#include "torusknot/verify.hpp"

// Acceptance suite.  Each case sweeps one criterion at its full stated range
// and prints a single pass/fail line; run this binary directly to see them
// all.  All comparisons are exact integer equality.

using namespace torusknot;

namespace {

struct Criterion {
  int number;
  std::string title;
  long long instances = 0;
  long long failures = 0;
  std::vector<std::string> details;

  Criterion(int n, std::string t) : number(n), title(std::move(t)) {}

  void record(bool ok, const std::string& tag) {
    ++instances;
    if (!ok) {
      ++failures;
      if (details.size() < 5) details.push_back(tag);
    }
  }

  // prints the summary line and feeds the result to doctest
  void finish() const {
    std::printf("criterion %2d  %s  %s  (%lld instances, %lld failures)\n", number,
                failures == 0 ? "PASS" : "FAIL", title.c_str(), instances, failures);
    for (const auto& d : details) std::printf("              mismatch at %s\n", d.c_str());
    std::fflush(stdout);
    CHECK_MESSAGE(failures == 0, "criterion ", number, ": ", title);
  }
};

std::string tag(long long p, long long q) {
  return "T(" + std::to_string(p) + "," + std::to_string(q) + ")";
}

std::string interval_string(const BoundResult& b) {
  return "[" + std::to_string(b.lower) + ", " +
         (b.upper ? std::to_string(*b.upper) : std::string("?")) + "]";
}

}  // namespace

TEST_CASE("criterion 1: d-invariant formula vs Alexander oracle") {
  Criterion c(1, "d-invariant formula equals the Alexander-coefficient oracle, 2<=p<q<=80");
  const auto start = std::chrono::steady_clock::now();
  for (long long p = 2; p <= 80; ++p)
    for (long long q = p + 1; q <= 80; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const TorusKnot k(p, q);
      c.record(d_invariant(k) == d_invariant_oracle(k), tag(p, q));
    }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.record(seconds <= 60.0, "runtime " + std::to_string(seconds) + "s > 60s");
  c.finish();
}

TEST_CASE("criterion 2: piecewise d reproduction for k = 0..100") {
  Criterion c(2, "piecewise d(6,12k+r) and d(5,5k+r) match the formula, k=0..100");
  for (long long k = 0; k <= 100; ++k) {
    for (long long r : {1LL, 5LL, 7LL, 11LL}) {
      const long long q = 12 * k + r;
      c.record(d_closed_p6(q) == d_invariant(TorusKnot(6, q)), tag(6, q));
    }
    for (long long r : {1LL, 2LL, 3LL, 4LL}) {
      const long long q = 5 * k + r;
      c.record(d_closed_p5(q) == d_invariant(TorusKnot(5, q)), tag(5, q));
    }
  }
  c.finish();
}

TEST_CASE("criterion 3: closed signature vs recursion up to q = 1000") {
  Criterion c(3, "closed sigma(5,q), sigma(6,q) match the recursion, q<=1000");
  c.record(signature_mirror(TorusKnot(6, 5)) == 16, "anchor sigma(6,5)");
  c.record(signature_mirror(TorusKnot(6, 7)) == 18, "anchor sigma(6,7)");
  c.record(signature_mirror(TorusKnot(6, 11)) == 34, "anchor sigma(6,11)");
  for (long long p : {5LL, 6LL})
    for (long long q = 1; q <= 1000; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const long long closed = p == 5 ? sigma_closed_p5(q) : sigma_closed_p6(q);
      c.record(closed == signature_mirror(TorusKnot(p, q)), tag(p, q));
    }
  c.finish();
}

TEST_CASE("criterion 4: closed upsilon vs recursion up to q = 1000") {
  Criterion c(4, "closed upsilon(5,q), upsilon(6,q) match the recursion, q<=1000");
  c.record(upsilon(TorusKnot(6, 1)) == 0, "anchor upsilon(6,1)");
  c.record(upsilon(TorusKnot(6, 5)) == -6, "anchor upsilon(6,5)");
  c.record(upsilon(TorusKnot(6, 7)) == -9, "anchor upsilon(6,7)");
  for (long long p : {5LL, 6LL})
    for (long long q = 1; q <= 1000; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const long long closed = p == 5 ? upsilon_closed_p5(q) : upsilon_closed_p6(q);
      c.record(closed == upsilon(TorusKnot(p, q)), tag(p, q));
    }
  c.finish();
}

TEST_CASE("criterion 5: sigma + 4*arf residue tables up to q = 1000") {
  Criterion c(5, "sigma+4*arf mod 8 matches the mod-10 and mod-12 tables, q<=1000");
  for (long long q = 2; q <= 1000; ++q) {
    if (std::gcd(5LL, q) == 1) {
      const TorusKnot k(5, q);
      const long long got = (signature_mirror(k) + 4 * arf_invariant(k)) % 8;
      const long long expected = (q % 10 == 4 || q % 10 == 6) ? 4 : 0;
      c.record(got == expected, tag(5, q));
    }
    if (std::gcd(6LL, q) == 1) {
      const TorusKnot k(6, q);
      const long long got = (signature_mirror(k) + 4 * arf_invariant(k)) % 8;
      long long expected = 0;
      switch (q % 12) {
        case 5: expected = 4; break;
        case 7: expected = 2; break;
        case 11: expected = 6; break;
        default: expected = 0; break;
      }
      c.record(got == expected, tag(6, q));
    }
  }
  c.finish();
}

TEST_CASE("criterion 6: |upsilon + sigma/2| and sigma/2 - d piecewise values") {
  Criterion c(6, "|upsilon+sigma/2| and sigma/2-d match the piecewise values, q<=1000");
  const auto ups_sigma_p5 = [](long long q) -> long long {
    switch (q % 10) {
      case 6:
      case 9: return 2;
      default: break;
    }
    return q % 5 == 3 ? 1 : 0;
  };
  const auto batson_p5 = [](long long q) -> long long {
    switch (q % 10) {
      case 4: return -2;
      case 6: return 2;
      default: return 0;
    }
  };
  const auto batson_p6 = [](long long q) -> long long {
    switch (q % 12) {
      case 5: return 2;
      case 7: return -3;
      case 11: return -1;
      default: return 0;
    }
  };
  for (long long q = 2; q <= 1000; ++q) {
    if (std::gcd(5LL, q) == 1) {
      const TorusKnot k(5, q);
      c.record(upsilon_sigma_lower(k) == ups_sigma_p5(q), tag(5, q) + " ups-sigma");
      c.record(batson_lower(k) == batson_p5(q), tag(5, q) + " batson");
    }
    if (std::gcd(6LL, q) == 1) {
      const TorusKnot k(6, q);
      c.record(upsilon_sigma_lower(k) == (q % 6 == 5 ? 2 : 0), tag(6, q) + " ups-sigma");
      c.record(batson_lower(k) == batson_p6(q), tag(6, q) + " batson");
    }
  }
  c.finish();
}

TEST_CASE("criterion 7: T(5,q) classification end-to-end") {
  Criterion c(7, "classify_range(5,2,500): exact 1 / exact 2 / [1,2] by residue");
  for (const auto& row : classify_range(5, 2, 500).rows) {
    const BoundResult& b = row.bounds;
    const long long r5 = row.q % 5;
    bool ok = false;
    if (r5 == 2 || r5 == 3) {
      ok = b.exact && b.lower == 1;
    } else if (row.q % 10 == 4 || row.q % 10 == 6 || row.q % 10 == 9) {
      ok = b.exact && b.lower == 2;
    } else {  // q == 1 (mod 10)
      ok = !b.exact && b.lower == 1 && b.upper == 2;
    }
    c.record(ok, tag(5, row.q) + " got " + interval_string(b));
  }
  c.finish();
}

TEST_CASE("criterion 8: T(6,q) classification end-to-end") {
  Criterion c(8, "classify_range(6,5,500): residue pattern with curated refinements");
  // Expected values follow the residue pattern, with the curated knots
  // T(6,5) and T(6,17) pinned exactly to 2 and T(6,13) improved to [1,2].
  for (const auto& row : classify_range(6, 5, 500).rows) {
    const BoundResult& b = row.bounds;
    const long long r12 = row.q % 12;
    bool ok = false;
    if (row.q == 5 || row.q == 17) {
      ok = b.exact && b.lower == 2;
    } else if (row.q == 13) {
      ok = b.lower == 1 && b.upper == 2;
    } else if (r12 == 5 || r12 == 7 || r12 == 11) {
      ok = b.lower == 2 && b.upper == 3;
    } else if (row.q % 5 == 0) {
      ok = b.lower == 2 && b.upper == 3;
    } else {
      ok = b.lower == 1 && b.upper == 3;
    }
    c.record(ok, tag(6, row.q) + " got " + interval_string(b));
  }
  c.finish();
}

TEST_CASE("criterion 9: linking-form obstruction vectors") {
  Criterion c(9, "linking form: obstructed / witnessed / inapplicable vectors");
  for (long long q : {5LL, 25LL, 85LL}) {
    c.record(linking_form_obstruction(TorusKnot(6, q)).status ==
                 ObstructionStatus::Obstructed,
             tag(6, q));
  }
  for (long long q : {13LL, 37LL}) {
    const auto r = linking_form_obstruction(TorusKnot(6, q));
    bool ok = r.status == ObstructionStatus::NotObstructed && r.witness.has_value();
    if (ok) {
      const long long n = *r.witness;
      const long long v = ((q - 3 % q) % q) * ((n * n) % q) % q;
      ok = std::gcd(n, q) == 1 && (v == 1 || v == q - 1);
    }
    c.record(ok, tag(6, q));
  }
  c.record(linking_form_obstruction(TorusKnot(6, 49)).status ==
               ObstructionStatus::Inapplicable,
           tag(6, 49));
  c.finish();
}

TEST_CASE("criterion 10: pinch chains and their lengths") {
  Criterion c(10, "pinch chains reach the unknot in exactly theta steps");

  const auto chain_is = [&](TorusKnot start, const std::vector<TorusKnot>& expected) {
    TorusKnot current = start;
    for (const TorusKnot& next : expected) {
      const PinchStep step = pinch_reduce(current);
      if (!(step.from == current && step.to == next)) return false;
      current = step.to;
    }
    return current.is_unknot();
  };
  c.record(chain_is(TorusKnot(6, 5), {TorusKnot(4, 3), TorusKnot(1, 1)}), "chain (6,5)");
  c.record(chain_is(TorusKnot(6, 13),
                    {TorusKnot(4, 9), TorusKnot(2, 5), TorusKnot(1, 1)}),
           "chain (6,13)");
  c.record(chain_is(TorusKnot(6, 17),
                    {TorusKnot(4, 11), TorusKnot(2, 5), TorusKnot(1, 1)}),
           "chain (6,17)");

  for (long long p = 2; p <= 12; ++p)
    for (long long k = 1; k <= 20; ++k)
      for (long long sign : {-1LL, 1LL}) {
        const long long q = k * p + sign;
        if (q < 2) continue;
        const TorusKnot knot(p, q);
        if (knot.is_unknot()) continue;
        long long steps = 0;
        TorusKnot current = knot;
        while (!current.is_unknot() && steps <= p) {
          current = pinch_reduce(current).to;
          ++steps;
        }
        c.record(current.is_unknot() && steps == theta(knot), tag(p, q));
      }
  c.finish();
}

TEST_CASE("criterion 11: truncation agreement below half degree") {
  Criterion c(11, "truncated expansion equals the shifted polynomial below (p-1)(q-1)/2, q<=40");
  for (long long p = 2; p <= 40; ++p)
    for (long long q = p + 1; q <= 40; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const TorusKnot k(p, q);
      const long long half = (p - 1) * (q - 1) / 2;
      const LaurentPoly shifted = alexander_polynomial(k).shifted(half);
      const LaurentPoly truncated = truncated_expansion(k);
      bool ok = true;
      for (const auto& [e, coeff] : shifted.terms())
        if (e < half && truncated.coefficient(e) != coeff) ok = false;
      for (const auto& [e, coeff] : truncated.terms())
        if (e < half && shifted.coefficient(e) != coeff) ok = false;
      c.record(ok, tag(p, q));
    }
  c.finish();
}

TEST_CASE("criterion 12: mutation sensitivity of the verify sweeps") {
  Criterion c(12, "documented mutations make the verify sweeps fail (exit 1)");
  const verify::Options opts{.p_max = 8, .q_max = 80};

  // mutation A: floor division replaced by C++ truncating division
  verify::Hooks truncating;
  truncating.div = [](long long a, long long b) { return a / b; };
  const verify::Report a = verify::run_all(opts, truncating);
  c.record(a.total_failures() > 0, "mutation A (floor -> truncation) went undetected");
  std::printf("              mutation A: floor division -> truncating division: "
              "%lld sweep failures\n", a.total_failures());

  // mutation B: adjacent-pair upsilon base evaluated at i = floor(p/2) + 1
  verify::Hooks shifted;
  shifted.upsilon_adjacent = [](long long p) {
    const long long i = p / 2 + 1;
    return (-i * (i + 1) * 2 - p * (p - 1 - 2 * i)) / 2;
  };
  const verify::Report b = verify::run_all(opts, shifted);
  c.record(b.total_failures() > 0, "mutation B (i -> i+1) went undetected");
  std::printf("              mutation B: upsilon base with i = floor(p/2)+1: "
              "%lld sweep failures\n", b.total_failures());

  // the unmutated hooks stay green, so the failures above are the mutations'
  const verify::Report clean = verify::run_all(opts);
  c.record(clean.total_failures() == 0, "clean sweep unexpectedly failed");
  c.finish();
}
