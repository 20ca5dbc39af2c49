#include "torusknot/gamma4.hpp"

#include <algorithm>
#include <numeric>

namespace torusknot {

const std::vector<CuratedFact>& curated_facts() {
  static const std::vector<CuratedFact> facts = {
      {TorusKnot(6, 5), FactKind::Exact, 2,
       "non-oriented band move to the Moebius-band knot T(3,4); lower bound from sigma + 4*arf"},
      {TorusKnot(6, 17), FactKind::Exact, 2,
       "non-oriented band move to a Moebius-band T(4,q) knot; lower bound from sigma + 4*arf"},
      {TorusKnot(6, 13), FactKind::Upper, 2,
       "non-oriented band move to T(4,9), which has gamma4 = 1"},
      {TorusKnot(4, 9), FactKind::Exact, 1,
       "Lobb's counterexample to the non-orientable Milnor conjecture"},
  };
  return facts;
}

std::optional<CuratedFact> curated_fact_for(const TorusKnot& k) {
  for (const auto& fact : curated_facts())
    if (fact.knot == k) return fact;
  return std::nullopt;
}

BoundResult gamma4_bounds(const TorusKnot& k) {
  BoundResult result;

  if (k.is_unknot()) {
    result.lower = 0;
    result.upper = 0;
    result.exact = true;
    result.provenance.push_back({"unknot", 0, BoundSide::Lower, "unknot bounds a disk"});
    result.provenance.push_back({"unknot", 0, BoundSide::Upper, "unknot bounds a disk"});
    return result;
  }

  std::vector<long long> lows;
  std::vector<long long> ups;
  const auto add_lower = [&](const std::string& name, long long value,
                             long long effective, const std::string& citation) {
    result.provenance.push_back({name, value, BoundSide::Lower, citation});
    lows.push_back(effective);
  };
  const auto add_upper = [&](const std::string& name, long long value,
                             const std::string& citation) {
    result.provenance.push_back({name, value, BoundSide::Upper, citation});
    ups.push_back(value);
  };

  add_lower("nontrivial", 1, 1, "nontrivial knot");

  if (sigma_arf_obstructed(k))
    add_lower("sigma-arf", 2, 2, "sigma + 4*arf == 4 (mod 8)");

  const long long us = upsilon_sigma_lower(k);
  add_lower("upsilon-sigma", us, us, "|upsilon + sigma/2|");

  // recorded unclamped; a negative value carries no information
  const long long batson = batson_lower(k);
  add_lower("batson", batson, std::max<long long>(batson, 0),
            "sigma/2 - d(-1-surgery)");

  const auto interval = pinch_theorem_interval(k);
  if (interval) {
    add_lower("pinch-interval", interval->lo, interval->lo,
              "pinch-move theorem, residue of q mod 2p");
    add_upper("pinch-interval", interval->hi, "pinch-move theorem, residue of q mod 2p");
  }

  const ObstructionResult linking = linking_form_obstruction(k);
  if (linking.status == ObstructionStatus::Obstructed)
    add_lower("linking-form", 2, 2,
              "linking form of the double branched cover obstructs a Moebius band (" +
                  linking.reason + ")");

  if (mobius_family(k))
    add_upper("mobius-band", 1, "torus knot of the form T(mk +- 2, m), m odd");

  if (in_pinch_family(k)) {
    add_upper("theta", theta(k), "pinch moves to the unknot");
    const PinchStep step = pinch_reduce(k);
    const BoundResult target = gamma4_bounds(step.to);
    if (target.exact)
      add_upper("band-move", band_move_upper(k, step.to, target.lower),
                "one non-oriented band move to " + to_string(step.to) +
                    " with gamma4 = " + std::to_string(target.lower));
  }

  if (const auto fact = curated_fact_for(k)) {
    add_upper("curated", fact->value, fact->citation);
    if (fact->kind == FactKind::Exact)
      add_lower("curated", fact->value, fact->value, fact->citation);
  }

  result.lower = *std::max_element(lows.begin(), lows.end());
  if (!ups.empty()) result.upper = *std::min_element(ups.begin(), ups.end());
  result.exact = result.upper.has_value() && result.lower == *result.upper;
  return result;
}

Classification classify_range(long long p, long long q_min, long long q_max) {
  if (p < 2) throw std::invalid_argument("classify_range requires p >= 2");
  if (q_min > q_max || q_min < 1)
    throw std::invalid_argument("classify_range requires 1 <= q_min <= q_max");

  Classification out;
  out.p = p;
  out.q_min = q_min;
  out.q_max = q_max;
  for (long long q = q_min; q <= q_max; ++q) {
    if (std::gcd(p, q) != 1) {
      out.skipped.push_back(q);
      continue;
    }
    const TorusKnot knot(p, q);
    ClassifiedRow row{q, knot, gamma4_bounds(knot), q % (2 * p), std::nullopt};
    if (p == 6) row.residue_5 = q % 5;
    out.rows.push_back(std::move(row));
  }
  return out;
}

}  // namespace torusknot
