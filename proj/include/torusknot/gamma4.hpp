#pragma once

// Synthesis of all bound producers plus a small curated fact list into a
// final gamma4 interval with per-bound provenance, and the residue-class
// table driver built on top of it.

#include <optional>
#include <string>
#include <vector>

#include "torusknot/knot.hpp"
#include "torusknot/obstructions.hpp"

namespace torusknot {

enum class BoundSide { Lower, Upper };

struct ProvenanceEntry {
  std::string name;      // stable tag, e.g. "sigma-arf", "theta", "curated"
  long long value = 0;   // the bound's value (batson is recorded unclamped)
  BoundSide side = BoundSide::Lower;
  std::string citation;  // human-readable justification
};

// gamma4 interval: lower is always meaningful; upper may be unknown and is
// then reported absent, never guessed.  exact iff upper == lower.
struct BoundResult {
  long long lower = 0;
  std::optional<long long> upper;
  bool exact = false;
  std::vector<ProvenanceEntry> provenance;
};

enum class FactKind { Exact, Upper };

// Hand-audited literature facts; a closed list, no external ingestion.
struct CuratedFact {
  TorusKnot knot;
  FactKind kind = FactKind::Exact;
  long long value = 0;
  std::string citation;
};

const std::vector<CuratedFact>& curated_facts();
std::optional<CuratedFact> curated_fact_for(const TorusKnot& k);

// lower = max of: 1 (nontrivial), 2 (sigma+4*arf), |upsilon + sigma/2|,
// max(batson, 0), the pinch-theorem interval lo, 2 (linking form), and any
// curated exact value.  upper = min of: 1 (Moebius family), theta on the
// pinch family, the pinch-theorem interval hi, curated facts, and one band
// move on top of a pinch target whose own bounds are exact.  The unknot is
// exactly 0.  Every contributing bound appears in the provenance.
BoundResult gamma4_bounds(const TorusKnot& k);

struct ClassifiedRow {
  long long q = 0;
  TorusKnot knot;
  BoundResult bounds;
  long long residue_2p = 0;             // q mod 2p
  std::optional<long long> residue_5;   // q mod 5, reported for p = 6
};

struct Classification {
  long long p = 0;
  long long q_min = 0;
  long long q_max = 0;
  std::vector<ClassifiedRow> rows;      // ascending q, coprime q only
  std::vector<long long> skipped;       // non-coprime q in the range
};

Classification classify_range(long long p, long long q_min, long long q_max);

}  // namespace torusknot
