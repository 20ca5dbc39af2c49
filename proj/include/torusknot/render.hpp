#pragma once

// Text / CSV / JSON rendering of invariant records, gamma4 bounds and
// classification tables.  Output is deterministic: identical inputs produce
// byte-identical strings.

#include <string>

#include "torusknot/gamma4.hpp"

namespace torusknot {

enum class ReportFormat { Text, Csv, Json };

struct RenderOptions {
  ReportFormat format = ReportFormat::Text;
  bool ascii = false;  // replace the unicode invariant names
};

// Fixed CSV header for classification tables.
inline constexpr const char* kTableCsvHeader =
    "q,residue_2p,sigma,arf,sigma_arf_mod8,upsilon,ups_sigma_abs,d,batson,"
    "g4_lower,g4_upper,exact";

std::string render_invariants(const TorusKnot& k, const RenderOptions& opts,
                              bool dump_alexander);
std::string render_bounds(const TorusKnot& k, const RenderOptions& opts);
std::string render_table(const Classification& table, const RenderOptions& opts);

}  // namespace torusknot
