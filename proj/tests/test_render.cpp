#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "torusknot/render.hpp"
#include "torusknot/verify.hpp"

using namespace torusknot;
using nlohmann::json;

namespace {

const RenderOptions kText{ReportFormat::Text, false};
const RenderOptions kAsciiText{ReportFormat::Text, true};
const RenderOptions kCsv{ReportFormat::Csv, false};
const RenderOptions kJson{ReportFormat::Json, false};

}  // namespace

TEST_CASE("rendering is deterministic") {
  const TorusKnot k(6, 13);
  CHECK(render_invariants(k, kJson, true) == render_invariants(k, kJson, true));
  CHECK(render_bounds(k, kCsv) == render_bounds(k, kCsv));
  const Classification table = classify_range(6, 5, 29);
  CHECK(render_table(table, kCsv) == render_table(table, kCsv));
  CHECK(render_table(table, kJson) == render_table(table, kJson));
}

TEST_CASE("invariants json round-trips every numeric field") {
  const json out = json::parse(render_invariants(TorusKnot(6, 5), kJson, true));
  CHECK(out.at("knot").at("p").get<long long>() == 5);
  CHECK(out.at("knot").at("q").get<long long>() == 6);
  CHECK(out.at("sigma").get<long long>() == 16);
  CHECK(out.at("arf").get<int>() == 1);
  CHECK(out.at("upsilon").get<long long>() == -6);
  CHECK(out.at("d").get<long long>() == 6);
  CHECK(out.at("d_oracle").get<long long>() == 6);
  CHECK(out.at("d_agree").get<bool>());
  CHECK_FALSE(out.at("unknot").get<bool>());
  // the dumped polynomial parses back to integer (exponent, coefficient) pairs
  long long at_one = 0;
  for (const auto& term : out.at("alexander")) at_one += term.at(1).get<long long>();
  CHECK(at_one == 1);
}

TEST_CASE("bounds json carries the provenance") {
  const json out = json::parse(render_bounds(TorusKnot(6, 13), kJson));
  CHECK(out.at("lower").get<long long>() == 1);
  CHECK(out.at("upper").get<long long>() == 2);
  CHECK_FALSE(out.at("exact").get<bool>());
  CHECK(out.at("provenance").is_array());
  CHECK(out.at("provenance").size() > 0);
  for (const auto& entry : out.at("provenance")) {
    CHECK(entry.contains("name"));
    CHECK(entry.contains("value"));
    CHECK(entry.contains("side"));
    CHECK(entry.contains("citation"));
  }
}

TEST_CASE("absent upper bounds render as null / question mark / empty") {
  const TorusKnot k(7, 10);
  const json out = json::parse(render_bounds(k, kJson));
  CHECK(out.at("upper").is_null());
  CHECK(render_bounds(k, kAsciiText).find("?") != std::string::npos);
  CHECK(render_bounds(k, kCsv).find(",,") != std::string::npos);
}

TEST_CASE("table csv has the fixed header and one row per coprime q") {
  const std::string csv = render_table(classify_range(6, 5, 29), kCsv);
  CHECK(csv.rfind("q,residue_2p,sigma,arf,sigma_arf_mod8,upsilon,ups_sigma_abs,d,"
                  "batson,g4_lower,g4_upper,exact\n",
                  0) == 0);
  // q in {5,7,11,13,17,19,23,25,29}
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 10);
}

TEST_CASE("table rows carry the documented residue-class columns") {
  const json out = json::parse(render_table(classify_range(6, 5, 29), kJson));
  for (const auto& row : out.at("rows")) {
    const long long q = row.at("q").get<long long>();
    const long long mod8 = row.at("sigma_arf_mod8").get<long long>();
    switch (q % 12) {
      case 1: CHECK(mod8 == 0); break;
      case 5: CHECK(mod8 == 4); break;
      case 7: CHECK(mod8 == 2); break;
      case 11: CHECK(mod8 == 6); break;
      default: FAIL("unexpected residue");
    }
    const long long batson = row.at("batson").get<long long>();
    switch (q % 12) {
      case 1: CHECK(batson == 0); break;
      case 5: CHECK(batson == 2); break;
      case 7: CHECK(batson == -3); break;
      case 11: CHECK(batson == -1); break;
      default: break;
    }
    CHECK(row.at("residue_5").get<long long>() == q % 5);
  }
  const json p5 = json::parse(render_table(classify_range(5, 1, 41), kJson));
  for (const auto& row : p5.at("rows")) {
    const long long q = row.at("q").get<long long>();
    if (q % 10 == 4) CHECK(row.at("sigma_arf_mod8").get<long long>() == 4);
    CHECK_FALSE(row.contains("residue_5"));
  }
}

TEST_CASE("text rendering honours the ascii flag") {
  const std::string unicode = render_bounds(TorusKnot(5, 6), kText);
  const std::string ascii = render_bounds(TorusKnot(5, 6), kAsciiText);
  CHECK(unicode.find("γ₄") != std::string::npos);
  CHECK(ascii.find("g4") != std::string::npos);
  CHECK(ascii.find("γ") == std::string::npos);
  CHECK(ascii.find("exact") != std::string::npos);
}

TEST_CASE("verify report is one tab-separated line per check") {
  const verify::Report report = verify::run_all({.p_max = 3, .q_max = 12});
  CHECK(report.total_failures() == 0);
  const std::string tsv = verify::to_tsv(report);
  std::size_t lines = 0;
  for (std::size_t pos = 0; (pos = tsv.find('\n', pos)) != std::string::npos; ++pos)
    ++lines;
  CHECK(lines == report.checks.size());
  for (const auto& check : report.checks) {
    CHECK(tsv.find(check.name + "\t") != std::string::npos);
  }
  CHECK(tsv.find("\t-\n") != std::string::npos);
}
