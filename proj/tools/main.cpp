// Command-line front end: per-knot invariant reports, gamma4 bound queries,
// residue-class tables and the cross-check sweeps.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "torusknot/render.hpp"
#include "torusknot/verify.hpp"

namespace {

using namespace torusknot;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

const std::map<std::string, ReportFormat> kFormats = {
    {"text", ReportFormat::Text},
    {"csv", ReportFormat::Csv},
    {"json", ReportFormat::Json},
};

struct CommonArgs {
  long long p = 0;
  long long q = 0;
  std::string format = "text";
  bool ascii = false;

  RenderOptions render_options() const { return {kFormats.at(format), ascii}; }
};

void add_format_flags(CLI::App* cmd, CommonArgs* args) {
  cmd->add_option("--format", args->format, "output format")
      ->transform(CLI::IsMember({"text", "csv", "json"}))
      ->default_val("text");
  cmd->add_flag("--ascii", args->ascii, "plain-ascii invariant names");
}

bool write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return true;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) return false;
  out << content;
  return static_cast<bool>(out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact torus-knot invariants and non-orientable 4-genus bounds"};
  app.require_subcommand(1);

  CommonArgs inv_args;
  bool dump_alexander = false;
  auto* inv = app.add_subcommand(
      "invariants", "signature, arf, upsilon and d-invariant of T(p,q)");
  inv->add_option("p", inv_args.p, "first parameter")->required();
  inv->add_option("q", inv_args.q, "second parameter")->required();
  add_format_flags(inv, &inv_args);
  inv->add_flag("--dump-alexander", dump_alexander,
                "also print the Alexander polynomial, one 'exponent<TAB>coefficient' "
                "line per term");

  CommonArgs bounds_args;
  auto* bounds = app.add_subcommand(
      "bounds", "non-orientable 4-genus interval for T(p,q) with provenance");
  bounds->add_option("p", bounds_args.p, "first parameter")->required();
  bounds->add_option("q", bounds_args.q, "second parameter")->required();
  add_format_flags(bounds, &bounds_args);

  CommonArgs table_args;
  long long q_min = 0;
  long long q_max = 0;
  std::string out_path;
  auto* table = app.add_subcommand(
      "table", "per-q invariant and bound table for the knots T(p,q)");
  table->add_option("p", table_args.p, "fixed parameter p")->required();
  table->add_option("q_min", q_min, "first q")->required();
  table->add_option("q_max", q_max, "last q")->required();
  add_format_flags(table, &table_args);
  table->add_option("--out", out_path, "write the table to this file instead of stdout");

  verify::Options verify_opts;
  std::string report_path;
  auto* ver = app.add_subcommand("verify", "run all cross-check sweeps");
  ver->add_option("--p-max", verify_opts.p_max, "largest p in the pair sweeps")
      ->default_val(8);
  ver->add_option("--q-max", verify_opts.q_max, "largest q in the sweeps")
      ->default_val(80);
  ver->add_option("--report", report_path, "also write the report to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (inv->parsed()) {
      std::cout << render_invariants(TorusKnot(inv_args.p, inv_args.q),
                                     inv_args.render_options(), dump_alexander);
      return kExitOk;
    }
    if (bounds->parsed()) {
      std::cout << render_bounds(TorusKnot(bounds_args.p, bounds_args.q),
                                 bounds_args.render_options());
      return kExitOk;
    }
    if (table->parsed()) {
      if (table_args.p < 2) {
        std::cerr << "error: table requires p >= 2\n";
        return kExitUsage;
      }
      const std::string rendered = render_table(
          classify_range(table_args.p, q_min, q_max), table_args.render_options());
      if (!write_output(out_path, rendered)) {
        std::cerr << "error: cannot write to '" << out_path << "'\n";
        return kExitUsage;
      }
      return kExitOk;
    }
    if (ver->parsed()) {
      if (verify_opts.p_max < 2 || verify_opts.q_max < verify_opts.p_max) {
        std::cerr << "error: verify requires 2 <= p-max <= q-max\n";
        return kExitUsage;
      }
      const verify::Report report = verify::run_all(verify_opts);
      const std::string rendered = verify::to_tsv(report);
      std::cout << rendered;
      if (!report_path.empty() && !write_output(report_path, rendered)) {
        std::cerr << "error: cannot write to '" << report_path << "'\n";
        return kExitUsage;
      }
      return report.total_failures() == 0 ? kExitOk : kExitVerifyFailed;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
