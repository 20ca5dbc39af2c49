#include "torusknot/render.hpp"

#include <array>

#include <json.hpp>

#include "torusknot/laurent.hpp"

namespace torusknot {

namespace {

using nlohmann::json;

struct Names {
  const char* sigma;
  const char* arf;
  const char* upsilon;
  const char* d;
  const char* gamma;
  const char* ok;
};

Names names_for(const RenderOptions& opts) {
  if (opts.ascii) return {"sigma", "arf", "upsilon", "d", "g4", "ok"};
  return {"σ", "arf", "υ", "d", "γ₄", "✓"};
}

json knot_json(const TorusKnot& k) { return json{{"p", k.p()}, {"q", k.q()}}; }

json bounds_json(const BoundResult& b) {
  json out;
  out["lower"] = b.lower;
  out["upper"] = b.upper ? json(*b.upper) : json(nullptr);
  out["exact"] = b.exact;
  json prov = json::array();
  for (const auto& entry : b.provenance) {
    prov.push_back(json{{"name", entry.name},
                        {"value", entry.value},
                        {"side", entry.side == BoundSide::Lower ? "lower" : "upper"},
                        {"citation", entry.citation}});
  }
  out["provenance"] = prov;
  return out;
}

std::string upper_to_string(const std::optional<long long>& upper) {
  return upper ? std::to_string(*upper) : "?";
}

}  // namespace

std::string render_invariants(const TorusKnot& k, const RenderOptions& opts,
                              bool dump_alexander) {
  const InvariantRecord record = full_record(k);
  const long long oracle = d_invariant_oracle(k);
  const bool agree = record.d_minus_one_surgery == oracle;
  const Names n = names_for(opts);

  switch (opts.format) {
    case ReportFormat::Json: {
      json out;
      out["knot"] = knot_json(k);
      out["unknot"] = k.is_unknot();
      out["sigma"] = record.sigma_mirror;
      out["arf"] = record.arf;
      out["upsilon"] = record.upsilon;
      out["d"] = record.d_minus_one_surgery;
      out["d_oracle"] = oracle;
      out["d_agree"] = agree;
      if (dump_alexander) {
        json terms = json::array();
        for (const auto& [e, c] : alexander_polynomial(k).terms())
          terms.push_back(json::array({e, c}));
        out["alexander"] = terms;
      }
      return out.dump(2) + "\n";
    }
    case ReportFormat::Csv: {
      std::string out = "p,q,sigma,arf,upsilon,d,d_oracle,agree\n";
      out += std::to_string(k.p()) + "," + std::to_string(k.q()) + "," +
             std::to_string(record.sigma_mirror) + "," + std::to_string(record.arf) +
             "," + std::to_string(record.upsilon) + "," +
             std::to_string(record.d_minus_one_surgery) + "," + std::to_string(oracle) +
             "," + (agree ? "1" : "0") + "\n";
      if (dump_alexander) out += alexander_polynomial(k).to_tsv();
      return out;
    }
    case ReportFormat::Text:
    default: {
      std::string out = to_string(k);
      if (k.is_unknot()) out += "  (unknot: all invariants vanish)";
      out += "\n";
      const auto line = [](std::string label, std::size_t width, const std::string& value) {
        while (width-- > 0) label += ' ';
        return "  " + label + "= " + value + "\n";
      };
      // unicode names are multi-byte, so pad by display width, not size()
      out += line(std::string(n.sigma) + "(p,q)", opts.ascii ? 1 : 2,
                  std::to_string(record.sigma_mirror));
      out += line(n.arf, opts.ascii ? 8 : 5, std::to_string(record.arf));
      out += line(n.upsilon, opts.ascii ? 4 : 7, std::to_string(record.upsilon));
      out += line(std::string(n.d) + "(-1)", opts.ascii ? 6 : 3,
                  std::to_string(record.d_minus_one_surgery) + "   (closed = oracle " +
                      (agree ? n.ok : "MISMATCH") + ")");
      if (dump_alexander) {
        out += "  alexander polynomial (exponent\\tcoefficient):\n";
        out += alexander_polynomial(k).to_tsv();
      }
      return out;
    }
  }
}

std::string render_bounds(const TorusKnot& k, const RenderOptions& opts) {
  const BoundResult b = gamma4_bounds(k);
  const Names n = names_for(opts);

  switch (opts.format) {
    case ReportFormat::Json: {
      json out = bounds_json(b);
      out["knot"] = knot_json(k);
      return out.dump(2) + "\n";
    }
    case ReportFormat::Csv: {
      std::string out = "p,q,g4_lower,g4_upper,exact\n";
      out += std::to_string(k.p()) + "," + std::to_string(k.q()) + "," +
             std::to_string(b.lower) + "," + (b.upper ? std::to_string(*b.upper) : "") +
             "," + (b.exact ? "1" : "0") + "\n";
      return out;
    }
    case ReportFormat::Text:
    default: {
      std::string out = to_string(k) + ": " + n.gamma;
      if (b.exact)
        out += " = " + std::to_string(b.lower) + " (exact)";
      else
        out += " in [" + std::to_string(b.lower) + ", " + upper_to_string(b.upper) + "]";
      out += "\n";
      for (const auto& entry : b.provenance) {
        out += "  ";
        out += entry.side == BoundSide::Lower ? "lower" : "upper";
        out += "  " + entry.name;
        out += std::string(entry.name.size() < 16 ? 16 - entry.name.size() : 1, ' ');
        out += std::to_string(entry.value) + "  [" + entry.citation + "]\n";
      }
      return out;
    }
  }
}

std::string render_table(const Classification& table, const RenderOptions& opts) {
  const Names n = names_for(opts);

  struct RowData {
    const ClassifiedRow* row;
    InvariantRecord record;
    long long mod8;
    long long ups_sigma;
    long long batson;
  };
  std::vector<RowData> rows;
  rows.reserve(table.rows.size());
  for (const auto& row : table.rows) {
    RowData data{&row, full_record(row.knot), 0, 0, 0};
    data.mod8 = (data.record.sigma_mirror + 4 * data.record.arf) % 8;
    data.ups_sigma = upsilon_sigma_lower(row.knot);
    data.batson = batson_lower(row.knot);
    rows.push_back(data);
  }

  switch (opts.format) {
    case ReportFormat::Json: {
      json out;
      out["p"] = table.p;
      out["q_min"] = table.q_min;
      out["q_max"] = table.q_max;
      json jrows = json::array();
      for (const auto& data : rows) {
        json r;
        r["q"] = data.row->q;
        r["residue_2p"] = data.row->residue_2p;
        if (data.row->residue_5) r["residue_5"] = *data.row->residue_5;
        r["sigma"] = data.record.sigma_mirror;
        r["arf"] = data.record.arf;
        r["sigma_arf_mod8"] = data.mod8;
        r["upsilon"] = data.record.upsilon;
        r["ups_sigma_abs"] = data.ups_sigma;
        r["d"] = data.record.d_minus_one_surgery;
        r["batson"] = data.batson;
        r["g4_lower"] = data.row->bounds.lower;
        r["g4_upper"] =
            data.row->bounds.upper ? json(*data.row->bounds.upper) : json(nullptr);
        r["exact"] = data.row->bounds.exact;
        jrows.push_back(r);
      }
      out["rows"] = jrows;
      out["skipped"] = table.skipped;
      return out.dump(2) + "\n";
    }
    case ReportFormat::Csv: {
      std::string out = std::string(kTableCsvHeader) + "\n";
      for (const auto& data : rows) {
        out += std::to_string(data.row->q) + "," +
               std::to_string(data.row->residue_2p) + "," +
               std::to_string(data.record.sigma_mirror) + "," +
               std::to_string(data.record.arf) + "," + std::to_string(data.mod8) + "," +
               std::to_string(data.record.upsilon) + "," +
               std::to_string(data.ups_sigma) + "," +
               std::to_string(data.record.d_minus_one_surgery) + "," +
               std::to_string(data.batson) + "," +
               std::to_string(data.row->bounds.lower) + "," +
               (data.row->bounds.upper ? std::to_string(*data.row->bounds.upper) : "") +
               "," + (data.row->bounds.exact ? "1" : "0") + "\n";
      }
      return out;
    }
    case ReportFormat::Text:
    default: {
      // pad by codepoint count so the unicode column labels line up
      const auto width_of = [](const std::string& s) {
        std::size_t w = 0;
        for (unsigned char ch : s)
          if ((ch & 0xC0) != 0x80) ++w;
        return w;
      };
      const auto pad = [&](const std::string& s, std::size_t w) {
        const std::size_t dw = width_of(s);
        return s + std::string(dw < w ? w - dw : 1, ' ');
      };
      const std::array<std::size_t, 9> widths = {6, 6, 7, 4, 14, 8, 18, 6, 10};

      std::string out = "torus knots T(" + std::to_string(table.p) + ",q), q = " +
                        std::to_string(table.q_min) + ".." + std::to_string(table.q_max) +
                        "\n";
      out += pad("q", widths[0]) + pad("q%2p", widths[1]) + pad(n.sigma, widths[2]) +
             pad("arf", widths[3]) + pad(std::string(n.sigma) + "+4arf%8", widths[4]) +
             pad(n.upsilon, widths[5]) +
             pad("|" + std::string(n.upsilon) + "+" + n.sigma + "/2|", widths[6]) +
             pad(n.d, widths[7]) + pad(std::string(n.sigma) + "/2-" + n.d, widths[8]) +
             n.gamma + "\n";
      for (const auto& data : rows) {
        std::string gamma = data.row->bounds.exact
                                ? std::to_string(data.row->bounds.lower) + " (exact)"
                                : "[" + std::to_string(data.row->bounds.lower) + ", " +
                                      upper_to_string(data.row->bounds.upper) + "]";
        std::string residues = std::to_string(data.row->residue_2p);
        if (data.row->residue_5)
          residues += "/" + std::to_string(*data.row->residue_5);
        out += pad(std::to_string(data.row->q), widths[0]) + pad(residues, widths[1]) +
               pad(std::to_string(data.record.sigma_mirror), widths[2]) +
               pad(std::to_string(data.record.arf), widths[3]) +
               pad(std::to_string(data.mod8), widths[4]) +
               pad(std::to_string(data.record.upsilon), widths[5]) +
               pad(std::to_string(data.ups_sigma), widths[6]) +
               pad(std::to_string(data.record.d_minus_one_surgery), widths[7]) +
               pad(std::to_string(data.batson), widths[8]) + gamma + "\n";
      }
      if (!table.skipped.empty()) {
        out += "skipped (not coprime):";
        for (long long q : table.skipped) out += " " + std::to_string(q);
        out += "\n";
      }
      return out;
    }
  }
}

}  // namespace torusknot
