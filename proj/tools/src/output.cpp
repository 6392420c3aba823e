#include <fstream>
#include <json.hpp>
#include <sstream>

#include "augopt/format.hpp"
#include "augopt/harness.hpp"

namespace augopt::harness {

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  out << text;
  out.flush();
  if (!out) throw Error("write failed: " + path.string());
}

}  // namespace

std::string results_csv(const std::vector<ResultRow>& rows, ExperimentKind kind) {
  const auto columns = metric_columns(kind);
  std::ostringstream out;
  out << "experiment,seed,sweep_value";
  for (const auto& c : columns) out << ',' << c;
  out << ",pass,error\n";
  for (const auto& r : rows) {
    if (r.metrics.size() != columns.size()) {
      throw Error("results_csv: row has " + std::to_string(r.metrics.size()) + " metrics, schema has " +
                  std::to_string(columns.size()));
    }
    out << csv_field(r.experiment) << ',' << r.seed << ',' << format_double(r.sweep_value);
    for (const auto& m : r.metrics) out << ',' << (m ? format_double(*m) : "NA");
    out << ',' << (r.pass ? "true" : "false") << ',' << (r.error.empty() ? "NA" : csv_field(r.error))
        << '\n';
  }
  return out.str();
}

Manifest write_results(const std::vector<ResultRow>& rows, const ExperimentConfig& cfg,
                       const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error("cannot create " + dir.string() + ": " + ec.message());

  Manifest m;
  m.csv_path = dir / "results.csv";
  m.json_path = dir / "manifest.json";
  m.rows = rows.size();

  nlohmann::ordered_json row_pass = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    row_pass.push_back({{"seed", r.seed}, {"sweep_value", r.sweep_value}, {"pass", r.pass}});
    if (r.pass) ++m.passed;
  }
  m.all_pass = m.passed == m.rows;

  nlohmann::ordered_json j;
  j["tool"] = "augopt";
  j["version"] = kToolVersion;
  j["experiment"] = to_string(cfg.experiment);
  j["config"] = nlohmann::ordered_json::parse(config_json(cfg, -1));
  j["seeds"] = cfg.seeds;
  j["columns"] = metric_columns(cfg.experiment);
  j["rows"] = m.rows;
  j["passed"] = m.passed;
  j["all_pass"] = m.all_pass;
  j["row_pass"] = row_pass;

  write_file(m.csv_path, results_csv(rows, cfg.experiment));
  write_file(m.json_path, j.dump(2) + "\n");
  return m;
}

}  // namespace augopt::harness
