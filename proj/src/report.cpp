#include "aliquot/report.hpp"

#include <map>

#include "aliquot/error.hpp"

namespace aliquot {

using nlohmann::json;

Format parse_format(std::string_view name) {
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  throw ParameterError("format", "expected json or csv, got '" + std::string(name) + "'");
}

namespace {

json provenance_json(const Provenance& p) {
  return json{{"tool_version", p.tool_version},
              {"timestamp", p.timestamp},
              {"wall_seconds", p.wall_seconds}};
}

Provenance provenance_from(const json& j) {
  Provenance p;
  p.tool_version = j.at("tool_version").get<std::string>();
  p.timestamp = j.at("timestamp").get<std::string>();
  p.wall_seconds = j.at("wall_seconds").get<double>();
  return p;
}

json to_json(const ExperimentReport& r) {
  json j{{"experiment", r.experiment}, {"parameters", r.parameters}, {"results", r.results}};
  if (r.provenance) j["provenance"] = provenance_json(*r.provenance);
  return j;
}

std::string render_cell(const json& value) {
  return value.is_string() ? value.get<std::string>() : value.dump();
}

json parse_cell(const std::string& text) {
  json parsed = json::parse(text, nullptr, false);
  if (parsed.is_discarded() || parsed.is_string() || parsed.is_object() || parsed.is_null()) {
    return text;
  }
  return parsed;
}

std::string quote_csv(const std::string& cell) {
  if (cell.find_first_of(",\"\r\n") == std::string::npos) return cell;
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::map<std::string, json> flatten(const ExperimentReport& r) {
  std::map<std::string, json> cols;
  cols["experiment"] = r.experiment;
  for (const auto& [k, v] : r.parameters.items()) cols["parameters." + k] = v;
  for (const auto& [k, v] : r.results.items()) cols["results." + k] = v;
  if (r.provenance) {
    const json prov = provenance_json(*r.provenance);
    for (const auto& [k, v] : prov.items()) cols["provenance." + k] = v;
  }
  return cols;
}

std::vector<std::vector<std::string>> split_csv(std::string_view text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string cell;
  bool quoted = false;
  bool any = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"' && i + 1 < text.size() && text[i + 1] == '"') {
        cell += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cell += c;
      }
      continue;
    }
    any = true;
    if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      row.push_back(std::move(cell));
      cell.clear();
    } else if (c == '\n' || c == '\r') {
      if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
      row.push_back(std::move(cell));
      cell.clear();
      rows.push_back(std::move(row));
      row.clear();
      any = false;
    } else {
      cell += c;
    }
  }
  if (quoted) throw ParameterError("csv", "unterminated quoted cell");
  if (any || !cell.empty()) {
    row.push_back(std::move(cell));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::string to_json_line(const ExperimentReport& report) { return to_json(report).dump() + "\n"; }

ExperimentReport parse_json_report(std::string_view text) {
  const json j = json::parse(text);
  ExperimentReport r;
  r.experiment = j.at("experiment").get<std::string>();
  r.parameters = j.at("parameters");
  r.results = j.at("results");
  if (j.contains("provenance")) r.provenance = provenance_from(j.at("provenance"));
  return r;
}

std::string to_csv(std::span<const ExperimentReport> reports) {
  std::vector<std::map<std::string, json>> flat;
  std::map<std::string, int> header;
  for (const auto& r : reports) {
    flat.push_back(flatten(r));
    for (const auto& [k, v] : flat.back()) header[k] = 0;
  }
  std::string out;
  bool first = true;
  for (const auto& [k, unused] : header) {
    if (!first) out += ',';
    out += quote_csv(k);
    first = false;
  }
  out += "\r\n";
  for (const auto& row : flat) {
    first = true;
    for (const auto& [k, unused] : header) {
      if (!first) out += ',';
      if (auto it = row.find(k); it != row.end()) out += quote_csv(render_cell(it->second));
      first = false;
    }
    out += "\r\n";
  }
  return out;
}

std::vector<ExperimentReport> parse_csv(std::string_view text) {
  const auto rows = split_csv(text);
  std::vector<ExperimentReport> out;
  if (rows.empty()) return out;
  const auto& header = rows.front();
  for (std::size_t r = 1; r < rows.size(); ++r) {
    if (rows[r].size() != header.size()) throw ParameterError("csv", "ragged row");
    ExperimentReport rep;
    json prov = json::object();
    for (std::size_t c = 0; c < header.size(); ++c) {
      const std::string& key = header[c];
      const std::string& cell = rows[r][c];
      if (key == "experiment") {
        rep.experiment = cell;
        continue;
      }
      if (cell.empty()) continue;
      const auto dot = key.find('.');
      const std::string block = key.substr(0, dot);
      const std::string name = key.substr(dot + 1);
      if (block == "parameters") {
        rep.parameters[name] = parse_cell(cell);
      } else if (block == "results") {
        rep.results[name] = parse_cell(cell);
      } else if (block == "provenance") {
        prov[name] = name == "wall_seconds" ? parse_cell(cell) : json(cell);
      }
    }
    if (!prov.empty()) rep.provenance = provenance_from(prov);
    out.push_back(std::move(rep));
  }
  return out;
}

std::string emit_report(const ExperimentReport& report, Format format) {
  return emit_reports(std::span(&report, 1), format);
}

std::string emit_reports(std::span<const ExperimentReport> reports, Format format) {
  if (format == Format::csv) return to_csv(reports);
  std::string out;
  for (const auto& r : reports) out += to_json_line(r);
  return out;
}

ExperimentReport to_report(const PreimageReport& r) {
  ExperimentReport rep;
  rep.experiment = "preimage";
  rep.parameters = {{"x", r.x}, {"digits", r.digit_set.str()}, {"gamma", r.gamma}};
  rep.results = {{"count", r.count},
                 {"density", r.density},
                 {"bound", r.bound},
                 {"count_over_bound", static_cast<double>(r.count) / r.bound}};
  return rep;
}

ExperimentReport to_report(const SplitReport& r) {
  ExperimentReport rep;
  rep.experiment = "split";
  rep.parameters = {{"x", r.x}, {"digits", r.digit_set.str()}, {"k", r.k}};
  rep.results = {{"s1", r.s1}, {"s2", r.s2}, {"count", r.s1 + r.s2}, {"s1_bound", r.s1_bound}};
  return rep;
}

ExperimentReport to_report(const KeyLemmaParams& r) {
  ExperimentReport rep;
  rep.experiment = "params";
  rep.parameters = {{"log_x", r.x.log_x},     {"log_log_x", r.x.log_log_x},
                    {"base", r.g},            {"k", r.k},
                    {"alpha", r.alpha},       {"alpha_prime", r.alpha_prime},
                    {"gamma", r.gamma},       {"delta", r.delta},
                    {"A", r.A}};
  rep.results = {{"ell", r.ell},
                 {"t", r.t},
                 {"m", r.m},
                 {"log_log_log_x", r.x.log_log_log_x},
                 {"k_window_lo", r.k_window_lo},
                 {"k_window_hi", r.k_window_hi},
                 {"k_in_window", r.k_in_window},
                 {"m_within_bound", r.m_within_bound}};
  return rep;
}

ExperimentReport to_report(const AbDecomposition& r) {
  ExperimentReport rep;
  rep.experiment = "abdecomp";
  rep.parameters = {{"n", r.n}, {"m", r.m}};
  rep.results = {{"a", r.a}, {"b", r.b}};
  return rep;
}

ExperimentReport to_report(const OmegaStats& r) {
  ExperimentReport rep;
  rep.experiment = "omegastats";
  rep.parameters = {{"x", r.x}, {"epsilon", r.epsilon}};
  rep.results = {{"exceptional", r.exceptional}, {"skipped", r.skipped},
                 {"sampled", r.sampled},         {"omega_sum", r.omega_sum},
                 {"omega_square_sum", r.omega_square_sum},
                 {"mean", r.mean},               {"variance", r.variance}};
  return rep;
}

ExperimentReport to_report(const ResidueCounts& r) {
  ExperimentReport rep;
  rep.experiment = "residue";
  rep.parameters = {{"x", r.x}, {"p", r.p}};
  double worst = 0.0;
  const double share = static_cast<double>(r.composite_total) / static_cast<double>(r.p);
  for (u64 c : r.counts) worst = std::max(worst, std::abs(static_cast<double>(c) - share) / share);
  rep.results = {{"counts", r.counts},
                 {"composite_total", r.composite_total},
                 {"max_relative_deviation", worst}};
  return rep;
}

ExperimentReport to_report(const GoldbachReport& r) {
  ExperimentReport rep;
  rep.experiment = "goldbach";
  rep.parameters = {{"x", r.x}, {"digits", r.digit_set.str()}};
  const double llx = r.x >= 16 ? std::log(std::log(static_cast<double>(r.x))) : 0.0;
  rep.results = {{"representable", r.representable},
                 {"total", r.total},
                 {"representable_ratio",
                  r.total == 0 ? 0.0 : static_cast<double>(r.representable) / r.total},
                 {"inverse_log_log_x", llx > 0.0 ? 1.0 / llx : 0.0},
                 {"weighted_sum", r.weighted_sum},
                 {"c_of_d", r.c_of_d.str()},
                 {"block_exponent", r.block_exponent},
                 {"main_term_at_full_block", r.main_term_at_full_block}};
  return rep;
}

ExperimentReport to_report(const EmsDeviation& r, const DigitSet& ds) {
  ExperimentReport rep;
  rep.experiment = "ems";
  rep.parameters = {{"x", r.x}, {"digits", ds.str()}, {"q", r.modulus}};
  std::vector<std::string> devs;
  for (const auto& d : r.deviation) devs.push_back(d.str());
  rep.results = {{"total", r.total},
                 {"class_counts", r.class_count},
                 {"deviations", devs},
                 {"max_abs_deviation", r.max_abs_deviation.str()},
                 {"coprime_to_base", r.coprime_to_base}};
  return rep;
}

}  // namespace aliquot
