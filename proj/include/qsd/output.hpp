#pragma once

// Machine-readable output: CSV (UTF-8, comma separator, '.' decimal point,
// scientific notation below 1e-4, mandatory header) and the JSON report
// envelope {command, seed, params, rows, references, wall_time_s}.

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

namespace qsd {

inline std::string format_number(double v) {
  if (v == 0.0) return "0";
  char buf[40];
  if (std::abs(v) < 1e-4)
    std::snprintf(buf, sizeof buf, "%.11e", v);
  else
    std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

using CsvCell = std::variant<std::string, double, long long>;

inline std::string csv_cell_to_string(const CsvCell& cell) {
  if (std::holds_alternative<std::string>(cell)) return std::get<std::string>(cell);
  if (std::holds_alternative<double>(cell)) return format_number(std::get<double>(cell));
  return std::to_string(std::get<long long>(cell));
}

class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

  void add_row(std::vector<CsvCell> row) {
    if (row.size() != header_.size())
      throw std::invalid_argument("CsvTable: row width does not match header");
    rows_.push_back(std::move(row));
  }

  const std::vector<std::string>& header() const { return header_; }
  const std::vector<std::vector<CsvCell>>& rows() const { return rows_; }

  std::string to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < header_.size(); ++i) out << (i ? "," : "") << header_[i];
    out << "\n";
    for (const auto& row : rows_) {
      for (std::size_t i = 0; i < row.size(); ++i)
        out << (i ? "," : "") << csv_cell_to_string(row[i]);
      out << "\n";
    }
    return out.str();
  }

  nlohmann::ordered_json rows_json() const {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& row : rows_) {
      nlohmann::ordered_json obj;
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (std::holds_alternative<std::string>(row[i]))
          obj[header_[i]] = std::get<std::string>(row[i]);
        else if (std::holds_alternative<double>(row[i]))
          obj[header_[i]] = std::get<double>(row[i]);
        else
          obj[header_[i]] = std::get<long long>(row[i]);
      }
      arr.push_back(std::move(obj));
    }
    return arr;
  }

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<CsvCell>> rows_;
};

inline nlohmann::ordered_json make_report(const std::string& command, std::uint64_t seed,
                                          nlohmann::ordered_json params, const CsvTable& table,
                                          nlohmann::ordered_json references,
                                          double wall_time_s) {
  nlohmann::ordered_json report;
  report["command"] = command;
  report["seed"] = seed;
  report["params"] = std::move(params);
  report["rows"] = table.rows_json();
  report["references"] = std::move(references);
  report["wall_time_s"] = wall_time_s;
  return report;
}

// Structural validation against the shipped report schema: required keys
// with the right JSON types.
inline bool validate_report(const nlohmann::json& report, std::string* why = nullptr) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (!report.is_object()) return fail("report is not an object");
  if (!report.contains("command") || !report["command"].is_string())
    return fail("missing string field 'command'");
  if (!report.contains("seed") || !report["seed"].is_number())
    return fail("missing numeric field 'seed'");
  if (!report.contains("params") || !report["params"].is_object())
    return fail("missing object field 'params'");
  if (!report.contains("rows") || !report["rows"].is_array())
    return fail("missing array field 'rows'");
  if (!report.contains("references") || !report["references"].is_object())
    return fail("missing object field 'references'");
  if (!report.contains("wall_time_s") || !report["wall_time_s"].is_number())
    return fail("missing numeric field 'wall_time_s'");
  return true;
}

inline void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << content;
}

// Companion matplotlib script that reads only the emitted data file.
inline std::string plot_script_xy(const std::string& csv_path, const std::string& xcol,
                                  const std::string& ycol, const std::string& series_col,
                                  const std::string& title) {
  std::ostringstream s;
  s << "#!/usr/bin/env python3\n"
    << "import csv\n"
    << "import matplotlib\n"
    << "matplotlib.use('Agg')\n"
    << "import matplotlib.pyplot as plt\n\n"
    << "path = " << nlohmann::json(csv_path).dump() << "\n"
    << "series = {}\n"
    << "with open(path) as fh:\n"
    << "    for row in csv.DictReader(fh):\n";
  if (series_col.empty())
    s << "        series.setdefault('data', []).append((float(row['" << xcol
      << "']), float(row['" << ycol << "'])))\n";
  else
    s << "        series.setdefault(row['" << series_col << "'], []).append((float(row['"
      << xcol << "']), float(row['" << ycol << "'])))\n";
  s << "fig, ax = plt.subplots()\n"
    << "for name, pts in series.items():\n"
    << "    pts.sort()\n"
    << "    xs = [p[0] for p in pts]\n"
    << "    ys = [p[1] for p in pts]\n"
    << "    style = '-' if name not in ('empirical', 'data') else '.'\n"
    << "    ax.plot(xs, ys, style, label=name, markersize=3)\n"
    << "ax.set_xlabel(" << nlohmann::json(xcol).dump() << ")\n"
    << "ax.set_ylabel(" << nlohmann::json(ycol).dump() << ")\n"
    << "ax.set_title(" << nlohmann::json(title).dump() << ")\n"
    << "ax.legend()\n"
    << "fig.savefig(path + '.png', dpi=150)\n"
    << "print('wrote', path + '.png')\n";
  return s.str();
}

}  // namespace qsd
