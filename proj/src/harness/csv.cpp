#include "harness/csv.hpp"

#include <cstdio>
#include <stdexcept>

namespace usbp {

std::string artifact_version() { return "usbp-dg 1.0.0"; }

CsvWriter::CsvWriter(const std::string& path, const std::string& header_json,
                     const std::vector<std::string>& columns)
    : path_(path), out_(path) {
  if (!out_.good()) throw std::runtime_error("cannot open output file: " + path);
  out_ << "# " << header_json << "\n";
  for (size_t i = 0; i < columns.size(); ++i)
    out_ << columns[i] << (i + 1 < columns.size() ? "," : "\n");
}

void CsvWriter::row(const std::vector<std::string>& cells) {
  for (size_t i = 0; i < cells.size(); ++i)
    out_ << cells[i] << (i + 1 < cells.size() ? "," : "\n");
}

std::string CsvWriter::format(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::string CsvWriter::format(int value) { return std::to_string(value); }
std::string CsvWriter::format(long value) { return std::to_string(value); }

void write_snapshot_csv(const std::string& path, const std::string& config_json,
                        int num_elements, int nodes_per_direction,
                        const std::vector<std::string>& variable_names,
                        const std::vector<double>& x, const std::vector<double>& y,
                        const std::vector<const double*>& variables) {
  std::string header = "{\"config\":" + config_json +
                       ",\"J\":" + std::to_string(num_elements) +
                       ",\"N\":" + std::to_string(nodes_per_direction) +
                       ",\"variables\":[";
  for (size_t v = 0; v < variable_names.size(); ++v)
    header += "\"" + variable_names[v] + "\"" + (v + 1 < variable_names.size() ? "," : "");
  header += "]}";

  std::vector<std::string> columns = {"x"};
  if (!y.empty()) columns.push_back("y");
  columns.insert(columns.end(), variable_names.begin(), variable_names.end());
  CsvWriter csv(path, header, columns);
  for (size_t i = 0; i < x.size(); ++i) {
    std::vector<std::string> cells = {CsvWriter::format(x[i])};
    if (!y.empty()) cells.push_back(CsvWriter::format(y[i]));
    for (const double* var : variables) cells.push_back(CsvWriter::format(var[i]));
    csv.row(cells);
  }
}

}  // namespace usbp
