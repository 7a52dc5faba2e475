#ifndef USBP_HARNESS_CSV_HPP
#define USBP_HARNESS_CSV_HPP

#include <fstream>
#include <string>
#include <vector>

namespace usbp {

/// CSV writer with a '#'-prefixed JSON header line (config echo, seed,
/// version), deterministic %.17g number formatting.
class CsvWriter {
 public:
  CsvWriter(const std::string& path, const std::string& header_json,
            const std::vector<std::string>& columns);

  void row(const std::vector<std::string>& cells);
  const std::string& path() const { return path_; }

  static std::string format(double value);
  static std::string format(int value);
  static std::string format(long value);

 private:
  std::string path_;
  std::ofstream out_;
};

std::string artifact_version();

/// State snapshot: node coordinates plus conserved variables, one node per
/// row, with a documented header (element count, nodes per direction,
/// variable names) in the '#' JSON line.
void write_snapshot_csv(const std::string& path, const std::string& config_json,
                        int num_elements, int nodes_per_direction,
                        const std::vector<std::string>& variable_names,
                        const std::vector<double>& x, const std::vector<double>& y,
                        const std::vector<const double*>& variables);

}  // namespace usbp

#endif
