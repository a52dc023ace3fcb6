#pragma once

#include "bethe/core.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace bethe::cli {

enum class Format { Csv, Jsonl, Table };

Format format_from_string(const std::string& s);

// Decimal scientific notation with the given significant digits.
std::string format_sci(const Real& x, int digits);
// Paper-style mantissa in [0.1, 1) with digits grouped by three, "x 10^k".
std::string format_grouped(const Real& x, int digits);

struct RecordWriter {
  Format format = Format::Csv;
  int digits = 12;
  bool timing = true;  // false writes 0 seconds, for byte-identical reruns

  // Header: config echo ("# key=value") then the CSV column row, or a JSON
  // config object for JSONL.
  void header(std::ostream& out, const std::vector<std::string>& config_echo) const;
  void record(std::ostream& out, const BetheLogResult& r) const;
};

std::string csv_columns();

}  // namespace bethe::cli
