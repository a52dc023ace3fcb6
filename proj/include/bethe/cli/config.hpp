#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace bethe::cli {

// Flat key=value settings. Lines starting with '#' and blank lines are
// ignored. Every key read through a getter is recorded with the value used,
// so the output header lists the effective configuration.
class Config {
 public:
  static Config from_file(const std::string& path);
  static Config from_text(const std::string& text, const std::string& origin = "<text>");

  void set(const std::string& key, const std::string& value);
  bool has(const std::string& key) const { return values_.count(key) != 0; }

  std::string get_string(const std::string& key, const std::string& fallback) const;
  long get_long(const std::string& key, long fallback) const;
  double get_double(const std::string& key, double fallback) const;
  bool get_bool(const std::string& key, bool fallback) const;

  // Keys that were set but never read; reported as usage errors.
  std::vector<std::string> unused() const;
  // Effective settings in key order, "key=value".
  std::vector<std::string> echo() const;
  const std::map<std::string, std::string>& effective() const { return used_; }

 private:
  std::map<std::string, std::string> values_;
  mutable std::map<std::string, std::string> used_;
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace bethe::cli
