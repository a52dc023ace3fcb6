#include "bethe/cli/output.hpp"

#include <json.hpp>

#include <cstdio>
#include <sstream>

namespace bethe::cli {

Format format_from_string(const std::string& s) {
  if (s == "csv") return Format::Csv;
  if (s == "jsonl") return Format::Jsonl;
  if (s == "table") return Format::Table;
  throw DomainError("unknown format '" + s + "' (csv, jsonl, table)");
}

std::string format_sci(const Real& x, int digits) { return x.str(digits); }

std::string format_grouped(const Real& x, int digits) {
  if (x.is_zero()) return "0";
  // d.ddd e k  ->  0.dddd x 10^(k+1)
  const std::string s = x.str(digits);
  const bool neg = s[0] == '-';
  const auto epos = s.find_first_of("eE");
  std::string mant;
  for (char c : s.substr(neg ? 1 : 0, epos - (neg ? 1 : 0)))
    if (c != '.') mant += c;
  const long k = std::stol(s.substr(epos + 1)) + 1;
  std::string out = neg ? "-0." : "0.";
  for (std::size_t i = 0; i < mant.size(); ++i) {
    if (i > 0 && i % 3 == 0) out += ' ';
    out += mant[i];
  }
  return out + " x 10^" + std::to_string(k);
}

std::string csv_columns() { return "n,l,zeta,lnk0,method,B,C,err,bits,seconds"; }

void RecordWriter::header(std::ostream& out, const std::vector<std::string>& config_echo) const {
  if (format == Format::Jsonl) {
    nlohmann::ordered_json cfg = nlohmann::ordered_json::object();
    for (const auto& kv : config_echo) {
      const auto eq = kv.find('=');
      cfg[kv.substr(0, eq)] = kv.substr(eq + 1);
    }
    out << nlohmann::ordered_json{{"config", cfg}}.dump() << '\n';
    return;
  }
  for (const auto& kv : config_echo) out << "# " << kv << '\n';
  if (format == Format::Csv) out << csv_columns() << '\n';
}

namespace {

std::string short_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

std::string seconds_str(double s, bool timing) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", timing ? s : 0.0);
  return buf;
}

}  // namespace

void RecordWriter::record(std::ostream& out, const BetheLogResult& r) const {
  const int zeta = r.n - r.l;
  const std::string B = r.bound_part ? format_sci(*r.bound_part, digits) : "";
  const std::string C = r.continuum_part ? format_sci(*r.continuum_part, digits) : "";
  switch (format) {
    case Format::Csv:
      out << r.n << ',' << r.l << ',' << zeta << ',' << format_sci(r.value, digits) << ',' << r.method << ',' << B
          << ',' << C << ',' << short_double(r.error) << ',' << r.bits << ',' << seconds_str(r.seconds, timing)
          << '\n';
      break;
    case Format::Jsonl: {
      nlohmann::ordered_json j;
      j["n"] = r.n;
      j["l"] = r.l;
      j["zeta"] = zeta;
      j["lnk0"] = format_sci(r.value, digits);
      j["method"] = r.method;
      j["B"] = r.bound_part ? nlohmann::ordered_json(B) : nlohmann::ordered_json(nullptr);
      j["C"] = r.continuum_part ? nlohmann::ordered_json(C) : nlohmann::ordered_json(nullptr);
      j["err"] = r.error;
      j["bits"] = r.bits;
      j["seconds"] = timing ? r.seconds : 0.0;
      out << j.dump() << '\n';
      break;
    }
    case Format::Table: {
      char lead[64];
      std::snprintf(lead, sizeof lead, "ln k0(%d,%d) = ", r.n, r.l);
      out << lead << format_grouped(r.value, digits) << "  [" << r.method << ", err " << short_double(r.error) << "]\n";
      break;
    }
  }
}

}  // namespace bethe::cli
