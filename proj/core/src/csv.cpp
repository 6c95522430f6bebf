#include "padicres/csv.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <sstream>

namespace padicres {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

namespace {

std::string render(const SummaryRow::Value& v, int decimals) {
  if (const auto* i = std::get_if<int64_t>(&v)) return std::to_string(*i);
  if (const auto* s = std::get_if<std::string>(&v)) return csv_escape(*s);
  // snprintf with "%.*f" always uses '.' under the C locale we never change.
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, std::get<double>(v));
  return buf;
}

}  // namespace

void write_csv(std::ostream& os, const std::vector<SummaryRow>& rows, int decimals) {
  std::vector<std::string> header;
  for (const auto& r : rows)
    for (const auto& [k, v] : r.fields())
      if (std::find(header.begin(), header.end(), k) == header.end()) header.push_back(k);
  for (size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << csv_escape(header[i]);
  os << '\n';
  for (const auto& r : rows) {
    for (size_t i = 0; i < header.size(); ++i) {
      if (i) os << ',';
      if (r.has(header[i])) os << render(r.at(header[i]), decimals);
    }
    os << '\n';
  }
}

std::string to_csv(const std::vector<SummaryRow>& rows, int decimals) {
  std::ostringstream os;
  write_csv(os, rows, decimals);
  return os.str();
}

}  // namespace padicres
