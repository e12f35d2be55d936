#include "sing/format.hpp"

#include <charconv>
#include <cmath>
#include <system_error>

#include "sing/error.hpp"

namespace sing {

std::string format_real(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc()) throw Error("cannot format number");
  return std::string(buf, ptr);
}

std::string join_reals(std::span<const double> values, std::string_view separator) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += separator;
    out += format_real(values[i]);
  }
  return out;
}

double parse_real_field(std::string_view field, std::string_view context) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (field.empty() || ec != std::errc() || ptr != field.data() + field.size() || !std::isfinite(value)) {
    throw ParseError(std::string(context) + ": expected a number, got '" + std::string(field) + "'");
  }
  return value;
}

std::vector<std::string_view> split_on(std::string_view line, char separator) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = line.find(separator, start);
    if (pos == std::string_view::npos) {
      out.push_back(line.substr(start));
      break;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  return out;
}

}  // namespace sing
