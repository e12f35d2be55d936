#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sing {

// Shortest decimal text that reads back to the identical double.
std::string format_real(double value);

std::string join_reals(std::span<const double> values, std::string_view separator = ",");

// Strict full-field parse; throws ParseError with `context` on failure.
double parse_real_field(std::string_view field, std::string_view context);

std::vector<std::string_view> split_on(std::string_view line, char separator);

}  // namespace sing
