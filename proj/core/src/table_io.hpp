#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sigma/color_set.hpp"

namespace sigma::detail {

// "colors:" header plus one row of space-separated bits per color.
std::string bit_rows(const ColorSet& colors, const std::vector<std::uint8_t>& table,
                     size_t columns);

// Inverse of bit_rows; expects colors.size() + extra_columns entries per row.
std::pair<ColorSet, std::vector<std::uint8_t>> parse_bit_rows(const std::string& text,
                                                              int extra_columns);

} // namespace sigma::detail
