#pragma once

#include <array>
#include <cstdint>

namespace coanet {

inline constexpr int kGlyphWidth = 6;  ///< advance; drawn pixels use columns 0-4
inline constexpr int kGlyphHeight = 8;

/// 8-row bitmap for a printable ASCII character; bit (7 - column) of row r is
/// the pixel at (column, r). Unknown characters map to '?'.
const std::array<std::uint8_t, 8>& font_glyph(char c);

} // namespace coanet
