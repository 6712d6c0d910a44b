#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace coanet {

/// Minimal PNG encoder: 8-bit RGBA, no interlace, filter type 0 on every
/// scanline, single IDAT chunk compressed at a pinned zlib level, so identical
/// pixels always give identical bytes.
std::string encode_png(int width, int height, const std::vector<std::uint8_t>& rgba);

} // namespace coanet
