#include "coanet/plot/png.hpp"

#include <zlib.h>

#include "coanet/errors.hpp"

namespace coanet {

namespace {

void put_u32(std::string& out, std::uint32_t v) {
    out.push_back(static_cast<char>(v >> 24));
    out.push_back(static_cast<char>(v >> 16));
    out.push_back(static_cast<char>(v >> 8));
    out.push_back(static_cast<char>(v));
}

void put_chunk(std::string& out, const char* type, const std::string& data) {
    put_u32(out, static_cast<std::uint32_t>(data.size()));
    out.append(type, 4);
    out.append(data);
    uLong crc = crc32(0L, Z_NULL, 0);
    crc = crc32(crc, reinterpret_cast<const Bytef*>(type), 4);
    if (!data.empty())
        crc = crc32(crc, reinterpret_cast<const Bytef*>(data.data()),
                    static_cast<uInt>(data.size()));
    put_u32(out, static_cast<std::uint32_t>(crc));
}

} // namespace

std::string encode_png(int width, int height, const std::vector<std::uint8_t>& rgba) {
    if (width <= 0 || height <= 0 ||
        rgba.size() != static_cast<std::size_t>(width) * height * 4)
        throw Error("pixel buffer does not match image dimensions");

    std::string raw;
    raw.reserve((static_cast<std::size_t>(width) * 4 + 1) * height);
    const char* bytes = reinterpret_cast<const char*>(rgba.data());
    for (int y = 0; y < height; ++y) {
        raw.push_back('\0'); // filter type 0
        raw.append(bytes + static_cast<std::size_t>(y) * width * 4,
                   static_cast<std::size_t>(width) * 4);
    }

    uLongf bound = compressBound(static_cast<uLong>(raw.size()));
    std::string compressed(bound, '\0');
    int rc = compress2(reinterpret_cast<Bytef*>(compressed.data()), &bound,
                       reinterpret_cast<const Bytef*>(raw.data()),
                       static_cast<uLong>(raw.size()), 6);
    if (rc != Z_OK)
        throw Error("zlib compression failed");
    compressed.resize(bound);

    std::string out("\x89PNG\r\n\x1a\n", 8);
    std::string ihdr;
    put_u32(ihdr, static_cast<std::uint32_t>(width));
    put_u32(ihdr, static_cast<std::uint32_t>(height));
    ihdr.push_back(8); // bit depth
    ihdr.push_back(6); // color type: RGBA
    ihdr.push_back(0); // compression
    ihdr.push_back(0); // filter method
    ihdr.push_back(0); // no interlace
    put_chunk(out, "IHDR", ihdr);
    put_chunk(out, "IDAT", compressed);
    put_chunk(out, "IEND", "");
    return out;
}

} // namespace coanet
