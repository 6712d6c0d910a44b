#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace coanet {

struct Rgba {
    std::uint8_t r = 0;
    std::uint8_t g = 0;
    std::uint8_t b = 0;
    std::uint8_t a = 255;
};

/// Top-down 8-bit RGBA raster with source-over blending. All drawing is
/// integer or IEEE arithmetic on fixed inputs, so output bytes are
/// reproducible.
class Canvas {
public:
    Canvas(int width, int height, Rgba background);

    int width() const { return width_; }
    int height() const { return height_; }
    const std::vector<std::uint8_t>& pixels() const { return px_; }

    void blend_pixel(int x, int y, Rgba c);
    void draw_line(int x0, int y0, int x1, int y1, Rgba c);
    void fill_circle(double cx, double cy, double radius, Rgba c);
    void circle_outline(double cx, double cy, double radius, Rgba c);
    /// 8x8 bitmap glyphs, (x, y) = top-left of the first cell.
    void draw_text(int x, int y, std::string_view text, Rgba c);

private:
    int width_;
    int height_;
    std::vector<std::uint8_t> px_;
};

} // namespace coanet
