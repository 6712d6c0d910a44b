#include "coanet/plot/canvas.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "coanet/plot/font.hpp"

namespace coanet {

Canvas::Canvas(int width, int height, Rgba background)
    : width_(width), height_(height),
      px_(static_cast<std::size_t>(width) * height * 4) {
    for (std::size_t i = 0; i < px_.size(); i += 4) {
        px_[i] = background.r;
        px_[i + 1] = background.g;
        px_[i + 2] = background.b;
        px_[i + 3] = background.a;
    }
}

void Canvas::blend_pixel(int x, int y, Rgba c) {
    if (x < 0 || y < 0 || x >= width_ || y >= height_)
        return;
    std::size_t i = (static_cast<std::size_t>(y) * width_ + x) * 4;
    unsigned a = c.a;
    unsigned inv = 255 - a;
    px_[i] = static_cast<std::uint8_t>((c.r * a + px_[i] * inv + 127) / 255);
    px_[i + 1] = static_cast<std::uint8_t>((c.g * a + px_[i + 1] * inv + 127) / 255);
    px_[i + 2] = static_cast<std::uint8_t>((c.b * a + px_[i + 2] * inv + 127) / 255);
    px_[i + 3] = static_cast<std::uint8_t>(std::min(255u, a + (px_[i + 3] * inv + 127) / 255));
}

void Canvas::draw_line(int x0, int y0, int x1, int y1, Rgba c) {
    // Bresenham: visits each pixel once, so alpha is applied once per pixel.
    int dx = std::abs(x1 - x0);
    int dy = -std::abs(y1 - y0);
    int sx = x0 < x1 ? 1 : -1;
    int sy = y0 < y1 ? 1 : -1;
    int err = dx + dy;
    for (;;) {
        blend_pixel(x0, y0, c);
        if (x0 == x1 && y0 == y1)
            break;
        int e2 = 2 * err;
        if (e2 >= dy) {
            err += dy;
            x0 += sx;
        }
        if (e2 <= dx) {
            err += dx;
            y0 += sy;
        }
    }
}

void Canvas::fill_circle(double cx, double cy, double radius, Rgba c) {
    double r2 = radius * radius;
    int y_lo = static_cast<int>(std::floor(cy - radius));
    int y_hi = static_cast<int>(std::ceil(cy + radius));
    int x_lo = static_cast<int>(std::floor(cx - radius));
    int x_hi = static_cast<int>(std::ceil(cx + radius));
    for (int y = y_lo; y <= y_hi; ++y) {
        for (int x = x_lo; x <= x_hi; ++x) {
            double ddx = x + 0.5 - cx;
            double ddy = y + 0.5 - cy;
            if (ddx * ddx + ddy * ddy <= r2)
                blend_pixel(x, y, c);
        }
    }
}

void Canvas::circle_outline(double cx, double cy, double radius, Rgba c) {
    double inner = (radius - 1.0) * (radius - 1.0);
    double outer = radius * radius;
    int y_lo = static_cast<int>(std::floor(cy - radius));
    int y_hi = static_cast<int>(std::ceil(cy + radius));
    int x_lo = static_cast<int>(std::floor(cx - radius));
    int x_hi = static_cast<int>(std::ceil(cx + radius));
    for (int y = y_lo; y <= y_hi; ++y) {
        for (int x = x_lo; x <= x_hi; ++x) {
            double ddx = x + 0.5 - cx;
            double ddy = y + 0.5 - cy;
            double d2 = ddx * ddx + ddy * ddy;
            if (d2 <= outer && d2 >= inner)
                blend_pixel(x, y, c);
        }
    }
}

void Canvas::draw_text(int x, int y, std::string_view text, Rgba c) {
    for (char ch : text) {
        const auto& glyph = font_glyph(ch);
        for (int r = 0; r < kGlyphHeight; ++r) {
            std::uint8_t row = glyph[r];
            for (int col = 0; col < 8; ++col)
                if (row & (0x80 >> col))
                    blend_pixel(x + col, y + r, c);
        }
        x += kGlyphWidth;
    }
}

} // namespace coanet
