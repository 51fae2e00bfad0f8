#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "faceq/errors.hpp"

namespace faceq {

// Axis-aligned rectangle in pixel coordinates, top-left origin.
// (x0, y0) is the first pixel inside, x1()/y1() are exclusive.
struct Rect {
    int x0 = 0;
    int y0 = 0;
    int w = 0;
    int h = 0;

    int x1() const { return x0 + w; }
    int y1() const { return y0 + h; }
    long long area() const { return static_cast<long long>(w) * h; }

    bool operator==(const Rect&) const = default;
};

bool rects_intersect(const Rect& a, const Rect& b);

// Single-channel raster, row major. Samples are kept as doubles so that
// downstream statistics never lose precision mid-pipeline; producers that
// quantize (color conversion, codecs) store already-rounded values here.
struct Plane {
    int width = 0;
    int height = 0;
    std::vector<double> samples;

    Plane() = default;
    Plane(int w, int h, double fill = 0.0);
    Plane(int w, int h, std::vector<double> s);

    double at(int x, int y) const {
        return samples[static_cast<std::size_t>(y) * width + x];
    }
    double& at(int x, int y) {
        return samples[static_cast<std::size_t>(y) * width + x];
    }
    bool same_size(const Plane& o) const {
        return width == o.width && height == o.height;
    }
};

struct Rgb8 {
    std::uint8_t r = 0;
    std::uint8_t g = 0;
    std::uint8_t b = 0;

    bool operator==(const Rgb8&) const = default;
};

// Interleaved 8-bit RGB raster, row major.
struct RgbImage {
    int width = 0;
    int height = 0;
    std::vector<Rgb8> pixels;

    RgbImage() = default;
    RgbImage(int w, int h, Rgb8 fill = {});

    const Rgb8& at(int x, int y) const {
        return pixels[static_cast<std::size_t>(y) * width + x];
    }
    Rgb8& at(int x, int y) {
        return pixels[static_cast<std::size_t>(y) * width + x];
    }
};

// Full-resolution luma/chroma planes (no subsampling). Samples are the
// rounded 8-bit code values stored as doubles, each in [0, 255].
struct YCrCbImage {
    int width = 0;
    int height = 0;
    Plane y;
    Plane cr;
    Plane cb;
};

// Full-range BT.601 conversion:
//   Y  =       0.299 R + 0.587 G + 0.114 B
//   Cb = 128 - 0.168736 R - 0.331264 G + 0.5 B
//   Cr = 128 + 0.5 R - 0.418688 G - 0.081312 B
// Each result is rounded half-up and clamped to [0, 255], matching what an
// 8-bit JFIF pipeline stores. Pure red (255,0,0) lands on Y=76 Cr=255 Cb=85.
YCrCbImage rgb_to_ycrcb(const RgbImage& img);

// Copy of the Y plane.
Plane luma_plane(const YCrCbImage& img);

// Extract a sub-plane. Throws ShapeError if the rect is empty or reaches
// outside the plane.
Plane crop(const Plane& p, const Rect& r);

} // namespace faceq
