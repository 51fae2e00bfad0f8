#include "faceq/image.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace faceq {

bool rects_intersect(const Rect& a, const Rect& b) {
    if (a.w <= 0 || a.h <= 0 || b.w <= 0 || b.h <= 0) return false;
    return a.x0 < b.x1() && b.x0 < a.x1() && a.y0 < b.y1() && b.y0 < a.y1();
}

Plane::Plane(int w, int h, double fill) : width(w), height(h) {
    if (w <= 0 || h <= 0)
        throw ShapeError("plane dimensions must be positive, got " +
                         std::to_string(w) + "x" + std::to_string(h));
    samples.assign(static_cast<std::size_t>(w) * h, fill);
}

Plane::Plane(int w, int h, std::vector<double> s) : width(w), height(h), samples(std::move(s)) {
    if (w <= 0 || h <= 0)
        throw ShapeError("plane dimensions must be positive, got " +
                         std::to_string(w) + "x" + std::to_string(h));
    if (samples.size() != static_cast<std::size_t>(w) * h)
        throw ShapeError("plane sample count " + std::to_string(samples.size()) +
                         " does not match " + std::to_string(w) + "x" + std::to_string(h));
}

RgbImage::RgbImage(int w, int h, Rgb8 fill) : width(w), height(h) {
    if (w <= 0 || h <= 0)
        throw ShapeError("image dimensions must be positive, got " +
                         std::to_string(w) + "x" + std::to_string(h));
    pixels.assign(static_cast<std::size_t>(w) * h, fill);
}

namespace {

// Round half-up, then clamp to the 8-bit code range.
double quantize8(double v) {
    double r = std::floor(v + 0.5);
    if (r < 0.0) return 0.0;
    if (r > 255.0) return 255.0;
    return r;
}

} // namespace

YCrCbImage rgb_to_ycrcb(const RgbImage& img) {
    if (img.width <= 0 || img.height <= 0)
        throw ShapeError("cannot convert an empty image");

    YCrCbImage out;
    out.width = img.width;
    out.height = img.height;
    out.y = Plane(img.width, img.height);
    out.cr = Plane(img.width, img.height);
    out.cb = Plane(img.width, img.height);

    const std::size_t n = img.pixels.size();
    for (std::size_t i = 0; i < n; ++i) {
        const double r = img.pixels[i].r;
        const double g = img.pixels[i].g;
        const double b = img.pixels[i].b;
        out.y.samples[i] = quantize8(0.299 * r + 0.587 * g + 0.114 * b);
        out.cb.samples[i] = quantize8(128.0 - 0.168736 * r - 0.331264 * g + 0.5 * b);
        out.cr.samples[i] = quantize8(128.0 + 0.5 * r - 0.418688 * g - 0.081312 * b);
    }
    return out;
}

Plane luma_plane(const YCrCbImage& img) {
    return img.y;
}

Plane crop(const Plane& p, const Rect& r) {
    if (r.w <= 0 || r.h <= 0)
        throw ShapeError("crop rect must be non-empty, got " +
                         std::to_string(r.w) + "x" + std::to_string(r.h));
    if (r.x0 < 0 || r.y0 < 0 || r.x1() > p.width || r.y1() > p.height)
        throw ShapeError("crop rect " + std::to_string(r.x0) + "," + std::to_string(r.y0) +
                         " " + std::to_string(r.w) + "x" + std::to_string(r.h) +
                         " reaches outside the " + std::to_string(p.width) + "x" +
                         std::to_string(p.height) + " plane");

    Plane out(r.w, r.h);
    for (int y = 0; y < r.h; ++y) {
        const double* src = &p.samples[static_cast<std::size_t>(r.y0 + y) * p.width + r.x0];
        double* dst = &out.samples[static_cast<std::size_t>(y) * r.w];
        for (int x = 0; x < r.w; ++x) dst[x] = src[x];
    }
    return out;
}

} // namespace faceq
