#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "faceq/image.hpp"

namespace testsupport {

// Integer-valued samples keep window sums exactly representable, which lets
// oracle comparisons run at very tight tolerances.
inline faceq::Plane random_plane(int w, int h, std::uint32_t seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> dist(0, 255);
    faceq::Plane p(w, h);
    for (double& s : p.samples) s = dist(rng);
    return p;
}

inline faceq::Plane ramp_plane(int w, int h, double sx = 1.0, double sy = 2.0,
                               double base = 10.0) {
    faceq::Plane p(w, h);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) p.at(x, y) = base + sx * x + sy * y;
    return p;
}

// Band-limited texture plus mild noise; rich gradients at several scales.
inline faceq::Plane textured_plane(int w, int h, std::uint32_t seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> noise(-10.0, 10.0);
    const double tau = 6.283185307179586;
    faceq::Plane p(w, h);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            double v = 128.0 + 40.0 * std::sin(tau * x / 9.0) * std::sin(tau * y / 11.0) +
                       20.0 * std::sin(tau * (x + y) / 23.0) + noise(rng);
            p.at(x, y) = std::clamp(v, 0.0, 255.0);
        }
    }
    return p;
}

inline faceq::RgbImage random_rgb(int w, int h, std::uint32_t seed, int lo = 0,
                                  int hi = 255) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> dist(lo, hi);
    faceq::RgbImage img(w, h);
    for (faceq::Rgb8& px : img.pixels) {
        px.r = static_cast<std::uint8_t>(dist(rng));
        px.g = static_cast<std::uint8_t>(dist(rng));
        px.b = static_cast<std::uint8_t>(dist(rng));
    }
    return img;
}

// Separable Gaussian with replicate borders, kernel radius ceil(3 sigma).
inline faceq::Plane gaussian_blur(const faceq::Plane& src, double sigma) {
    const int radius = static_cast<int>(std::ceil(3.0 * sigma));
    std::vector<double> kernel(2 * radius + 1);
    double sum = 0.0;
    for (int i = -radius; i <= radius; ++i) {
        kernel[i + radius] = std::exp(-0.5 * i * i / (sigma * sigma));
        sum += kernel[i + radius];
    }
    for (double& k : kernel) k /= sum;

    const int w = src.width;
    const int h = src.height;
    faceq::Plane tmp(w, h);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            double acc = 0.0;
            for (int i = -radius; i <= radius; ++i) {
                const int sx = std::clamp(x + i, 0, w - 1);
                acc += kernel[i + radius] * src.at(sx, y);
            }
            tmp.at(x, y) = acc;
        }
    }
    faceq::Plane out(w, h);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            double acc = 0.0;
            for (int i = -radius; i <= radius; ++i) {
                const int sy = std::clamp(y + i, 0, h - 1);
                acc += kernel[i + radius] * tmp.at(x, sy);
            }
            out.at(x, y) = acc;
        }
    }
    return out;
}

#ifdef TESTS_DATA_DIR
inline std::string data_path(const std::string& name) {
    return std::string(TESTS_DATA_DIR) + "/" + name;
}
#endif

} // namespace testsupport
