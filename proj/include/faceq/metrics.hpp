#pragma once

#include <vector>

#include "faceq/image.hpp"

namespace faceq {

// Sample statistics of one window pair. Variances and the covariance use the
// unbiased divisor (sample count minus one).
struct WindowStats {
    double mean_f = 0.0;
    double mean_g = 0.0;
    double var_f = 0.0;
    double var_g = 0.0;
    double cov_fg = 0.0;
    int n = 0;
};

// Windowing and stabilizer parameters shared by all three metrics.
// For 8-bit data the dynamic range L is 255, so the defaults give
// c1 = (0.01*255)^2 = 6.5025 and c2 = (0.03*255)^2 = 58.5225.
struct SsimParams {
    double k1 = 0.01;
    double k2 = 0.03;
    int bit_depth = 8;
    int window = 8;
    int stride = 1;

    double dynamic_range() const { return static_cast<double>((1 << bit_depth) - 1); }
    double c1() const {
        const double v = k1 * dynamic_range();
        return v * v;
    }
    double c2() const {
        const double v = k2 * dynamic_range();
        return v * v;
    }
    void validate() const;
};

// Per-window scores on the sliding-window grid. Skipped windows hold NaN.
struct ScoreMap {
    int cols = 0;
    int rows = 0;
    std::vector<double> values;

    double at(int cx, int cy) const {
        return values[static_cast<std::size_t>(cy) * cols + cx];
    }
};

struct MetricResult {
    double score = 0.0;
    ScoreMap map;
    int windows_used = 0;
    int windows_skipped = 0;
};

// The three factors of the universal index for one window:
//   corr = cov / (sigma_f * sigma_g)        correlation loss
//   lum  = 2 mean_f mean_g / (mean_f^2 + mean_g^2)   luminance distortion
//   con  = 2 sigma_f sigma_g / (var_f + var_g)       contrast distortion
// A window where both variances are zero and the means agree is a perfect
// match (all three factors 1). Any other window with sigma_f*sigma_g == 0
// has an undefined index and is reported degenerate.
struct QComponents {
    double corr = 0.0;
    double lum = 0.0;
    double con = 0.0;
    bool degenerate = false;
};

// Statistics over a whole plane pair treated as a single window.
// Requires identical dimensions and at least two samples.
WindowStats window_stats(const Plane& f, const Plane& g);

QComponents q_components(const WindowStats& s);

enum class PoolMethod { kMean };

// Arithmetic mean of the non-NaN map entries. Throws DegenerateError when
// every window was skipped.
double pool(const ScoreMap& map, PoolMethod method = PoolMethod::kMean);

// Universal image quality index over sliding windows. Degenerate windows are
// skipped; the pooled score averages the rest. Throws DegenerateError if no
// window is usable.
MetricResult uiqi(const Plane& f, const Plane& g, const SsimParams& p = {});

// Structural similarity over sliding windows:
//   ((2 mx my + c1)(2 cov + c2)) / ((mx^2 + my^2 + c1)(vx + vy + c2))
// The stabilizers keep every window defined, so none are ever skipped.
MetricResult ssim(const Plane& x, const Plane& y, const SsimParams& p = {});

// Same geometry as the input plane; samples are Sobel magnitudes, never
// negative.
using GradientPlane = Plane;

// Sobel gradient magnitude sqrt(gx^2 + gy^2) with replicate border handling:
// the response is computed wherever the 3x3 support fits and the one-pixel
// outer ring copies its nearest interior value. That keeps the magnitude
// field constant on a linear ramp all the way to the edge instead of
// inventing a rim of damped responses. Requires at least 3x3 input.
GradientPlane gradient_magnitude(const Plane& p);

// Gradient-weighted variant: keeps the luminance term of ssim, but the
// contrast and structure terms compare mean Sobel magnitudes,
//   c = (2 mgx mgy + c2) / (mgx^2 + mgy^2 + c2)
//   s = (mean(gx*gy) + c3) / (mgx mgy + c3),  c3 = c2 / 2.
// The s term is a second-moment ratio, not a correlation, so single-window
// values can land slightly above 1.
MetricResult gssim(const Plane& x, const Plane& y, const SsimParams& p = {});

} // namespace faceq
