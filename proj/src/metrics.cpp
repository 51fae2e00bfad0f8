#include "faceq/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace faceq {

void SsimParams::validate() const {
    if (!(k1 > 0.0) || !(k2 > 0.0))
        throw std::invalid_argument("k1 and k2 must be positive");
    if (bit_depth < 1 || bit_depth > 16)
        throw std::invalid_argument("bit depth must lie in [1, 16]");
    if (window < 2)
        throw std::invalid_argument("window must span at least 2 pixels");
    if (stride < 1)
        throw std::invalid_argument("stride must be at least 1");
}

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

// Two-pass mean/deviation statistics over one aligned window of both planes.
WindowStats stats_at(const Plane& f, const Plane& g, int x0, int y0, int ww, int wh) {
    WindowStats s;
    s.n = ww * wh;

    double sum_f = 0.0;
    double sum_g = 0.0;
    for (int y = 0; y < wh; ++y) {
        const double* rf = &f.samples[static_cast<std::size_t>(y0 + y) * f.width + x0];
        const double* rg = &g.samples[static_cast<std::size_t>(y0 + y) * g.width + x0];
        for (int x = 0; x < ww; ++x) {
            sum_f += rf[x];
            sum_g += rg[x];
        }
    }
    s.mean_f = sum_f / s.n;
    s.mean_g = sum_g / s.n;

    double ss_f = 0.0;
    double ss_g = 0.0;
    double ss_fg = 0.0;
    for (int y = 0; y < wh; ++y) {
        const double* rf = &f.samples[static_cast<std::size_t>(y0 + y) * f.width + x0];
        const double* rg = &g.samples[static_cast<std::size_t>(y0 + y) * g.width + x0];
        for (int x = 0; x < ww; ++x) {
            const double df = rf[x] - s.mean_f;
            const double dg = rg[x] - s.mean_g;
            ss_f += df * df;
            ss_g += dg * dg;
            ss_fg += df * dg;
        }
    }
    s.var_f = ss_f / (s.n - 1);
    s.var_g = ss_g / (s.n - 1);
    s.cov_fg = ss_fg / (s.n - 1);
    return s;
}

void check_pair(const Plane& f, const Plane& g, const SsimParams& p) {
    p.validate();
    if (!f.same_size(g))
        throw ShapeError("plane sizes differ: " + std::to_string(f.width) + "x" +
                         std::to_string(f.height) + " vs " + std::to_string(g.width) +
                         "x" + std::to_string(g.height));
    if (f.width < p.window || f.height < p.window)
        throw SizeError("plane " + std::to_string(f.width) + "x" + std::to_string(f.height) +
                        " is smaller than the " + std::to_string(p.window) + "x" +
                        std::to_string(p.window) + " window");
}

ScoreMap make_grid(const Plane& f, const SsimParams& p) {
    ScoreMap map;
    map.cols = (f.width - p.window) / p.stride + 1;
    map.rows = (f.height - p.window) / p.stride + 1;
    map.values.assign(static_cast<std::size_t>(map.cols) * map.rows, kNan);
    return map;
}

} // namespace

WindowStats window_stats(const Plane& f, const Plane& g) {
    if (!f.same_size(g))
        throw ShapeError("plane sizes differ: " + std::to_string(f.width) + "x" +
                         std::to_string(f.height) + " vs " + std::to_string(g.width) +
                         "x" + std::to_string(g.height));
    if (static_cast<long long>(f.width) * f.height < 2)
        throw SizeError("statistics need at least 2 samples");
    return stats_at(f, g, 0, 0, f.width, f.height);
}

QComponents q_components(const WindowStats& s) {
    QComponents out;
    const double sigma_f = std::sqrt(s.var_f);
    const double sigma_g = std::sqrt(s.var_g);

    if (sigma_f * sigma_g == 0.0) {
        if (s.var_f == 0.0 && s.var_g == 0.0 && s.mean_f == s.mean_g) {
            out.corr = out.lum = out.con = 1.0; // identical constant windows
            return out;
        }
        out.degenerate = true;
        return out;
    }

    // Clamp off the last-ulp overshoot sqrt rounding can introduce; the exact
    // quantities satisfy these bounds (Cauchy-Schwarz, AM-GM).
    out.corr = std::clamp(s.cov_fg / (sigma_f * sigma_g), -1.0, 1.0);
    const double mm = s.mean_f * s.mean_f + s.mean_g * s.mean_g;
    out.lum = mm == 0.0 ? 1.0 : std::min(2.0 * s.mean_f * s.mean_g / mm, 1.0);
    out.con = std::min(2.0 * sigma_f * sigma_g / (s.var_f + s.var_g), 1.0);
    return out;
}

double pool(const ScoreMap& map, PoolMethod method) {
    if (method != PoolMethod::kMean)
        throw std::invalid_argument("unknown pooling method");
    double sum = 0.0;
    long long used = 0;
    for (double v : map.values) {
        if (std::isnan(v)) continue;
        sum += v;
        ++used;
    }
    if (used == 0)
        throw DegenerateError("no usable windows to pool");
    return sum / static_cast<double>(used);
}

MetricResult uiqi(const Plane& f, const Plane& g, const SsimParams& p) {
    check_pair(f, g, p);
    MetricResult r;
    r.map = make_grid(f, p);
    for (int cy = 0; cy < r.map.rows; ++cy) {
        for (int cx = 0; cx < r.map.cols; ++cx) {
            const WindowStats s =
                stats_at(f, g, cx * p.stride, cy * p.stride, p.window, p.window);
            const QComponents q = q_components(s);
            if (q.degenerate) {
                ++r.windows_skipped;
                continue;
            }
            r.map.values[static_cast<std::size_t>(cy) * r.map.cols + cx] =
                q.corr * q.lum * q.con;
            ++r.windows_used;
        }
    }
    r.score = pool(r.map);
    return r;
}

MetricResult ssim(const Plane& x, const Plane& y, const SsimParams& p) {
    check_pair(x, y, p);
    const double c1 = p.c1();
    const double c2 = p.c2();

    MetricResult r;
    r.map = make_grid(x, p);
    for (int cy = 0; cy < r.map.rows; ++cy) {
        for (int cx = 0; cx < r.map.cols; ++cx) {
            const WindowStats s =
                stats_at(x, y, cx * p.stride, cy * p.stride, p.window, p.window);
            const double num = (2.0 * s.mean_f * s.mean_g + c1) * (2.0 * s.cov_fg + c2);
            const double den =
                (s.mean_f * s.mean_f + s.mean_g * s.mean_g + c1) * (s.var_f + s.var_g + c2);
            r.map.values[static_cast<std::size_t>(cy) * r.map.cols + cx] = num / den;
            ++r.windows_used;
        }
    }
    r.score = pool(r.map);
    return r;
}

GradientPlane gradient_magnitude(const Plane& p) {
    if (p.width < 3 || p.height < 3)
        throw SizeError("gradient needs at least a 3x3 plane, got " +
                        std::to_string(p.width) + "x" + std::to_string(p.height));

    const int w = p.width;
    const int h = p.height;
    Plane out(w, h);

    for (int y = 1; y + 1 < h; ++y) {
        for (int x = 1; x + 1 < w; ++x) {
            const double gx = (p.at(x + 1, y - 1) + 2.0 * p.at(x + 1, y) + p.at(x + 1, y + 1)) -
                              (p.at(x - 1, y - 1) + 2.0 * p.at(x - 1, y) + p.at(x - 1, y + 1));
            const double gy = (p.at(x - 1, y + 1) + 2.0 * p.at(x, y + 1) + p.at(x + 1, y + 1)) -
                              (p.at(x - 1, y - 1) + 2.0 * p.at(x, y - 1) + p.at(x + 1, y - 1));
            out.at(x, y) = std::sqrt(gx * gx + gy * gy);
        }
    }

    // Replicate the nearest interior response into the one-pixel outer ring.
    for (int y = 1; y + 1 < h; ++y) {
        out.at(0, y) = out.at(1, y);
        out.at(w - 1, y) = out.at(w - 2, y);
    }
    for (int x = 0; x < w; ++x) {
        const int cx = std::clamp(x, 1, w - 2);
        out.at(x, 0) = out.at(cx, 1);
        out.at(x, h - 1) = out.at(cx, h - 2);
    }
    return out;
}

MetricResult gssim(const Plane& x, const Plane& y, const SsimParams& p) {
    check_pair(x, y, p);
    const GradientPlane gx = gradient_magnitude(x);
    const GradientPlane gy = gradient_magnitude(y);
    const double c1 = p.c1();
    const double c2 = p.c2();
    const double c3 = c2 / 2.0;

    MetricResult r;
    r.map = make_grid(x, p);
    const double inv_n = 1.0 / (static_cast<double>(p.window) * p.window);
    for (int cy = 0; cy < r.map.rows; ++cy) {
        for (int cx = 0; cx < r.map.cols; ++cx) {
            const int x0 = cx * p.stride;
            const int y0 = cy * p.stride;

            double sum_x = 0.0, sum_y = 0.0;
            double sum_gx = 0.0, sum_gy = 0.0, sum_gxgy = 0.0;
            for (int wy = 0; wy < p.window; ++wy) {
                const std::size_t row =
                    static_cast<std::size_t>(y0 + wy) * x.width + x0;
                for (int wx = 0; wx < p.window; ++wx) {
                    sum_x += x.samples[row + wx];
                    sum_y += y.samples[row + wx];
                    const double a = gx.samples[row + wx];
                    const double b = gy.samples[row + wx];
                    sum_gx += a;
                    sum_gy += b;
                    sum_gxgy += a * b;
                }
            }
            const double mx = sum_x * inv_n;
            const double my = sum_y * inv_n;
            const double mgx = sum_gx * inv_n;
            const double mgy = sum_gy * inv_n;
            const double mgxgy = sum_gxgy * inv_n;

            const double l = (2.0 * mx * my + c1) / (mx * mx + my * my + c1);
            const double c = (2.0 * mgx * mgy + c2) / (mgx * mgx + mgy * mgy + c2);
            const double s = (mgxgy + c3) / (mgx * mgy + c3);
            r.map.values[static_cast<std::size_t>(cy) * r.map.cols + cx] = l * c * s;
            ++r.windows_used;
        }
    }
    r.score = pool(r.map);
    return r;
}

} // namespace faceq
