#pragma once

// Straight-line reference computations written directly from the metric
// definitions. These stay deliberately naive and independent of the library
// internals so the two can disagree.

#include <cmath>
#include <vector>

#include "faceq/image.hpp"

namespace oracle {

struct Stats {
    double mf = 0, mg = 0, vf = 0, vg = 0, cov = 0;
};

inline Stats stats(const faceq::Plane& f, const faceq::Plane& g) {
    const int n = f.width * f.height;
    double sf = 0.0, sg = 0.0;
    for (int i = 0; i < n; ++i) {
        sf += f.samples[i];
        sg += g.samples[i];
    }
    Stats s;
    s.mf = sf / n;
    s.mg = sg / n;
    for (int i = 0; i < n; ++i) {
        const double df = f.samples[i] - s.mf;
        const double dg = g.samples[i] - s.mg;
        s.vf += df * df;
        s.vg += dg * dg;
        s.cov += df * dg;
    }
    s.vf /= n - 1;
    s.vg /= n - 1;
    s.cov /= n - 1;
    return s;
}

// Compact product form of the universal index for one window. Undefined when
// both terms of the denominator vanish; callers feed it noisy data only.
inline double q_index(const faceq::Plane& f, const faceq::Plane& g) {
    const Stats s = stats(f, g);
    return 4.0 * s.cov * s.mf * s.mg /
           ((s.vf + s.vg) * (s.mf * s.mf + s.mg * s.mg));
}

inline double ssim_index(const faceq::Plane& f, const faceq::Plane& g, double c1,
                         double c2) {
    const Stats s = stats(f, g);
    return (2.0 * s.mf * s.mg + c1) * (2.0 * s.cov + c2) /
           ((s.mf * s.mf + s.mg * s.mg + c1) * (s.vf + s.vg + c2));
}

// Sobel magnitude with the one-pixel ring copying its nearest interior value.
inline std::vector<double> sobel_mag(const faceq::Plane& p) {
    const int w = p.width;
    const int h = p.height;
    std::vector<double> out(static_cast<std::size_t>(w) * h, 0.0);
    auto idx = [w](int x, int y) { return static_cast<std::size_t>(y) * w + x; };
    for (int y = 1; y < h - 1; ++y) {
        for (int x = 1; x < w - 1; ++x) {
            double gx = 0.0, gy = 0.0;
            const int kx[3][3] = {{-1, 0, 1}, {-2, 0, 2}, {-1, 0, 1}};
            const int ky[3][3] = {{-1, -2, -1}, {0, 0, 0}, {1, 2, 1}};
            for (int j = 0; j < 3; ++j) {
                for (int i = 0; i < 3; ++i) {
                    const double v = p.at(x + i - 1, y + j - 1);
                    gx += kx[j][i] * v;
                    gy += ky[j][i] * v;
                }
            }
            out[idx(x, y)] = std::sqrt(gx * gx + gy * gy);
        }
    }
    auto clampi = [](int v, int lo, int hi) { return v < lo ? lo : (v > hi ? hi : v); };
    for (int y = 1; y < h - 1; ++y) {
        out[idx(0, y)] = out[idx(1, y)];
        out[idx(w - 1, y)] = out[idx(w - 2, y)];
    }
    for (int x = 0; x < w; ++x) {
        out[idx(x, 0)] = out[idx(clampi(x, 1, w - 2), 1)];
        out[idx(x, h - 1)] = out[idx(clampi(x, 1, w - 2), h - 2)];
    }
    return out;
}

// Gradient-weighted index over one window spanning the whole plane pair.
inline double gssim_index(const faceq::Plane& f, const faceq::Plane& g, double c1,
                          double c2) {
    const std::vector<double> gf = sobel_mag(f);
    const std::vector<double> gg = sobel_mag(g);
    const int n = f.width * f.height;
    double sf = 0, sg = 0, sgf = 0, sgg = 0, sprod = 0;
    for (int i = 0; i < n; ++i) {
        sf += f.samples[i];
        sg += g.samples[i];
        sgf += gf[i];
        sgg += gg[i];
        sprod += gf[i] * gg[i];
    }
    const double mf = sf / n, mg = sg / n;
    const double mgf = sgf / n, mgg = sgg / n, mprod = sprod / n;
    const double c3 = c2 / 2.0;
    const double l = (2.0 * mf * mg + c1) / (mf * mf + mg * mg + c1);
    const double c = (2.0 * mgf * mgg + c2) / (mgf * mgf + mgg * mgg + c2);
    const double s = (mprod + c3) / (mgf * mgg + c3);
    return l * c * s;
}

// Sliding-window pooled version, gradients taken over the full planes first.
inline double gssim_sliding(const faceq::Plane& f, const faceq::Plane& g, int window,
                            int stride, double c1, double c2) {
    const std::vector<double> gf = sobel_mag(f);
    const std::vector<double> gg = sobel_mag(g);
    const int w = f.width;
    const double c3 = c2 / 2.0;
    double total = 0.0;
    int count = 0;
    for (int y0 = 0; y0 + window <= f.height; y0 += stride) {
        for (int x0 = 0; x0 + window <= f.width; x0 += stride) {
            double sf = 0, sg = 0, sgf = 0, sgg = 0, sprod = 0;
            for (int y = y0; y < y0 + window; ++y) {
                for (int x = x0; x < x0 + window; ++x) {
                    const std::size_t i = static_cast<std::size_t>(y) * w + x;
                    sf += f.samples[i];
                    sg += g.samples[i];
                    sgf += gf[i];
                    sgg += gg[i];
                    sprod += gf[i] * gg[i];
                }
            }
            const double n = static_cast<double>(window) * window;
            const double mf = sf / n, mg = sg / n;
            const double mgf = sgf / n, mgg = sgg / n, mprod = sprod / n;
            const double l = (2.0 * mf * mg + c1) / (mf * mf + mg * mg + c1);
            const double c = (2.0 * mgf * mgg + c2) / (mgf * mgf + mgg * mgg + c2);
            const double s = (mprod + c3) / (mgf * mgg + c3);
            total += l * c * s;
            ++count;
        }
    }
    return total / count;
}

} // namespace oracle
