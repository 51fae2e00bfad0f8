#include "faceq/segmentation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace faceq {

void SkinThresholds::validate() const {
    auto in_range = [](int v) { return v >= 0 && v <= 255; };
    if (!in_range(cr_min) || !in_range(cr_max) || !in_range(cb_min) || !in_range(cb_max))
        throw std::invalid_argument("skin thresholds must lie in [0, 255]");
    if (cr_min > cr_max || cb_min > cb_max)
        throw std::invalid_argument("skin threshold ranges must satisfy min <= max");
}

SkinThresholds threshold_preset(const std::string& name) {
    if (name == "paper") return SkinThresholds{133, 173, 77, 127};
    if (name == "chai") return SkinThresholds{136, 156, 110, 123};
    throw std::invalid_argument("unknown threshold preset '" + name +
                                "' (expected 'paper' or 'chai')");
}

RegionMask::RegionMask(int w, int h) : width(w), height(h) {
    if (w <= 0 || h <= 0)
        throw ShapeError("mask dimensions must be positive, got " +
                         std::to_string(w) + "x" + std::to_string(h));
    bits.assign(static_cast<std::size_t>(w) * h, 0);
}

int RegionMask::count() const {
    return static_cast<int>(std::accumulate(bits.begin(), bits.end(), 0));
}

RegionMask skin_mask(const YCrCbImage& img, const SkinThresholds& t) {
    t.validate();
    if (img.width <= 0 || img.height <= 0)
        throw ShapeError("cannot segment an empty image");

    RegionMask m(img.width, img.height);
    const std::size_t n = m.bits.size();
    for (std::size_t i = 0; i < n; ++i) {
        const double cr = img.cr.samples[i];
        const double cb = img.cb.samples[i];
        const bool skin = cr >= t.cr_min && cr <= t.cr_max &&
                          cb >= t.cb_min && cb <= t.cb_max;
        m.bits[i] = skin ? 1 : 0;
    }
    return m;
}

RegionMask largest_component(const RegionMask& m) {
    RegionMask out(m.width, m.height);
    if (m.count() == 0) return out;

    const int w = m.width;
    const int h = m.height;
    std::vector<int> label(static_cast<std::size_t>(w) * h, -1);
    std::vector<std::size_t> stack;

    int best_label = -1;
    long long best_size = 0;
    int next_label = 0;

    for (int sy = 0; sy < h; ++sy) {
        for (int sx = 0; sx < w; ++sx) {
            const std::size_t start = static_cast<std::size_t>(sy) * w + sx;
            if (m.bits[start] == 0 || label[start] >= 0) continue;

            const int cur = next_label++;
            long long size = 0;
            label[start] = cur;
            stack.push_back(start);
            while (!stack.empty()) {
                const std::size_t idx = stack.back();
                stack.pop_back();
                ++size;
                const int x = static_cast<int>(idx % w);
                const int y = static_cast<int>(idx / w);
                for (int dy = -1; dy <= 1; ++dy) {
                    for (int dx = -1; dx <= 1; ++dx) {
                        if (dx == 0 && dy == 0) continue;
                        const int nx = x + dx;
                        const int ny = y + dy;
                        if (nx < 0 || ny < 0 || nx >= w || ny >= h) continue;
                        const std::size_t nidx = static_cast<std::size_t>(ny) * w + nx;
                        if (m.bits[nidx] == 0 || label[nidx] >= 0) continue;
                        label[nidx] = cur;
                        stack.push_back(nidx);
                    }
                }
            }
            // Strict > keeps the first component found on ties, i.e. the one
            // whose top-left pixel comes earliest in scan order.
            if (size > best_size) {
                best_size = size;
                best_label = cur;
            }
        }
    }

    for (std::size_t i = 0; i < label.size(); ++i)
        out.bits[i] = (label[i] == best_label) ? 1 : 0;
    return out;
}

RegionMask fill_holes(const RegionMask& m) {
    if (m.width <= 0 || m.height <= 0)
        throw ShapeError("cannot fill an empty mask");

    const int w = m.width;
    const int h = m.height;
    std::vector<std::uint8_t> outside(static_cast<std::size_t>(w) * h, 0);
    std::vector<std::size_t> stack;

    auto push = [&](int x, int y) {
        const std::size_t idx = static_cast<std::size_t>(y) * w + x;
        if (m.bits[idx] == 0 && outside[idx] == 0) {
            outside[idx] = 1;
            stack.push_back(idx);
        }
    };

    for (int x = 0; x < w; ++x) {
        push(x, 0);
        push(x, h - 1);
    }
    for (int y = 0; y < h; ++y) {
        push(0, y);
        push(w - 1, y);
    }
    while (!stack.empty()) {
        const std::size_t idx = stack.back();
        stack.pop_back();
        const int x = static_cast<int>(idx % w);
        const int y = static_cast<int>(idx / w);
        if (x > 0) push(x - 1, y);
        if (x + 1 < w) push(x + 1, y);
        if (y > 0) push(x, y - 1);
        if (y + 1 < h) push(x, y + 1);
    }

    RegionMask out(w, h);
    for (std::size_t i = 0; i < out.bits.size(); ++i)
        out.bits[i] = (m.bits[i] != 0 || outside[i] == 0) ? 1 : 0;
    return out;
}

Rect face_rect(const RegionMask& m) {
    int min_x = m.width;
    int min_y = m.height;
    int max_x = -1;
    int max_y = -1;
    for (int y = 0; y < m.height; ++y) {
        for (int x = 0; x < m.width; ++x) {
            if (!m.at(x, y)) continue;
            min_x = std::min(min_x, x);
            min_y = std::min(min_y, y);
            max_x = std::max(max_x, x);
            max_y = std::max(max_y, y);
        }
    }
    if (max_x < 0)
        throw NoRegionError("no face region detected");
    return Rect{min_x, min_y, max_x - min_x + 1, max_y - min_y + 1};
}

Rect body_region(int image_w, int image_h, const Rect& face) {
    if (image_w <= 0 || image_h <= 0)
        throw ShapeError("image dimensions must be positive");
    if (face.w <= 0 || face.h <= 0 || face.x0 < 0 || face.y0 < 0 ||
        face.x1() > image_w || face.y1() > image_h)
        throw ShapeError("face rect must lie inside the image");

    // Candidate strips in fixed order: above, below, left, right.
    const Rect candidates[4] = {
        Rect{0, 0, image_w, face.y0},
        Rect{0, face.y1(), image_w, image_h - face.y1()},
        Rect{0, 0, face.x0, image_h},
        Rect{face.x1(), 0, image_w - face.x1(), image_h},
    };

    const Rect* best = nullptr;
    for (const Rect& c : candidates) {
        if (c.w <= 0 || c.h <= 0) continue;
        if (best == nullptr) {
            best = &c;
            continue;
        }
        if (c.area() > best->area() ||
            (c.area() == best->area() &&
             (c.y0 < best->y0 || (c.y0 == best->y0 && c.x0 < best->x0)))) {
            best = &c;
        }
    }
    if (best == nullptr)
        throw NoRegionError("face region covers the whole image, no room for a body region");
    return *best;
}

RegionPair detect_regions(const YCrCbImage& img, const SkinThresholds& t, bool fill) {
    RegionMask face_component = largest_component(skin_mask(img, t));
    if (fill) face_component = fill_holes(face_component);
    RegionPair out;
    out.face = face_rect(face_component);
    out.body = body_region(img.width, img.height, out.face);
    out.overlapping = false;
    return out;
}

} // namespace faceq
