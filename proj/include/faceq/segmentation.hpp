#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "faceq/image.hpp"

namespace faceq {

// Inclusive chroma ranges that classify a pixel as skin. Luma is ignored on
// purpose: the whole point of chroma-plane segmentation is robustness to
// illumination. Defaults are the wide ranges (preset "paper"); the narrower
// alternative (preset "chai") is Cr 136..156, Cb 110..123.
struct SkinThresholds {
    int cr_min = 133;
    int cr_max = 173;
    int cb_min = 77;
    int cb_max = 127;

    void validate() const;
    bool operator==(const SkinThresholds&) const = default;
};

// Returns the thresholds for a named preset ("paper" or "chai"),
// throws std::invalid_argument for anything else.
SkinThresholds threshold_preset(const std::string& name);

// Binary per-pixel mask, row major, one byte per pixel (0 or 1).
struct RegionMask {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> bits;

    RegionMask() = default;
    RegionMask(int w, int h);

    bool at(int x, int y) const {
        return bits[static_cast<std::size_t>(y) * width + x] != 0;
    }
    void set(int x, int y, bool v) {
        bits[static_cast<std::size_t>(y) * width + x] = v ? 1 : 0;
    }
    int count() const;
};

// Face box plus the companion body box. The two never overlap unless the
// caller supplied explicit rectangles, in which case `overlapping` says so.
struct RegionPair {
    Rect face;
    Rect body;
    bool overlapping = false;
};

// Pixel-wise chroma thresholding of a YCrCb image.
RegionMask skin_mask(const YCrCbImage& img, const SkinThresholds& t);

// Keep only the largest 8-connected component of set pixels (ties broken by
// lowest top-left pixel in scan order). All-empty input stays empty.
RegionMask largest_component(const RegionMask& m);

// Fill enclosed holes: unset pixels not reachable from the mask border
// through other unset pixels (4-connected flood) become set.
RegionMask fill_holes(const RegionMask& m);

// Tight bounding box of the set pixels. Throws NoRegionError on an empty mask.
Rect face_rect(const RegionMask& m);

// Largest of the four image strips left over around the face box:
// above, below, left, right of it (each full-width or full-height).
// Ties go to the larger area, then topmost, then leftmost, then the
// above/below/left/right candidate order. Throws NoRegionError when the face
// box covers the whole image in both directions.
Rect body_region(int image_w, int image_h, const Rect& face);

// Convenience pipeline: mask -> largest component (-> fill) -> face box ->
// body box.
RegionPair detect_regions(const YCrCbImage& img, const SkinThresholds& t,
                          bool fill = false);

} // namespace faceq
