#pragma once

#include <optional>
#include <string>
#include <vector>

#include "faceq/image.hpp"
#include "faceq/metrics.hpp"
#include "faceq/segmentation.hpp"

namespace faceq {

enum class Metric { kQ = 0, kSsim = 1, kGssim = 2 };
enum class Region { kFace = 0, kBody = 1, kFull = 2 };

const char* to_string(Metric m);
const char* to_string(Region r);
Metric parse_metric(const std::string& s);
Region parse_region(const std::string& s);

struct SweepConfig {
    std::vector<int> qualities = {10, 20, 30, 40, 50, 60, 70, 80, 90, 100};
    std::vector<Metric> metrics = {Metric::kQ, Metric::kSsim, Metric::kGssim};
    std::vector<Region> regions = {Region::kFace, Region::kBody};

    // Explicit rectangles; left unset they are auto-detected from the
    // original image with `thresholds` (body derived from the face box).
    std::optional<Rect> face_rect;
    std::optional<Rect> body_rect;

    SkinThresholds thresholds;
    bool fill_holes = false;
    SsimParams params;

    void validate() const;
};

struct SweepRow {
    int quality = 0;
    Region region = Region::kFull;
    Metric metric = Metric::kQ;
    double value = 0.0;
};

struct SweepTable {
    std::vector<SweepRow> rows;
};

// Identifier of the JPEG implementation behind jpeg_roundtrip, for report
// headers.
std::string codec_id();

// Encode to baseline JPEG in memory at the given quality (1..100) and decode
// back. Dimensions always survive the trip. Throws std::invalid_argument for
// an out-of-range quality, CodecError if the codec rejects the data.
RgbImage jpeg_roundtrip(const RgbImage& img, int quality);

// Degrade the original across all requested qualities and score every
// requested region with every requested metric against the uncompressed
// original. All scoring happens on the luma plane. Rows come out sorted by
// (quality asc, region face<body<full, metric Q<SSIM<GSSIM); duplicate
// qualities/metrics/regions in the config are collapsed.
SweepTable run_sweep(const RgbImage& original, const SweepConfig& cfg);

} // namespace faceq
