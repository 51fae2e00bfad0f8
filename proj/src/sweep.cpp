#include "faceq/sweep.hpp"

#include <algorithm>
#include <stdexcept>

#include <opencv2/core.hpp>
#include <opencv2/core/version.hpp>
#include <opencv2/imgcodecs.hpp>

namespace faceq {

const char* to_string(Metric m) {
    switch (m) {
        case Metric::kQ: return "Q";
        case Metric::kSsim: return "SSIM";
        case Metric::kGssim: return "GSSIM";
    }
    throw std::invalid_argument("bad metric enum value");
}

const char* to_string(Region r) {
    switch (r) {
        case Region::kFace: return "face";
        case Region::kBody: return "body";
        case Region::kFull: return "full";
    }
    throw std::invalid_argument("bad region enum value");
}

Metric parse_metric(const std::string& s) {
    if (s == "Q") return Metric::kQ;
    if (s == "SSIM") return Metric::kSsim;
    if (s == "GSSIM") return Metric::kGssim;
    throw std::invalid_argument("unknown metric '" + s + "' (expected Q, SSIM or GSSIM)");
}

Region parse_region(const std::string& s) {
    if (s == "face") return Region::kFace;
    if (s == "body") return Region::kBody;
    if (s == "full") return Region::kFull;
    throw std::invalid_argument("unknown region '" + s + "' (expected face, body or full)");
}

void SweepConfig::validate() const {
    if (qualities.empty())
        throw std::invalid_argument("quality list must not be empty");
    for (int q : qualities)
        if (q < 1 || q > 100)
            throw std::invalid_argument("quality " + std::to_string(q) +
                                        " outside [1, 100]");
    if (metrics.empty())
        throw std::invalid_argument("metric list must not be empty");
    if (regions.empty())
        throw std::invalid_argument("region list must not be empty");
    thresholds.validate();
    params.validate();
}

std::string codec_id() {
    return std::string("OpenCV ") + CV_VERSION + " imgcodecs JPEG";
}

namespace {

cv::Mat to_bgr_mat(const RgbImage& img) {
    cv::Mat m(img.height, img.width, CV_8UC3);
    for (int y = 0; y < img.height; ++y) {
        cv::Vec3b* row = m.ptr<cv::Vec3b>(y);
        for (int x = 0; x < img.width; ++x) {
            const Rgb8& px = img.at(x, y);
            row[x] = cv::Vec3b(px.b, px.g, px.r);
        }
    }
    return m;
}

RgbImage from_bgr_mat(const cv::Mat& m) {
    RgbImage out(m.cols, m.rows);
    for (int y = 0; y < m.rows; ++y) {
        const cv::Vec3b* row = m.ptr<cv::Vec3b>(y);
        for (int x = 0; x < m.cols; ++x) {
            Rgb8& px = out.at(x, y);
            px.b = row[x][0];
            px.g = row[x][1];
            px.r = row[x][2];
        }
    }
    return out;
}

} // namespace

RgbImage jpeg_roundtrip(const RgbImage& img, int quality) {
    if (quality < 1 || quality > 100)
        throw std::invalid_argument("JPEG quality " + std::to_string(quality) +
                                    " outside [1, 100]");
    if (img.width <= 0 || img.height <= 0)
        throw ShapeError("cannot encode an empty image");

    std::vector<uchar> buf;
    const std::vector<int> opts = {cv::IMWRITE_JPEG_QUALITY, quality};
    if (!cv::imencode(".jpg", to_bgr_mat(img), buf, opts))
        throw CodecError("JPEG encode failed at quality " + std::to_string(quality));

    cv::Mat decoded = cv::imdecode(buf, cv::IMREAD_COLOR);
    if (decoded.empty() || decoded.type() != CV_8UC3)
        throw CodecError("JPEG decode failed at quality " + std::to_string(quality));
    if (decoded.cols != img.width || decoded.rows != img.height)
        throw CodecError("JPEG round trip changed dimensions");
    return from_bgr_mat(decoded);
}

namespace {

// Dedupe + sort so the row order promised by run_sweep holds by construction.
template <typename T>
std::vector<T> canonical(std::vector<T> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

Rect checked_rect(const Rect& r, int img_w, int img_h, const SsimParams& p,
                  const char* what) {
    if (r.w <= 0 || r.h <= 0 || r.x0 < 0 || r.y0 < 0 || r.x1() > img_w || r.y1() > img_h)
        throw ShapeError(std::string(what) + " region must lie inside the image");
    if (r.w < p.window || r.h < p.window)
        throw SizeError(std::string(what) + " region " + std::to_string(r.w) + "x" +
                        std::to_string(r.h) + " is smaller than the " +
                        std::to_string(p.window) + "x" + std::to_string(p.window) +
                        " window");
    return r;
}

} // namespace

SweepTable run_sweep(const RgbImage& original, const SweepConfig& cfg) {
    cfg.validate();

    const std::vector<int> qualities = canonical(cfg.qualities);
    const std::vector<Metric> metrics = canonical(cfg.metrics);
    const std::vector<Region> regions = canonical(cfg.regions);

    const bool want_face = std::find(regions.begin(), regions.end(), Region::kFace) != regions.end();
    const bool want_body = std::find(regions.begin(), regions.end(), Region::kBody) != regions.end();

    // Resolve the rectangle for each requested region up front.
    std::optional<Rect> face = cfg.face_rect;
    std::optional<Rect> body = cfg.body_rect;
    const YCrCbImage ref_ycc = rgb_to_ycrcb(original);
    if ((want_face && !face) || (want_body && !body)) {
        if (face && !body) {
            body = body_region(original.width, original.height, *face);
        } else {
            const RegionPair detected = detect_regions(ref_ycc, cfg.thresholds, cfg.fill_holes);
            if (!face) face = detected.face;
            if (!body) body = detected.body;
        }
    }

    std::vector<Rect> rects;
    rects.reserve(regions.size());
    for (Region r : regions) {
        switch (r) {
            case Region::kFace:
                rects.push_back(checked_rect(*face, original.width, original.height,
                                             cfg.params, "face"));
                break;
            case Region::kBody:
                rects.push_back(checked_rect(*body, original.width, original.height,
                                             cfg.params, "body"));
                break;
            case Region::kFull:
                rects.push_back(checked_rect(Rect{0, 0, original.width, original.height},
                                             original.width, original.height, cfg.params,
                                             "full"));
                break;
        }
    }

    std::vector<Plane> ref_crops;
    ref_crops.reserve(rects.size());
    for (const Rect& r : rects) ref_crops.push_back(crop(ref_ycc.y, r));

    SweepTable table;
    table.rows.reserve(qualities.size() * regions.size() * metrics.size());
    for (int q : qualities) {
        const YCrCbImage deg_ycc = rgb_to_ycrcb(jpeg_roundtrip(original, q));
        for (std::size_t i = 0; i < regions.size(); ++i) {
            const Plane deg_crop = crop(deg_ycc.y, rects[i]);
            for (Metric m : metrics) {
                double value = 0.0;
                switch (m) {
                    case Metric::kQ:
                        value = uiqi(ref_crops[i], deg_crop, cfg.params).score;
                        break;
                    case Metric::kSsim:
                        value = ssim(ref_crops[i], deg_crop, cfg.params).score;
                        break;
                    case Metric::kGssim:
                        value = gssim(ref_crops[i], deg_crop, cfg.params).score;
                        break;
                }
                table.rows.push_back(SweepRow{q, regions[i], m, value});
            }
        }
    }
    return table;
}

} // namespace faceq
