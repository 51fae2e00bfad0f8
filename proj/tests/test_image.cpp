#include <filesystem>
#include <fstream>

#include <opencv2/core.hpp>
#include <opencv2/imgcodecs.hpp>

#include "doctest.h"
#include "faceq/image.hpp"
#include "faceq/image_io.hpp"
#include "support.hpp"

using namespace faceq;

namespace {

std::filesystem::path unit_tmp_dir() {
    auto d = std::filesystem::temp_directory_path() / "faceq_unit";
    std::filesystem::create_directories(d);
    return d;
}

void write_bgr_fixture(const std::filesystem::path& path, const RgbImage& img) {
    cv::Mat m(img.height, img.width, CV_8UC3);
    for (int y = 0; y < img.height; ++y) {
        for (int x = 0; x < img.width; ++x) {
            const Rgb8& px = img.at(x, y);
            m.at<cv::Vec3b>(y, x) = cv::Vec3b(px.b, px.g, px.r);
        }
    }
    REQUIRE(cv::imwrite(path.string(), m));
}

} // namespace

TEST_CASE("color conversion pins the 8-bit code values") {
    RgbImage img(3, 1);
    img.at(0, 0) = {255, 0, 0}; // pure red saturates Cr
    img.at(1, 0) = {0, 0, 0};
    img.at(2, 0) = {255, 255, 255};

    const YCrCbImage ycc = rgb_to_ycrcb(img);
    CHECK(ycc.y.at(0, 0) == 76.0);
    CHECK(ycc.cr.at(0, 0) == 255.0); // 255.5 rounds up and clamps back
    CHECK(ycc.cb.at(0, 0) == 85.0);

    CHECK(ycc.y.at(1, 0) == 0.0);
    CHECK(ycc.cr.at(1, 0) == 128.0);
    CHECK(ycc.cb.at(1, 0) == 128.0);

    CHECK(ycc.y.at(2, 0) == 255.0);
    CHECK(ycc.cr.at(2, 0) == 128.0);
    CHECK(ycc.cb.at(2, 0) == 128.0);
}

TEST_CASE("conversion output stays inside the 8-bit range") {
    const RgbImage img = testsupport::random_rgb(32, 32, 99);
    const YCrCbImage ycc = rgb_to_ycrcb(img);
    for (const Plane* p : {&ycc.y, &ycc.cr, &ycc.cb}) {
        for (double v : p->samples) {
            CHECK(v >= 0.0);
            CHECK(v <= 255.0);
            CHECK(v == static_cast<double>(static_cast<int>(v)));
        }
    }
}

TEST_CASE("raising any channel never lowers luma") {
    const Rgb8 base{87, 143, 201};
    RgbImage img(4, 1);
    img.at(0, 0) = base;
    img.at(1, 0) = {static_cast<std::uint8_t>(base.r + 20), base.g, base.b};
    img.at(2, 0) = {base.r, static_cast<std::uint8_t>(base.g + 20), base.b};
    img.at(3, 0) = {base.r, base.g, static_cast<std::uint8_t>(base.b + 20)};
    const YCrCbImage ycc = rgb_to_ycrcb(img);
    CHECK(ycc.y.at(1, 0) >= ycc.y.at(0, 0));
    CHECK(ycc.y.at(2, 0) >= ycc.y.at(0, 0));
    CHECK(ycc.y.at(3, 0) >= ycc.y.at(0, 0));
}

TEST_CASE("luma_plane returns the Y samples") {
    const RgbImage img = testsupport::random_rgb(8, 8, 7);
    const YCrCbImage ycc = rgb_to_ycrcb(img);
    const Plane y = luma_plane(ycc);
    CHECK(y.width == 8);
    CHECK(y.height == 8);
    CHECK(y.samples == ycc.y.samples);
}

TEST_CASE("plane construction validates its shape") {
    CHECK_THROWS_AS(Plane(0, 4), ShapeError);
    CHECK_THROWS_AS(Plane(4, -1), ShapeError);
    CHECK_THROWS_AS(Plane(2, 2, std::vector<double>{1.0, 2.0, 3.0}), ShapeError);
    CHECK_THROWS_AS(RgbImage(0, 3), ShapeError);

    const Plane p(3, 2, std::vector<double>{1, 2, 3, 4, 5, 6});
    CHECK(p.at(0, 0) == 1.0);
    CHECK(p.at(2, 1) == 6.0);
}

TEST_CASE("crop copies the right samples") {
    Plane p(4, 3);
    for (int y = 0; y < 3; ++y)
        for (int x = 0; x < 4; ++x) p.at(x, y) = 10.0 * y + x;

    const Plane c = crop(p, Rect{1, 1, 2, 2});
    CHECK(c.width == 2);
    CHECK(c.height == 2);
    CHECK(c.at(0, 0) == 11.0);
    CHECK(c.at(1, 0) == 12.0);
    CHECK(c.at(0, 1) == 21.0);
    CHECK(c.at(1, 1) == 22.0);
}

TEST_CASE("nested crops compose by offset") {
    const Plane p = testsupport::random_plane(20, 16, 21);
    const Rect outer{3, 2, 12, 10};
    const Rect inner{4, 5, 6, 4};
    const Plane two_step = crop(crop(p, outer), inner);
    const Plane one_step =
        crop(p, Rect{outer.x0 + inner.x0, outer.y0 + inner.y0, inner.w, inner.h});
    CHECK(two_step.samples == one_step.samples);
}

TEST_CASE("crop rejects empty and out-of-bounds rects") {
    const Plane p(8, 8, 1.0);
    CHECK_THROWS_AS(crop(p, Rect{0, 0, 0, 4}), ShapeError);
    CHECK_THROWS_AS(crop(p, Rect{-1, 0, 4, 4}), ShapeError);
    CHECK_THROWS_AS(crop(p, Rect{5, 5, 4, 4}), ShapeError);
    CHECK_THROWS_AS(crop(p, Rect{0, 0, 9, 2}), ShapeError);
    CHECK_NOTHROW(crop(p, Rect{0, 0, 8, 8}));
}

TEST_CASE("rects_intersect handles touching and containment") {
    CHECK(rects_intersect(Rect{0, 0, 4, 4}, Rect{2, 2, 4, 4}));
    CHECK_FALSE(rects_intersect(Rect{0, 0, 4, 4}, Rect{4, 0, 4, 4})); // edge touch
    CHECK(rects_intersect(Rect{0, 0, 10, 10}, Rect{3, 3, 2, 2}));
    CHECK_FALSE(rects_intersect(Rect{0, 0, 4, 4}, Rect{0, 0, 0, 4}));
}

TEST_CASE("load_image round trips lossless formats and keeps channel order") {
    const auto dir = unit_tmp_dir();
    RgbImage img(2, 2);
    img.at(0, 0) = {255, 0, 0};
    img.at(1, 0) = {10, 20, 30};
    img.at(0, 1) = {0, 255, 128};
    img.at(1, 1) = {200, 100, 50};

    for (const char* ext : {".png", ".tif"}) {
        const auto path = dir / (std::string("roundtrip") + ext);
        write_bgr_fixture(path, img);
        const RgbImage back = load_image(path.string());
        REQUIRE(back.width == 2);
        REQUIRE(back.height == 2);
        CHECK(back.pixels == img.pixels);
    }
}

TEST_CASE("load_image decodes baseline JPEG") {
    const auto dir = unit_tmp_dir();
    const auto path = dir / "flat.jpg";
    const RgbImage img(16, 16, Rgb8{80, 120, 160});
    write_bgr_fixture(path, img);

    const RgbImage back = load_image(path.string());
    REQUIRE(back.width == 16);
    REQUIRE(back.height == 16);
    // A flat field survives JPEG almost untouched.
    for (const Rgb8& px : back.pixels) {
        CHECK(std::abs(px.r - 80) <= 4);
        CHECK(std::abs(px.g - 120) <= 4);
        CHECK(std::abs(px.b - 160) <= 4);
    }
}

TEST_CASE("load_image distinguishes missing files from broken ones") {
    const auto dir = unit_tmp_dir();
    CHECK_THROWS_AS(load_image((dir / "no_such_file.png").string()), IoError);

    const auto junk = dir / "junk.png";
    std::ofstream(junk) << "this is not an image";
    CHECK_THROWS_AS(load_image(junk.string()), DecodeError);
}

TEST_CASE("bundled portrait loads at its recorded size") {
    const RgbImage img = load_image(testsupport::data_path("portrait.png"));
    CHECK(img.width == 512);
    CHECK(img.height == 512);
}
