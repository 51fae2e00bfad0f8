#include "faceq/image_io.hpp"

#include <fstream>

#include <opencv2/core.hpp>
#include <opencv2/imgcodecs.hpp>

namespace faceq {

RgbImage load_image(const std::string& path) {
    // Probe with plain file I/O first so that "missing file" and "bad image"
    // stay distinguishable; imread collapses both into an empty Mat.
    {
        std::ifstream probe(path, std::ios::binary);
        if (!probe)
            throw IoError("cannot open '" + path + "' for reading");
    }

    cv::Mat m = cv::imread(path, cv::IMREAD_COLOR);
    if (m.empty())
        throw DecodeError("'" + path + "' is not a decodable PNG/TIFF/JPEG image");
    if (m.type() != CV_8UC3)
        throw DecodeError("'" + path + "' did not decode to 8-bit color");

    RgbImage out(m.cols, m.rows);
    for (int y = 0; y < m.rows; ++y) {
        const cv::Vec3b* row = m.ptr<cv::Vec3b>(y); // BGR order
        for (int x = 0; x < m.cols; ++x) {
            Rgb8& px = out.at(x, y);
            px.b = row[x][0];
            px.g = row[x][1];
            px.r = row[x][2];
        }
    }
    return out;
}

} // namespace faceq
