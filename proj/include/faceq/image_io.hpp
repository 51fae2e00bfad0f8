#pragma once

#include <string>

#include "faceq/image.hpp"

namespace faceq {

// Decode a PNG, TIFF, or baseline JPEG file into 8-bit RGB. Grayscale and
// alpha-carrying files are expanded/flattened to plain RGB by the decoder.
// Throws IoError if the file cannot be read, DecodeError if it is not a
// decodable image.
RgbImage load_image(const std::string& path);

} // namespace faceq
