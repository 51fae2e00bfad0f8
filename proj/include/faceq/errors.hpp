#pragma once

#include <stdexcept>
#include <string>

namespace faceq {

// Error categories map onto the CLI exit codes (see tools/faceq.cpp):
// IoError and children -> 2, ShapeError and children -> 3,
// NoRegionError -> 4, anything else -> 1.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// File missing or unreadable.
struct IoError : Error {
    using Error::Error;
};

// File readable but not decodable as a supported image.
struct DecodeError : IoError {
    using IoError::IoError;
};

// Encode/decode round trip failed inside the codec.
struct CodecError : IoError {
    using IoError::IoError;
};

// Mismatched dimensions between two rasters.
struct ShapeError : Error {
    using Error::Error;
};

// Input too small for the requested operation (window, kernel, rect).
struct SizeError : ShapeError {
    using ShapeError::ShapeError;
};

// Metric had no usable window to pool.
struct DegenerateError : ShapeError {
    using ShapeError::ShapeError;
};

// Segmentation produced no face region, or no room for a body region.
struct NoRegionError : Error {
    using Error::Error;
};

} // namespace faceq
