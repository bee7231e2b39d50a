#pragma once

#include <stdexcept>
#include <string>

namespace sinb {

// Shape/dimension violations on tensor or raster operations.
struct ShapeError : std::runtime_error {
    explicit ShapeError(const std::string& msg) : std::runtime_error(msg) {}
};

// API misuse: out-of-range timestep, non-scalar loss, bad flag values.
struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid structure: skeleton topology mismatch, malformed trajectory sets.
struct StructureError : std::runtime_error {
    explicit StructureError(const std::string& msg) : std::runtime_error(msg) {}
};

// Lookup of an unknown label or name.
struct LookupError : std::runtime_error {
    explicit LookupError(const std::string& msg) : std::runtime_error(msg) {}
};

// Label outside the embedding table range.
struct EncodingError : std::runtime_error {
    explicit EncodingError(const std::string& msg) : std::runtime_error(msg) {}
};

// File I/O and format failures.
struct IoError : std::runtime_error {
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace sinb
