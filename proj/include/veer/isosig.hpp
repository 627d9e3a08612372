#pragma once

#include "veer/triangulation.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>

namespace veer {

// Isomorphism-signature codec (the dialect used by the veering census files).
// See docs/formats.md for the exact alphabet and bit layout.

struct decode_error : std::runtime_error {
    size_t offset;
    decode_error(const std::string& msg, size_t off)
        : std::runtime_error(msg + " at offset " + std::to_string(off)), offset(off) {}
};

ideal_triangulation decode_isosig(const std::string& sig);
std::string encode_isosig(const ideal_triangulation& T);

} // namespace veer
