#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "anim/render.hpp"

namespace anim {

/// Encode the framebuffer as an 8-bit RGBA, non-interlaced PNG. Compression
/// settings are fixed, so identical pixels always produce identical bytes.
std::vector<uint8_t> encode_png(const FrameBuffer& fb);

/// Write bytes to disk, throwing io_error on failure.
void write_file(const std::string& path, const std::vector<uint8_t>& bytes);

} // namespace anim
