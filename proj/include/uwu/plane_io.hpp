#pragma once

#include <filesystem>
#include <string>

#include "uwu/transform.hpp"

namespace uwu {

/// Plain (textual, P2) PGM, samples mapped to [0,1] by dividing by maxval.
/// Dimensions are capped at 16384 per side.
Plane read_pgm(const std::filesystem::path& path);

/// Raw little-endian float64 plane, row-major, with a JSON sidecar
/// <path>.json carrying {"height": H, "width": W}.
void write_plane_raw(const std::filesystem::path& path, const Plane& plane);
Plane read_plane_raw(const std::filesystem::path& path);

/// Write via temp file + rename so readers never observe partial output.
void write_file_atomic(const std::filesystem::path& path, const std::string& bytes);

/// 17-significant-digit decimal form, enough to round-trip a double.
std::string format_g17(double v);

}  // namespace uwu
