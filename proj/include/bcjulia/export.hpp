#pragma once

#include <array>
#include <filesystem>
#include <string>
#include <vector>

#include "bcjulia/slicer.hpp"

namespace bcjulia {

/// Shortest text for `value` with 17 significant digits (printf "%.17g").
std::string format_double(double value);

/// RGB used in PLY output: JxJ black, JxK red, KxJ blue, planar black.
std::array<unsigned char, 3> tag_color(Piece tag);

/// Header `x,y,z,tag`, one row per point, 17 significant digits.
void export_csv(const std::vector<Point3>& points, const std::filesystem::path& path);

/// ASCII PLY 1.0 with float x,y,z and uchar red,green,blue per vertex.
void export_ply(const std::vector<Point3>& points, const std::filesystem::path& path);

/// Whitespace-separated x y z per line, no header.
void export_xyz(const std::vector<Point3>& points, const std::filesystem::path& path);

/// Reads a file written by export_csv. Throws std::runtime_error on malformed
/// rows, naming the file and line.
std::vector<Point3> read_csv(const std::filesystem::path& path);

}  // namespace bcjulia
