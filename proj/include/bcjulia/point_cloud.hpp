#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "bcjulia/bicomplex.hpp"

namespace bcjulia {

/// Which cartesian piece of the Julia set a point was generated from.
/// `planar` marks points of a one-variable (complex) cloud.
enum class Piece : unsigned char { JxJ, JxK, KxJ, planar };

std::string_view to_string(Piece piece);
std::optional<Piece> parse_piece(std::string_view text);

struct TaggedPoint {
    Bicomplex w;
    Piece tag;
};

struct PointCloud4D {
    std::vector<TaggedPoint> points;
    /// Pairs drawn more than once by budgeted sampling.
    std::size_t duplicate_pairs = 0;

    std::size_t size() const { return points.size(); }
    bool empty() const { return points.empty(); }
};

}  // namespace bcjulia
