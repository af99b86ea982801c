#pragma once

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "bcjulia/point_cloud.hpp"

namespace bcjulia {

enum class Axis : unsigned char { a = 0, b = 1, c = 2, d = 3 };

std::optional<Axis> parse_axis(std::string_view text);
char to_char(Axis axis);

inline constexpr double kDefaultEpsilon = 0.05;

struct SliceSpec {
    Axis drop_axis = Axis::d;
    double epsilon = kDefaultEpsilon;

    /// Throws std::invalid_argument unless epsilon > 0.
    void validate() const;
};

struct Point3 {
    double x;
    double y;
    double z;
    Piece tag;

    friend bool operator==(const Point3&, const Point3&) = default;
};

/// Keeps points whose dropped component satisfies |value| < epsilon and
/// returns the remaining three components in a, b, c, d order.
std::vector<Point3> slice3d(const PointCloud4D& cloud, const SliceSpec& spec);

/// Planar cloud as (re, im, 0) triples tagged `planar`.
std::vector<Point3> planar_points(const std::vector<Complex>& points);

struct Interval {
    double lo;
    double hi;
};

struct CloudStats {
    std::size_t count = 0;
    std::optional<std::array<Interval, 4>> bounds;  ///< empty for an empty cloud
    double mean_norm = 0.0;
    double max_norm = 0.0;
    std::map<Piece, std::size_t> tags;
};

CloudStats stats(const PointCloud4D& cloud);

}  // namespace bcjulia
