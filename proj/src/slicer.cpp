#include "bcjulia/slicer.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bcjulia {

std::optional<Axis> parse_axis(std::string_view text) {
    if (text.size() != 1) {
        return std::nullopt;
    }
    switch (text[0]) {
        case 'a': return Axis::a;
        case 'b': return Axis::b;
        case 'c': return Axis::c;
        case 'd': return Axis::d;
        default: return std::nullopt;
    }
}

char to_char(Axis axis) { return static_cast<char>('a' + static_cast<int>(axis)); }

void SliceSpec::validate() const {
    if (!(epsilon > 0.0)) {
        throw std::invalid_argument("slice epsilon must be positive");
    }
}

std::vector<Point3> slice3d(const PointCloud4D& cloud, const SliceSpec& spec) {
    spec.validate();
    const auto drop = static_cast<std::size_t>(spec.drop_axis);
    std::vector<Point3> out;
    for (const auto& [w, tag] : cloud.points) {
        const auto comps = w.components();
        if (!(std::abs(comps[drop]) < spec.epsilon)) {
            continue;
        }
        std::array<double, 3> kept{};
        std::size_t k = 0;
        for (std::size_t axis = 0; axis < 4; ++axis) {
            if (axis != drop) {
                kept[k++] = comps[axis];
            }
        }
        out.push_back({kept[0], kept[1], kept[2], tag});
    }
    return out;
}

std::vector<Point3> planar_points(const std::vector<Complex>& points) {
    std::vector<Point3> out;
    out.reserve(points.size());
    for (const Complex z : points) {
        out.push_back({z.real(), z.imag(), 0.0, Piece::planar});
    }
    return out;
}

CloudStats stats(const PointCloud4D& cloud) {
    CloudStats s;
    s.count = cloud.size();
    if (cloud.empty()) {
        return s;
    }
    std::array<Interval, 4> box;
    const auto first = cloud.points.front().w.components();
    for (std::size_t axis = 0; axis < 4; ++axis) {
        box[axis] = {first[axis], first[axis]};
    }
    double sum = 0.0;
    for (const auto& [w, tag] : cloud.points) {
        const auto comps = w.components();
        for (std::size_t axis = 0; axis < 4; ++axis) {
            box[axis].lo = std::min(box[axis].lo, comps[axis]);
            box[axis].hi = std::max(box[axis].hi, comps[axis]);
        }
        const double n = norm(w);
        sum += n;
        s.max_norm = std::max(s.max_norm, n);
        ++s.tags[tag];
    }
    s.bounds = box;
    s.mean_norm = sum / static_cast<double>(s.count);
    return s;
}

}  // namespace bcjulia
