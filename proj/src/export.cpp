#include "bcjulia/export.hpp"

#include <charconv>
#include <fstream>
#include <stdexcept>
#include <system_error>

namespace bcjulia {

namespace {

std::ofstream open_for_write(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    }
    return out;
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
    out.flush();
    if (!out) {
        throw std::runtime_error("write to '" + path.string() + "' failed");
    }
}

std::string format_float(float value) {
    std::array<char, 32> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return {buf.data(), end};
}

double parse_double(std::string_view text, const std::filesystem::path& path, std::size_t line) {
    double value = 0.0;
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || end != text.data() + text.size()) {
        throw std::runtime_error(path.string() + ":" + std::to_string(line) + ": bad number '" +
                                 std::string(text) + "'");
    }
    return value;
}

}  // namespace

std::string format_double(double value) {
    std::array<char, 32> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::general, 17);
    return {buf.data(), end};
}

std::array<unsigned char, 3> tag_color(Piece tag) {
    switch (tag) {
        case Piece::JxK: return {200, 30, 30};
        case Piece::KxJ: return {30, 30, 200};
        case Piece::JxJ:
        case Piece::planar: return {0, 0, 0};
    }
    return {0, 0, 0};
}

void export_csv(const std::vector<Point3>& points, const std::filesystem::path& path) {
    std::ofstream out = open_for_write(path);
    out << "x,y,z,tag\n";
    for (const auto& p : points) {
        out << format_double(p.x) << ',' << format_double(p.y) << ',' << format_double(p.z) << ','
            << to_string(p.tag) << '\n';
    }
    finish(out, path);
}

void export_ply(const std::vector<Point3>& points, const std::filesystem::path& path) {
    std::ofstream out = open_for_write(path);
    out << "ply\n"
        << "format ascii 1.0\n"
        << "element vertex " << points.size() << '\n'
        << "property float x\n"
        << "property float y\n"
        << "property float z\n"
        << "property uchar red\n"
        << "property uchar green\n"
        << "property uchar blue\n"
        << "end_header\n";
    for (const auto& p : points) {
        const auto rgb = tag_color(p.tag);
        out << format_float(static_cast<float>(p.x)) << ' ' << format_float(static_cast<float>(p.y)) << ' '
            << format_float(static_cast<float>(p.z)) << ' ' << int{rgb[0]} << ' ' << int{rgb[1]} << ' '
            << int{rgb[2]} << '\n';
    }
    finish(out, path);
}

void export_xyz(const std::vector<Point3>& points, const std::filesystem::path& path) {
    std::ofstream out = open_for_write(path);
    for (const auto& p : points) {
        out << format_double(p.x) << ' ' << format_double(p.y) << ' ' << format_double(p.z) << '\n';
    }
    finish(out, path);
}

std::vector<Point3> read_csv(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open '" + path.string() + "' for reading");
    }
    std::string line;
    if (!std::getline(in, line) || line != "x,y,z,tag") {
        throw std::runtime_error(path.string() + ":1: expected header 'x,y,z,tag'");
    }
    std::vector<Point3> points;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        std::array<std::string_view, 4> fields{};
        std::string_view rest = line;
        for (std::size_t k = 0; k < 4; ++k) {
            const auto comma = rest.find(',');
            if ((k < 3) == (comma == std::string_view::npos)) {
                throw std::runtime_error(path.string() + ":" + std::to_string(line_no) + ": expected 4 fields");
            }
            fields[k] = rest.substr(0, comma);
            rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
        }
        const auto tag = parse_piece(fields[3]);
        if (!tag) {
            throw std::runtime_error(path.string() + ":" + std::to_string(line_no) + ": unknown tag '" +
                                     std::string(fields[3]) + "'");
        }
        points.push_back({parse_double(fields[0], path, line_no), parse_double(fields[1], path, line_no),
                          parse_double(fields[2], path, line_no), *tag});
    }
    return points;
}

}  // namespace bcjulia
