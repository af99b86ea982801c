#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "bcjulia/bicomplex.hpp"
#include "bcjulia/complex_dynamics.hpp"
#include "bcjulia/slicer.hpp"

namespace bcjulia::cli {

inline constexpr std::string_view kVersion = "0.1.0";

enum class Format { csv, ply, xyz };

std::string_view to_string(Format f);
std::optional<Format> parse_format(std::string_view text);

/// Comma-separated reals with '.' as the decimal separator. Accepts between
/// `min_parts` and `max_parts` values. Throws std::invalid_argument naming the
/// 1-based character position of the first bad field.
std::vector<double> parse_reals(std::string_view text, std::size_t min_parts, std::size_t max_parts);

/// "re" or "re,im".
Complex parse_complex(std::string_view text);

/// "a", "a,b" or "a,b,c,d".
Bicomplex parse_bicomplex(std::string_view text);

/// Full parameter set of one generator run; serialized into the manifest.
struct RunOptions {
    std::string subcommand;
    std::array<double, 4> c{};
    IimConfig iim;
    GridSpec grid;
    std::size_t budget = 300000;
    SliceSpec slice;
    std::string out;
    std::vector<Format> formats;
};

std::string manifest_json(const RunOptions& opts, const std::string& extra_json_fields);
RunOptions options_from_manifest(const std::filesystem::path& manifest);

struct RunReport {
    std::vector<std::filesystem::path> outputs;
};

/// Runs a generator subcommand (julia2d, julia3d-iim, julia3d-boundary) and
/// writes its outputs plus `<out>.meta.json`.
RunReport run_generator(const RunOptions& opts, std::ostream& log);

void report_fixed_points(const Bicomplex& c, std::ostream& out);
void report_dendrite(const Bicomplex& c, const GridSpec& grid, std::ostream& out);

/// Entry point; returns the process exit code. Errors are printed as a single
/// `bcjulia: error: ...` line on `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bcjulia::cli
