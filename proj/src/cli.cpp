#include "bcjulia/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <stdexcept>

#include "bcjulia/bicomplex_dynamics.hpp"
#include "bcjulia/boundary.hpp"
#include "bcjulia/export.hpp"
#include "bcjulia/rng.hpp"

namespace bcjulia::cli {

using nlohmann::json;

std::string_view to_string(Format f) {
    switch (f) {
        case Format::csv: return "csv";
        case Format::ply: return "ply";
        case Format::xyz: return "xyz";
    }
    return "?";
}

std::optional<Format> parse_format(std::string_view text) {
    for (Format f : {Format::csv, Format::ply, Format::xyz}) {
        if (text == to_string(f)) {
            return f;
        }
    }
    return std::nullopt;
}

std::vector<double> parse_reals(std::string_view text, std::size_t min_parts, std::size_t max_parts) {
    std::vector<double> values;
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = text.find(',', pos);
        const std::size_t end = comma == std::string_view::npos ? text.size() : comma;
        const std::string_view field = text.substr(pos, end - pos);
        double v = 0.0;
        // from_chars rejects a leading '+', which users do type.
        const std::size_t skip = !field.empty() && field.front() == '+' ? 1 : 0;
        auto [ptr, ec] = std::from_chars(field.data() + skip, field.data() + field.size(), v);
        if (field.size() == skip || ec != std::errc{} || ptr != field.data() + field.size() || !std::isfinite(v)) {
            const std::size_t bad = ec == std::errc{} && field.size() != skip
                                        ? pos + static_cast<std::size_t>(ptr - field.data())
                                        : pos;
            throw std::invalid_argument("cannot parse number at position " + std::to_string(bad + 1) + " in '" +
                                        std::string(text) + "'");
        }
        values.push_back(v);
        if (comma == std::string_view::npos) {
            break;
        }
        pos = comma + 1;
    }
    if (values.size() < min_parts || values.size() > max_parts) {
        throw std::invalid_argument("expected " + std::to_string(min_parts) + " to " + std::to_string(max_parts) +
                                    " comma-separated values in '" + std::string(text) + "', got " +
                                    std::to_string(values.size()));
    }
    return values;
}

Complex parse_complex(std::string_view text) {
    const auto v = parse_reals(text, 1, 2);
    return {v[0], v.size() > 1 ? v[1] : 0.0};
}

Bicomplex parse_bicomplex(std::string_view text) {
    const auto v = parse_reals(text, 1, 4);
    if (v.size() == 3) {
        throw std::invalid_argument("expected 1, 2 or 4 components for a bicomplex value in '" + std::string(text) +
                                    "'");
    }
    std::array<double, 4> c{};
    std::copy(v.begin(), v.end(), c.begin());
    return {c[0], c[1], c[2], c[3]};
}

namespace {

std::string_view mode_name(IimMode m) { return m == IimMode::random_walk ? "random" : "tree"; }

IimMode parse_mode(std::string_view s) {
    if (s == "random") {
        return IimMode::random_walk;
    }
    if (s == "tree") {
        return IimMode::full_tree;
    }
    throw std::invalid_argument("unknown mode '" + std::string(s) + "' (expected random or tree)");
}

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

json options_json(const RunOptions& o) {
    json formats = json::array();
    for (Format f : o.formats) {
        formats.push_back(std::string(to_string(f)));
    }
    return {
        {"subcommand", o.subcommand},
        {"c", o.c},
        {"iim",
         {{"seed", o.iim.seed},
          {"points", o.iim.n_points},
          {"warmup", o.iim.warmup},
          {"mode", std::string(mode_name(o.iim.mode))},
          {"depth", o.iim.depth}}},
        {"grid",
         {{"x_min", o.grid.x_min},
          {"x_max", o.grid.x_max},
          {"y_min", o.grid.y_min},
          {"y_max", o.grid.y_max},
          {"nx", o.grid.nx},
          {"ny", o.grid.ny},
          {"max_iter", o.grid.max_iter},
          {"escape_radius", o.grid.escape_radius}}},
        {"budget", o.budget},
        {"slice", {{"axis", std::string(1, to_char(o.slice.drop_axis))}, {"epsilon", o.slice.epsilon}}},
        {"out", o.out},
        {"formats", formats},
    };
}

RunOptions options_from_json(const json& j) {
    RunOptions o;
    o.subcommand = j.at("subcommand").get<std::string>();
    o.c = j.at("c").get<std::array<double, 4>>();
    const json& iim = j.at("iim");
    o.iim.seed = iim.at("seed").get<std::uint64_t>();
    o.iim.n_points = iim.at("points").get<std::size_t>();
    o.iim.warmup = iim.at("warmup").get<unsigned>();
    o.iim.mode = parse_mode(iim.at("mode").get<std::string>());
    o.iim.depth = iim.at("depth").get<unsigned>();
    const json& g = j.at("grid");
    o.grid.x_min = g.at("x_min").get<double>();
    o.grid.x_max = g.at("x_max").get<double>();
    o.grid.y_min = g.at("y_min").get<double>();
    o.grid.y_max = g.at("y_max").get<double>();
    o.grid.nx = g.at("nx").get<std::size_t>();
    o.grid.ny = g.at("ny").get<std::size_t>();
    o.grid.max_iter = g.at("max_iter").get<unsigned>();
    o.grid.escape_radius = g.at("escape_radius").get<double>();
    o.budget = j.at("budget").get<std::size_t>();
    const auto axis = parse_axis(j.at("slice").at("axis").get<std::string>());
    if (!axis) {
        throw std::invalid_argument("manifest has an invalid slice axis");
    }
    o.slice.drop_axis = *axis;
    o.slice.epsilon = j.at("slice").at("epsilon").get<double>();
    o.out = j.at("out").get<std::string>();
    for (const auto& f : j.at("formats")) {
        const auto fmt = parse_format(f.get<std::string>());
        if (!fmt) {
            throw std::invalid_argument("manifest has an unknown format");
        }
        o.formats.push_back(*fmt);
    }
    return o;
}

json stats_json(const CloudStats& s) {
    json tags = json::object();
    for (const auto& [tag, n] : s.tags) {
        tags[std::string(to_string(tag))] = n;
    }
    json bounds = json::array();
    if (s.bounds) {
        for (const auto& iv : *s.bounds) {
            bounds.push_back({iv.lo, iv.hi});
        }
    }
    return {{"count", s.count}, {"bounds", bounds}, {"mean_norm", s.mean_norm}, {"max_norm", s.max_norm},
            {"tags", tags}};
}

std::filesystem::path output_path(const std::string& prefix, std::string_view ext) {
    return std::filesystem::path(prefix + "." + std::string(ext));
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    }
    out << text;
    if (!out.flush()) {
        throw std::runtime_error("write to '" + path.string() + "' failed");
    }
}

}  // namespace

std::string manifest_json(const RunOptions& opts, const std::string& extra_json_fields) {
    json j = {
        {"tool", "bcjulia"},
        {"version", std::string(kVersion)},
        {"rng", std::string(kRngName)},
        {"parameters", options_json(opts)},
    };
    if (!extra_json_fields.empty()) {
        j.update(json::parse(extra_json_fields));
    }
    return j.dump(2) + "\n";
}

RunOptions options_from_manifest(const std::filesystem::path& manifest) {
    std::ifstream in(manifest, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open manifest '" + manifest.string() + "'");
    }
    json j;
    try {
        j = json::parse(in);
        return options_from_json(j.at("parameters"));
    } catch (const json::exception& e) {
        throw std::runtime_error("manifest '" + manifest.string() + "': " + e.what());
    }
}

RunReport run_generator(const RunOptions& opts, std::ostream& log) {
    const auto start = std::chrono::steady_clock::now();
    opts.iim.validate();
    opts.slice.validate();
    if (opts.out.empty()) {
        throw std::invalid_argument("--out must not be empty");
    }
    if (opts.formats.empty()) {
        throw std::invalid_argument("no output format selected");
    }

    std::vector<Point3> points;
    json extra = json::object();
    const Bicomplex c_value{opts.c[0], opts.c[1], opts.c[2], opts.c[3]};

    if (opts.subcommand == "julia2d") {
        const Complex c{opts.c[0], opts.c[1]};
        const auto cloud = iim(c, opts.iim);
        points = planar_points(cloud);
        extra["seed_point"] = complex_json(choose_seed_point(c));
    } else if (opts.subcommand == "julia3d-iim" || opts.subcommand == "julia3d-boundary") {
        const BicomplexParam param(c_value);
        extra["projections"] = {{"minus", complex_json(param.minus())}, {"plus", complex_json(param.plus())}};
        PointCloud4D cloud;
        if (opts.subcommand == "julia3d-iim") {
            cloud = iim_bicomplex(param, opts.iim);
            const auto seed = seed_in_JxJ(param);
            extra["seed_point"] = seed.point.components();
        } else {
            opts.grid.validate();
            cloud = build_julia_boundary(param, opts.iim, opts.grid, opts.budget);
            extra["derived_seeds"] = {{"j_minus", sub_seed(opts.iim.seed, 0)},
                                      {"j_plus", sub_seed(opts.iim.seed, 1)},
                                      {"combine", combine_seed(opts.iim.seed)}};
            extra["duplicate_pairs"] = cloud.duplicate_pairs;
        }
        extra["cloud_stats"] = stats_json(stats(cloud));
        points = slice3d(cloud, opts.slice);
    } else {
        throw std::invalid_argument("unknown generator '" + opts.subcommand + "'");
    }

    const auto parent = std::filesystem::path(opts.out).parent_path();
    if (!parent.empty()) {
        std::filesystem::create_directories(parent);
    }
    RunReport report;
    for (Format f : opts.formats) {
        const auto path = output_path(opts.out, to_string(f));
        switch (f) {
            case Format::csv: export_csv(points, path); break;
            case Format::ply: export_ply(points, path); break;
            case Format::xyz: export_xyz(points, path); break;
        }
        report.outputs.push_back(path);
    }
    extra["exported_points"] = points.size();
    json outputs = json::array();
    for (const auto& p : report.outputs) {
        outputs.push_back(p.string());
    }
    extra["outputs"] = outputs;
    const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
    extra["timing_ms"] = elapsed.count();

    const auto manifest = output_path(opts.out, "meta.json");
    write_text(manifest, manifest_json(opts, extra.dump()));
    report.outputs.push_back(manifest);

    log << opts.subcommand << ": " << points.size() << " points written";
    for (const auto& p : report.outputs) {
        log << ' ' << p.string();
    }
    log << '\n';
    return report;
}

void report_fixed_points(const Bicomplex& c, std::ostream& out) {
    const BicomplexParam param(c);
    const auto points = bc_fixed_points(param);
    const auto seed = seed_in_JxJ(param);
    auto fmt_c = [](Complex z) { return format_double(z.real()) + (z.imag() < 0 ? "" : "+") + format_double(z.imag()) + "i1"; };
    out << "c = " << format_double(c.a()) << ", " << format_double(c.b()) << ", " << format_double(c.c()) << ", "
        << format_double(c.d()) << '\n';
    out << "projections: minus = " << fmt_c(param.minus()) << ", plus = " << fmt_c(param.plus()) << '\n';
    out << points.size() << " fixed point(s)\n";
    for (std::size_t k = 0; k < points.size(); ++k) {
        const auto& fp = points[k];
        const auto image = fp.point * fp.point + c;
        const double residual = norm(image - fp.point);
        out << '[' << k << "] w = (" << format_double(fp.point.a()) << ", " << format_double(fp.point.b()) << ", "
            << format_double(fp.point.c()) << ", " << format_double(fp.point.d()) << ")\n"
            << "    P1 = " << fmt_c(fp.comp1.point) << "  |2z| = " << format_double(fp.comp1.multiplier_mag) << "  "
            << to_string(fp.comp1.cls) << '\n'
            << "    P2 = " << fmt_c(fp.comp2.point) << "  |2z| = " << format_double(fp.comp2.multiplier_mag) << "  "
            << to_string(fp.comp2.cls) << '\n'
            << "    residual = " << std::scientific << std::setprecision(3) << residual << std::defaultfloat
            << "  in JxJ: " << (fp.in_JxJ() ? "yes" : "no") << (fp.point == seed.point ? "  (IIM seed)" : "")
            << '\n';
    }
}

void report_dendrite(const Bicomplex& c, const GridSpec& grid, std::ostream& out) {
    const BicomplexParam param(c);
    const auto r = dendrite_heuristic(param, grid);
    out << "grid " << grid.nx << "x" << grid.ny << ", max_iter " << grid.max_iter << '\n';
    out << "minus component: " << to_string(r.minus) << '\n';
    out << "plus component: " << to_string(r.plus) << '\n';
    out << "verdict: " << to_string(r.overall) << '\n';
}

namespace {

struct CliValues {
    std::string c = "0";
    std::size_t points = 100000;
    std::optional<unsigned> warmup;
    std::uint64_t seed = 1;
    std::string mode = "random";
    unsigned depth = 16;
    std::string grid = "401";
    std::string bounds = "-2,2,-2,2";
    unsigned max_iter = 200;
    std::optional<double> escape_radius;
    std::size_t budget = 300000;
    double epsilon = kDefaultEpsilon;
    std::string axis = "d";
    std::string out;
    std::vector<std::string> formats;
};

GridSpec grid_from(const CliValues& v, Complex c_for_radius) {
    GridSpec g;
    const auto b = parse_reals(v.bounds, 4, 4);
    g.x_min = b[0];
    g.x_max = b[1];
    g.y_min = b[2];
    g.y_max = b[3];
    const auto x = v.grid.find('x');
    auto parse_count = [&](std::string_view s) {
        std::size_t n = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), n);
        if (ec != std::errc{} || ptr != s.data() + s.size()) {
            throw std::invalid_argument("cannot parse grid size '" + v.grid + "' (expected N or NXxNY)");
        }
        return n;
    };
    if (x == std::string::npos) {
        g.nx = g.ny = parse_count(v.grid);
    } else {
        g.nx = parse_count(std::string_view(v.grid).substr(0, x));
        g.ny = parse_count(std::string_view(v.grid).substr(x + 1));
    }
    g.max_iter = v.max_iter;
    g.escape_radius = v.escape_radius.value_or(default_escape_radius(c_for_radius));
    g.validate();
    return g;
}

RunOptions options_from(const std::string& sub, const CliValues& v, bool planar) {
    RunOptions o;
    o.subcommand = sub;
    if (planar) {
        const Complex c = parse_complex(v.c);
        o.c = {c.real(), c.imag(), 0.0, 0.0};
    } else {
        o.c = parse_bicomplex(v.c).components();
    }
    o.iim.seed = v.seed;
    o.iim.n_points = v.points;
    o.iim.mode = parse_mode(v.mode);
    o.iim.depth = v.depth;
    o.iim.warmup = v.warmup.value_or(o.iim.mode == IimMode::random_walk ? kDefaultWarmup : 0);
    const BicomplexParam param(Bicomplex{o.c[0], o.c[1], o.c[2], o.c[3]});
    const double radius_c = std::max(std::abs(param.minus()), std::abs(param.plus()));
    o.grid = grid_from(v, Complex{radius_c, 0.0});
    o.budget = v.budget;
    if (o.budget == 0) {
        throw std::invalid_argument("--budget must be at least 1");
    }
    o.slice.epsilon = v.epsilon;
    const auto axis = parse_axis(v.axis);
    if (!axis) {
        throw std::invalid_argument("--axis must be one of a, b, c, d");
    }
    o.slice.drop_axis = *axis;
    o.out = v.out.empty() ? sub : v.out;
    for (const auto& f : v.formats) {
        const auto fmt = parse_format(f);
        if (!fmt) {
            throw std::invalid_argument("unknown format '" + f + "' (expected csv, ply or xyz)");
        }
        o.formats.push_back(*fmt);
    }
    if (o.formats.empty()) {
        o.formats = planar ? std::vector<Format>{Format::csv} : std::vector<Format>{Format::csv, Format::ply};
    }
    return o;
}

void add_c(CLI::App& app, CliValues& v, const char* help) { app.add_option("-c,--c", v.c, help); }

void add_iim(CLI::App& app, CliValues& v) {
    app.add_option("-n,--points", v.points, "points to record (random mode)")->capture_default_str();
    app.add_option("--warmup", v.warmup, "inverse iterates discarded first (default 20; 0 in tree mode)");
    app.add_option("--seed", v.seed, "RNG seed")->capture_default_str();
    app.add_option("--mode", v.mode, "random | tree")->capture_default_str();
    app.add_option("--depth", v.depth, "tree depth (tree mode)")->capture_default_str();
}

void add_grid(CLI::App& app, CliValues& v) {
    app.add_option("--grid", v.grid, "grid nodes per axis: N or NXxNY")->capture_default_str();
    app.add_option("--bounds", v.bounds, "grid bounds x_min,x_max,y_min,y_max")->capture_default_str();
    app.add_option("--max-iter", v.max_iter, "escape-time iterations")->capture_default_str();
    app.add_option("--escape-radius", v.escape_radius, "escape radius (default max(2, |c|))");
}

void add_output(CLI::App& app, CliValues& v, bool sliced) {
    if (sliced) {
        app.add_option("--epsilon", v.epsilon, "keep points with |dropped component| < epsilon")
            ->capture_default_str();
        app.add_option("--axis", v.axis, "component removed by the 3D cut: a | b | c | d")->capture_default_str();
    }
    app.add_option("--out", v.out, "output path prefix (default: subcommand name)");
    app.add_option("--format", v.formats, "csv | ply | xyz (repeatable)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Complex and bicomplex Julia sets by inverse iteration", "bcjulia"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kVersion));

    CliValues v;
    std::string manifest;
    std::string replay_out;

    auto* julia2d = app.add_subcommand("julia2d", "complex Julia set point cloud");
    add_c(*julia2d, v, "parameter re[,im]");
    add_iim(*julia2d, v);
    add_output(*julia2d, v, false);

    auto* julia3d_iim = app.add_subcommand("julia3d-iim", "bicomplex inverse iteration (J x J core), 3D cut");
    add_c(*julia3d_iim, v, "parameter a[,b[,c,d]]");
    add_iim(*julia3d_iim, v);
    add_output(*julia3d_iim, v, true);

    auto* julia3d_boundary = app.add_subcommand("julia3d-boundary", "full bicomplex Julia set from J and K samples, 3D cut");
    add_c(*julia3d_boundary, v, "parameter a[,b[,c,d]]");
    add_iim(*julia3d_boundary, v);
    add_grid(*julia3d_boundary, v);
    julia3d_boundary->add_option("--budget", v.budget, "total cartesian pairs")->capture_default_str();
    add_output(*julia3d_boundary, v, true);

    auto* fixed = app.add_subcommand("fixed-points", "bicomplex fixed points and their classification");
    add_c(*fixed, v, "parameter a[,b[,c,d]]");

    auto* dendrite = app.add_subcommand("dendrite-check", "grid heuristic for a bicomplex dendrite");
    add_c(*dendrite, v, "parameter a[,b[,c,d]]");
    add_grid(*dendrite, v);

    auto* replay = app.add_subcommand("replay", "re-run a generator from its .meta.json manifest");
    replay->add_option("manifest", manifest, "manifest path")->required();
    replay->add_option("--out", replay_out, "write to a different output prefix");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::CallForVersion&) {
        out << kVersion << '\n';
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "bcjulia: error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (julia2d->parsed()) {
            run_generator(options_from("julia2d", v, true), out);
        } else if (julia3d_iim->parsed()) {
            run_generator(options_from("julia3d-iim", v, false), out);
        } else if (julia3d_boundary->parsed()) {
            run_generator(options_from("julia3d-boundary", v, false), out);
        } else if (fixed->parsed()) {
            report_fixed_points(parse_bicomplex(v.c), out);
        } else if (dendrite->parsed()) {
            const Bicomplex c = parse_bicomplex(v.c);
            const BicomplexParam param(c);
            report_dendrite(c, grid_from(v, Complex{std::max(std::abs(param.minus()), std::abs(param.plus())), 0.0}),
                            out);
        } else if (replay->parsed()) {
            RunOptions o = options_from_manifest(manifest);
            if (!replay_out.empty()) {
                o.out = replay_out;
            }
            run_generator(o, out);
        }
    } catch (const std::exception& e) {
        err << "bcjulia: error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace bcjulia::cli
