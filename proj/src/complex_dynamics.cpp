#include "bcjulia/complex_dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <thread>

namespace bcjulia {

std::string_view to_string(FixedPointClass cls) {
    switch (cls) {
        case FixedPointClass::attractive: return "attractive";
        case FixedPointClass::repelling: return "repelling";
        case FixedPointClass::indifferent: return "indifferent";
    }
    return "unknown";
}

FixedPointClass classify_multiplier(double multiplier_mag) {
    if (std::abs(multiplier_mag - 1.0) <= kClassTolerance) {
        return FixedPointClass::indifferent;
    }
    return multiplier_mag < 1.0 ? FixedPointClass::attractive : FixedPointClass::repelling;
}

ForwardResult<Complex> iterate_forward(Complex c, Complex z, unsigned n) {
    for (unsigned k = 0; k < n; ++k) {
        const Complex next = z * z + c;
        if (!is_finite(next)) {
            return {z, true};
        }
        z = next;
    }
    return {z, false};
}

namespace {

FixedPointInfo make_info(Complex z) {
    const double m = std::abs(2.0 * z);
    return {z, m, classify_multiplier(m)};
}

}  // namespace

std::vector<FixedPointInfo> fixed_points(Complex c) {
    if (c == Complex{0.25, 0.0}) {
        return {{Complex{0.5, 0.0}, 1.0, FixedPointClass::indifferent}};
    }
    // Re(s) >= 0 keeps |1 + s| >= 1, so the second root comes from the product
    // of the roots without cancellation.
    const Complex s = principal_sqrt(Complex{1.0, 0.0} - 4.0 * c);
    const Complex big = (Complex{1.0, 0.0} + s) * 0.5;
    const Complex small = c / big;
    std::vector<FixedPointInfo> out{make_info(small), make_info(big)};
    std::sort(out.begin(), out.end(), [](const FixedPointInfo& x, const FixedPointInfo& y) {
        if (x.point.real() != y.point.real()) {
            return x.point.real() < y.point.real();
        }
        return x.point.imag() < y.point.imag();
    });
    return out;
}

Complex choose_seed_point(Complex c) {
    const auto points = fixed_points(c);
    const FixedPointInfo* best = nullptr;
    auto better = [](const FixedPointInfo& x, const FixedPointInfo& y) {
        if (x.multiplier_mag != y.multiplier_mag) {
            return x.multiplier_mag > y.multiplier_mag;
        }
        if (x.point.real() != y.point.real()) {
            return x.point.real() < y.point.real();
        }
        return x.point.imag() < y.point.imag();
    };
    for (const auto& fp : points) {
        if (fp.cls != FixedPointClass::repelling) {
            continue;
        }
        if (best == nullptr || better(fp, *best)) {
            best = &fp;
        }
    }
    if (best == nullptr) {
        for (const auto& fp : points) {
            if (fp.cls != FixedPointClass::indifferent) {
                continue;
            }
            if (best == nullptr || better(fp, *best)) {
                best = &fp;
            }
        }
    }
    if (best == nullptr) {
        // Two attracting fixed points cannot happen for z^2 + c (the
        // multipliers sum to 2), so this is unreachable for finite c.
        throw std::logic_error("no repelling or indifferent fixed point");
    }
    return best->point;
}

Complex inverse_step(Complex c, Complex z, int branch) {
    const Complex r = principal_sqrt(z - c);
    return branch == 0 ? r : -r;
}

void IimConfig::validate() const {
    if (n_points == 0) {
        throw std::invalid_argument("n_points must be at least 1");
    }
    if (mode == IimMode::full_tree) {
        if (depth < 1 || depth > kMaxTreeDepth) {
            throw std::invalid_argument("tree depth must be in [1, " + std::to_string(kMaxTreeDepth) +
                                        "], got " + std::to_string(depth));
        }
        if (warmup >= depth) {
            throw std::invalid_argument("tree warmup (" + std::to_string(warmup) +
                                        ") must be smaller than depth (" + std::to_string(depth) + ")");
        }
    }
}

namespace {

std::vector<Complex> iim_random_walk(Complex c, const IimConfig& cfg) {
    Rng rng(cfg.seed);
    Complex z = choose_seed_point(c);
    for (unsigned k = 0; k < cfg.warmup; ++k) {
        z = inverse_step(c, z, static_cast<int>(rng() >> 63));
    }
    std::vector<Complex> out;
    out.reserve(cfg.n_points);
    for (std::size_t k = 0; k < cfg.n_points; ++k) {
        z = inverse_step(c, z, static_cast<int>(rng() >> 63));
        out.push_back(z);
    }
    return out;
}

std::vector<Complex> iim_full_tree(Complex c, const IimConfig& cfg) {
    std::vector<Complex> level{choose_seed_point(c)};
    std::vector<Complex> out;
    for (unsigned d = 1; d <= cfg.depth; ++d) {
        std::vector<Complex> next;
        next.reserve(level.size() * 2);
        for (const Complex z : level) {
            const Complex r = principal_sqrt(z - c);
            next.push_back(r);
            next.push_back(-r);
        }
        level = std::move(next);
        if (d > cfg.warmup) {
            out.insert(out.end(), level.begin(), level.end());
        }
    }
    return out;
}

}  // namespace

std::vector<Complex> iim(Complex c, const IimConfig& cfg) {
    cfg.validate();
    return cfg.mode == IimMode::random_walk ? iim_random_walk(c, cfg) : iim_full_tree(c, cfg);
}

double default_escape_radius(Complex c) { return std::max(2.0, std::abs(c)); }

double GridSpec::x_at(std::size_t ix) const {
    return x_min + (x_max - x_min) * static_cast<double>(ix) / static_cast<double>(nx - 1);
}

double GridSpec::y_at(std::size_t iy) const {
    return y_min + (y_max - y_min) * static_cast<double>(iy) / static_cast<double>(ny - 1);
}

double GridSpec::cell_diagonal() const {
    return std::hypot((x_max - x_min) / static_cast<double>(nx - 1),
                      (y_max - y_min) / static_cast<double>(ny - 1));
}

void GridSpec::validate() const {
    if (!(x_min < x_max) || !(y_min < y_max)) {
        throw std::invalid_argument("grid bounds must satisfy min < max");
    }
    if (nx < 2 || ny < 2) {
        throw std::invalid_argument("grid needs at least 2 nodes per axis");
    }
    if (!(escape_radius >= 2.0)) {
        throw std::invalid_argument("escape radius must be at least 2");
    }
}

namespace {

bool stays_bounded(Complex c, Complex z, unsigned max_iter, double radius_sq) {
    if (std::norm(z) > radius_sq) {
        return false;
    }
    for (unsigned k = 0; k < max_iter; ++k) {
        z = z * z + c;
        if (std::norm(z) > radius_sq) {
            return false;
        }
    }
    return true;
}

}  // namespace

bool filled_julia_contains(Complex c, Complex z, unsigned max_iter, double escape_radius) {
    if (!(escape_radius >= default_escape_radius(c))) {
        throw std::invalid_argument("escape radius must be at least max(2, |c|)");
    }
    return stays_bounded(c, z, max_iter, escape_radius * escape_radius);
}

std::vector<bool> filled_julia_mask(Complex c, const GridSpec& grid) {
    grid.validate();
    const double radius = std::max(grid.escape_radius, default_escape_radius(c));
    const double radius_sq = radius * radius;
    // vector<bool> packs bits, so rows are filled into bytes first.
    std::vector<unsigned char> cells(grid.nx * grid.ny, 0);
    auto do_rows = [&](std::size_t first, std::size_t stride) {
        for (std::size_t iy = first; iy < grid.ny; iy += stride) {
            const double y = grid.y_at(iy);
            for (std::size_t ix = 0; ix < grid.nx; ++ix) {
                cells[iy * grid.nx + ix] = stays_bounded(c, {grid.x_at(ix), y}, grid.max_iter, radius_sq) ? 1 : 0;
            }
        }
    };
    const std::size_t workers = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, grid.ny);
    {
        std::vector<std::jthread> pool;
        for (std::size_t t = 1; t < workers; ++t) {
            pool.emplace_back(do_rows, t, workers);
        }
        do_rows(0, workers);
    }
    return {cells.begin(), cells.end()};
}

std::vector<Complex> sample_filled_julia(Complex c, const GridSpec& grid) {
    const std::vector<bool> mask = filled_julia_mask(c, grid);
    std::vector<Complex> out;
    for (std::size_t iy = 0; iy < grid.ny; ++iy) {
        for (std::size_t ix = 0; ix < grid.nx; ++ix) {
            if (mask[iy * grid.nx + ix]) {
                out.emplace_back(grid.x_at(ix), grid.y_at(iy));
            }
        }
    }
    return out;
}

}  // namespace bcjulia
