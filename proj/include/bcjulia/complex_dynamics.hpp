#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "bcjulia/bicomplex.hpp"
#include "bcjulia/rng.hpp"

namespace bcjulia {

/// |multiplier - 1| at or below this counts as indifferent.
inline constexpr double kClassTolerance = 1e-12;

enum class FixedPointClass { attractive, repelling, indifferent };

std::string_view to_string(FixedPointClass cls);

struct FixedPointInfo {
    Complex point;
    double multiplier_mag;
    FixedPointClass cls;
};

FixedPointClass classify_multiplier(double multiplier_mag);

template <typename T>
struct ForwardResult {
    T value;
    bool escaped;  ///< the orbit left the finite doubles
};

/// n-fold composition of z -> z^2 + c. Overflow is reported as escape; the
/// returned value is then the last finite iterate.
ForwardResult<Complex> iterate_forward(Complex c, Complex z, unsigned n);

/// Roots of z^2 - z + c. c == 1/4 yields the single indifferent point 1/2.
std::vector<FixedPointInfo> fixed_points(Complex c);

/// A repelling fixed point (largest multiplier, then smallest (re, im)), or
/// the indifferent one when no fixed point repels.
Complex choose_seed_point(Complex c);

/// Branch 0 is the principal sqrt(z - c), branch 1 its negation.
Complex inverse_step(Complex c, Complex z, int branch);

enum class IimMode { random_walk, full_tree };

inline constexpr unsigned kMaxTreeDepth = 24;
inline constexpr unsigned kDefaultWarmup = 20;

struct IimConfig {
    std::uint64_t seed = 0;
    std::size_t n_points = 100000;
    unsigned warmup = kDefaultWarmup;
    IimMode mode = IimMode::random_walk;
    unsigned depth = 16;  ///< full-tree mode only

    /// Throws std::invalid_argument on n_points == 0 or an out-of-range depth.
    void validate() const;
};

/// Inverse iteration from choose_seed_point(c).
///
/// Random walk: one RNG draw per step picks the branch (top bit), the first
/// `warmup` iterates are dropped and the next n_points are returned.
/// Full tree: breadth-first over both branches; nodes at levels warmup+1 ..
/// depth are returned level by level, truncated to n_points.
std::vector<Complex> iim(Complex c, const IimConfig& cfg);

double default_escape_radius(Complex c);

struct GridSpec {
    double x_min = -2.0;
    double x_max = 2.0;
    double y_min = -2.0;
    double y_max = 2.0;
    std::size_t nx = 401;
    std::size_t ny = 401;
    unsigned max_iter = 200;
    double escape_radius = 2.0;

    double x_at(std::size_t ix) const;
    double y_at(std::size_t iy) const;
    double cell_diagonal() const;

    void validate() const;
};

/// Escape-time approximation of membership in the filled Julia set.
/// Throws std::invalid_argument if escape_radius < max(2, |c|).
bool filled_julia_contains(Complex c, Complex z, unsigned max_iter, double escape_radius);

/// Row-major inside/outside mask over the grid nodes (index iy * nx + ix).
std::vector<bool> filled_julia_mask(Complex c, const GridSpec& grid);

/// Grid nodes inside K_c, row-major order. Rows are processed in parallel; the
/// result does not depend on the thread count.
std::vector<Complex> sample_filled_julia(Complex c, const GridSpec& grid);

}  // namespace bcjulia
