#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bcjulia/bicomplex_dynamics.hpp"
#include "bcjulia/point_cloud.hpp"

namespace bcjulia {

struct CartesianSample {
    std::vector<Bicomplex> points;
    std::size_t duplicates = 0;
};

/// Points a*e1 + b*e2 for a in `first`, b in `second`. All |A|*|B| pairs in
/// A-major order when they fit the budget, otherwise `budget` pairs drawn
/// uniformly with replacement. Throws std::invalid_argument on an empty
/// input or a zero budget.
CartesianSample cartesian_combine(std::span<const Complex> first, std::span<const Complex> second,
                                  std::size_t budget, std::uint64_t seed);

struct BudgetSplit {
    std::size_t jxk;
    std::size_t kxj;
    std::size_t jxj;
};

/// Half of the budget (rounded up) to JxJ, a quarter to each mixed piece.
BudgetSplit split_budget(std::size_t budget);

/// Boundary of the cartesian set X1 x_e X2 from samples of each factor and
/// of its boundary: (dX1 x X2) tagged JxK, (X1 x dX2) tagged KxJ and
/// (dX1 x dX2) tagged JxJ. Pieces whose budget share is zero are skipped.
PointCloud4D build_theorem33_boundary(std::span<const Complex> x1_interior, std::span<const Complex> x1_boundary,
                                      std::span<const Complex> x2_interior, std::span<const Complex> x2_boundary,
                                      std::size_t budget, std::uint64_t seed);

struct JuliaFactors {
    std::vector<Complex> j_minus;
    std::vector<Complex> j_plus;
    std::vector<Complex> k_minus;
    std::vector<Complex> k_plus;
};

/// J from complex IIM and K from grid sampling for both projections of c.
JuliaFactors julia_factors(const BicomplexParam& c, const IimConfig& iim_cfg, const GridSpec& grid);

/// Seed handed to the cartesian sampling stage of build_julia_boundary.
std::uint64_t combine_seed(std::uint64_t iim_seed);

/// J_{2,c} as (J x K) u (K x J), with the J x J core kept as its own piece.
PointCloud4D build_julia_boundary(const BicomplexParam& c, const IimConfig& iim_cfg, const GridSpec& grid,
                                  std::size_t budget);

}  // namespace bcjulia
