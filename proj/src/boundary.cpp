#include "bcjulia/boundary.hpp"

#include <stdexcept>
#include <unordered_set>

#include "bcjulia/rng.hpp"

namespace bcjulia {

namespace {

// Multiply-shift maps a 64-bit draw onto [0, n); fixed arithmetic keeps the
// sequence identical across standard libraries.
__extension__ using U128 = unsigned __int128;

std::size_t draw_index(Rng& rng, std::size_t n) {
    const U128 wide = static_cast<U128>(rng()) * n;
    return static_cast<std::size_t>(wide >> 64);
}

}  // namespace

CartesianSample cartesian_combine(std::span<const Complex> first, std::span<const Complex> second,
                                  std::size_t budget, std::uint64_t seed) {
    if (first.empty() || second.empty()) {
        throw std::invalid_argument("cartesian_combine needs non-empty factor samples");
    }
    if (budget == 0) {
        throw std::invalid_argument("cartesian_combine budget must be at least 1");
    }
    CartesianSample out;
    const std::size_t n1 = first.size();
    const std::size_t n2 = second.size();
    if (n2 <= budget / n1) {
        out.points.reserve(n1 * n2);
        for (const Complex a : first) {
            for (const Complex b : second) {
                out.points.push_back(from_idempotent({a, b}));
            }
        }
        return out;
    }
    Rng rng(seed);
    std::unordered_set<std::size_t> seen;
    seen.reserve(budget);
    out.points.reserve(budget);
    for (std::size_t k = 0; k < budget; ++k) {
        const std::size_t i = draw_index(rng, n1);
        const std::size_t j = draw_index(rng, n2);
        // n1 * n2 > budget here, but the flat index still fits: both factors
        // are in-memory vectors.
        if (!seen.insert(i * n2 + j).second) {
            ++out.duplicates;
        }
        out.points.push_back(from_idempotent({first[i], second[j]}));
    }
    return out;
}

BudgetSplit split_budget(std::size_t budget) {
    const std::size_t quarter = budget / 4;
    return {quarter, quarter, budget - 2 * quarter};
}

PointCloud4D build_theorem33_boundary(std::span<const Complex> x1_interior, std::span<const Complex> x1_boundary,
                                      std::span<const Complex> x2_interior, std::span<const Complex> x2_boundary,
                                      std::size_t budget, std::uint64_t seed) {
    if (x1_interior.empty() || x1_boundary.empty() || x2_interior.empty() || x2_boundary.empty()) {
        throw std::invalid_argument("boundary construction needs non-empty samples for every factor");
    }
    const BudgetSplit split = split_budget(budget);
    PointCloud4D cloud;
    auto emit = [&](std::span<const Complex> a, std::span<const Complex> b, std::size_t share, std::uint64_t stream,
                    Piece tag) {
        if (share == 0) {
            return;
        }
        CartesianSample piece = cartesian_combine(a, b, share, sub_seed(seed, stream));
        cloud.duplicate_pairs += piece.duplicates;
        for (const Bicomplex& w : piece.points) {
            cloud.points.push_back({w, tag});
        }
    };
    emit(x1_boundary, x2_interior, split.jxk, 0, Piece::JxK);
    emit(x1_interior, x2_boundary, split.kxj, 1, Piece::KxJ);
    emit(x1_boundary, x2_boundary, split.jxj, 2, Piece::JxJ);
    return cloud;
}

JuliaFactors julia_factors(const BicomplexParam& c, const IimConfig& iim_cfg, const GridSpec& grid) {
    JuliaFactors f;
    IimConfig cfg = iim_cfg;
    cfg.seed = sub_seed(iim_cfg.seed, 0);
    f.j_minus = iim(c.minus(), cfg);
    cfg.seed = sub_seed(iim_cfg.seed, 1);
    f.j_plus = iim(c.plus(), cfg);
    f.k_minus = sample_filled_julia(c.minus(), grid);
    f.k_plus = c.plus() == c.minus() ? f.k_minus : sample_filled_julia(c.plus(), grid);
    return f;
}

std::uint64_t combine_seed(std::uint64_t iim_seed) { return sub_seed(iim_seed, 2); }

PointCloud4D build_julia_boundary(const BicomplexParam& c, const IimConfig& iim_cfg, const GridSpec& grid,
                                  std::size_t budget) {
    const JuliaFactors f = julia_factors(c, iim_cfg, grid);
    if (f.k_minus.empty() || f.k_plus.empty()) {
        throw std::invalid_argument("no grid node stayed bounded for one projection of c; "
                                    "its filled Julia set is too thin for this grid");
    }
    return build_theorem33_boundary(f.k_minus, f.j_minus, f.k_plus, f.j_plus, budget, combine_seed(iim_cfg.seed));
}

}  // namespace bcjulia
