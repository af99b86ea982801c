#pragma once

#include <vector>

#include "bcjulia/bicomplex.hpp"
#include "bcjulia/complex_dynamics.hpp"
#include "bcjulia/point_cloud.hpp"

namespace bcjulia {

/// Parameter c of w -> w^2 + c together with its idempotent projections.
class BicomplexParam {
public:
    explicit BicomplexParam(const Bicomplex& c);

    const Bicomplex& value() const { return c_; }
    Complex minus() const { return minus_; }  ///< c1 - c2 i1
    Complex plus() const { return plus_; }    ///< c1 + c2 i1

private:
    Bicomplex c_;
    Complex minus_;
    Complex plus_;
};

enum class ForwardVia { direct, idempotent };

ForwardResult<Bicomplex> iterate_forward_bc(const BicomplexParam& c, const Bicomplex& w, unsigned n,
                                            ForwardVia via = ForwardVia::idempotent);

struct BicomplexFixedPoint {
    Bicomplex point;
    FixedPointInfo comp1;
    FixedPointInfo comp2;

    /// Both components lie on their Julia sets (repelling, or the parabolic 1/2).
    bool in_JxJ() const;
};

/// Cartesian combinations of the projected fixed points, comp1-major order.
std::vector<BicomplexFixedPoint> bc_fixed_points(const BicomplexParam& c);

BicomplexFixedPoint seed_in_JxJ(const BicomplexParam& c);

Bicomplex bc_inverse_step(const BicomplexParam& c, const Bicomplex& w, int s1, int s2);

enum class BranchSet {
    all,       ///< (s1, s2) uniform over {0,1}^2
    diagonal,  ///< s1 == s2, uniform over {0,1}
};

/// Bicomplex random-walk inverse iteration from seed_in_JxJ(c). Each step
/// takes one RNG draw whose top two bits give (s1, s2). Every point is
/// tagged JxJ. Full-tree mode is rejected with std::invalid_argument.
PointCloud4D iim_bicomplex(const BicomplexParam& c, const IimConfig& cfg, BranchSet branches = BranchSet::all);

enum class DendriteVerdict { dendrite_consistent, not_dendrite, inconclusive };

std::string_view to_string(DendriteVerdict v);

/// Grid test for empty interior of a sampled filled Julia set: every inside
/// node touching an outside node (8-neighbourhood, off-grid counts as
/// outside) is dendrite-consistent; any fully-inside 5x5 block means
/// interior. An empty sample is inconclusive. The answer depends on the grid
/// resolution and iteration count.
DendriteVerdict complex_dendrite_verdict(Complex c, const GridSpec& grid);

struct DendriteReport {
    DendriteVerdict minus;
    DendriteVerdict plus;
    DendriteVerdict overall;
};

DendriteReport dendrite_heuristic(const BicomplexParam& c, const GridSpec& grid);

}  // namespace bcjulia
