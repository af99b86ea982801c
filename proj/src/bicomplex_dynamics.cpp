#include "bcjulia/bicomplex_dynamics.hpp"

#include <stdexcept>

namespace bcjulia {

BicomplexParam::BicomplexParam(const Bicomplex& c) : c_(c) {
    const IdempotentPair p = to_idempotent(c);
    minus_ = p.p1;
    plus_ = p.p2;
}

ForwardResult<Bicomplex> iterate_forward_bc(const BicomplexParam& c, const Bicomplex& w, unsigned n,
                                            ForwardVia via) {
    if (n == 0) {
        return {w, false};
    }
    if (via == ForwardVia::direct) {
        Bicomplex z = w;
        for (unsigned k = 0; k < n; ++k) {
            try {
                z = z * z + c.value();
            } catch (const std::overflow_error&) {
                return {z, true};
            }
        }
        return {z, false};
    }
    const IdempotentPair p = to_idempotent(w);
    const auto r1 = iterate_forward(c.minus(), p.p1, n);
    const auto r2 = iterate_forward(c.plus(), p.p2, n);
    const Bicomplex value = from_idempotent({r1.value, r2.value});
    return {value, r1.escaped || r2.escaped || !value.finite()};
}

bool BicomplexFixedPoint::in_JxJ() const {
    auto on_julia = [](const FixedPointInfo& fp) {
        return fp.cls == FixedPointClass::repelling ||
               (fp.cls == FixedPointClass::indifferent && fp.point == Complex{0.5, 0.0});
    };
    return on_julia(comp1) && on_julia(comp2);
}

std::vector<BicomplexFixedPoint> bc_fixed_points(const BicomplexParam& c) {
    const auto first = fixed_points(c.minus());
    const auto second = fixed_points(c.plus());
    std::vector<BicomplexFixedPoint> out;
    out.reserve(first.size() * second.size());
    for (const auto& f1 : first) {
        for (const auto& f2 : second) {
            out.push_back({from_idempotent({f1.point, f2.point}), f1, f2});
        }
    }
    return out;
}

BicomplexFixedPoint seed_in_JxJ(const BicomplexParam& c) {
    const Complex p1 = choose_seed_point(c.minus());
    const Complex p2 = choose_seed_point(c.plus());
    auto info = [](Complex c_comp, Complex z) {
        for (const auto& fp : fixed_points(c_comp)) {
            if (fp.point == z) {
                return fp;
            }
        }
        throw std::logic_error("seed is not among the fixed points");
    };
    return {from_idempotent({p1, p2}), info(c.minus(), p1), info(c.plus(), p2)};
}

Bicomplex bc_inverse_step(const BicomplexParam& c, const Bicomplex& w, int s1, int s2) {
    const IdempotentPair p = to_idempotent(w);
    return from_idempotent({inverse_step(c.minus(), p.p1, s1), inverse_step(c.plus(), p.p2, s2)});
}

PointCloud4D iim_bicomplex(const BicomplexParam& c, const IimConfig& cfg, BranchSet branches) {
    cfg.validate();
    if (cfg.mode != IimMode::random_walk) {
        throw std::invalid_argument("bicomplex inverse iteration supports random-walk mode only");
    }
    Rng rng(cfg.seed);
    // Walk in idempotent coordinates; recombine only when recording.
    const BicomplexFixedPoint seed = seed_in_JxJ(c);
    Complex z1 = seed.comp1.point;
    Complex z2 = seed.comp2.point;
    auto step = [&] {
        const std::uint64_t draw = rng();
        const int s1 = static_cast<int>(draw >> 63);
        const int s2 = branches == BranchSet::all ? static_cast<int>((draw >> 62) & 1U) : s1;
        z1 = inverse_step(c.minus(), z1, s1);
        z2 = inverse_step(c.plus(), z2, s2);
    };
    for (unsigned k = 0; k < cfg.warmup; ++k) {
        step();
    }
    PointCloud4D cloud;
    cloud.points.reserve(cfg.n_points);
    for (std::size_t k = 0; k < cfg.n_points; ++k) {
        step();
        cloud.points.push_back({from_idempotent({z1, z2}), Piece::JxJ});
    }
    return cloud;
}

std::string_view to_string(DendriteVerdict v) {
    switch (v) {
        case DendriteVerdict::dendrite_consistent: return "dendrite-consistent";
        case DendriteVerdict::not_dendrite: return "not-dendrite";
        case DendriteVerdict::inconclusive: return "inconclusive";
    }
    return "unknown";
}

DendriteVerdict complex_dendrite_verdict(Complex c, const GridSpec& grid) {
    const std::vector<bool> mask = filled_julia_mask(c, grid);
    const auto nx = static_cast<long>(grid.nx);
    const auto ny = static_cast<long>(grid.ny);
    auto inside = [&](long ix, long iy) {
        return ix >= 0 && iy >= 0 && ix < nx && iy < ny && mask[static_cast<std::size_t>(iy * nx + ix)];
    };
    auto block_inside = [&](long ix, long iy, long radius) {
        for (long dy = -radius; dy <= radius; ++dy) {
            for (long dx = -radius; dx <= radius; ++dx) {
                if ((dx != 0 || dy != 0) && !inside(ix + dx, iy + dy)) {
                    return false;
                }
            }
        }
        return true;
    };
    bool any_inside = false;
    bool all_touch_outside = true;
    for (long iy = 0; iy < ny; ++iy) {
        for (long ix = 0; ix < nx; ++ix) {
            if (!inside(ix, iy)) {
                continue;
            }
            any_inside = true;
            if (block_inside(ix, iy, 2)) {
                return DendriteVerdict::not_dendrite;
            }
            if (block_inside(ix, iy, 1)) {
                all_touch_outside = false;
            }
        }
    }
    if (!any_inside) {
        return DendriteVerdict::inconclusive;
    }
    return all_touch_outside ? DendriteVerdict::dendrite_consistent : DendriteVerdict::inconclusive;
}

DendriteReport dendrite_heuristic(const BicomplexParam& c, const GridSpec& grid) {
    DendriteReport report{};
    report.minus = complex_dendrite_verdict(c.minus(), grid);
    report.plus = c.plus() == c.minus() ? report.minus : complex_dendrite_verdict(c.plus(), grid);
    if (report.minus == DendriteVerdict::not_dendrite || report.plus == DendriteVerdict::not_dendrite) {
        report.overall = DendriteVerdict::not_dendrite;
    } else if (report.minus == DendriteVerdict::dendrite_consistent &&
               report.plus == DendriteVerdict::dendrite_consistent) {
        report.overall = DendriteVerdict::dendrite_consistent;
    } else {
        report.overall = DendriteVerdict::inconclusive;
    }
    return report;
}

}  // namespace bcjulia
