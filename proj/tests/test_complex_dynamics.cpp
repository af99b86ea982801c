#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "bcjulia/complex_dynamics.hpp"
#include "test_util.hpp"

using namespace bcjulia;
using bcjulia::testing::close;
using bcjulia::testing::Gen;

namespace {

constexpr Complex kI{0.0, 1.0};

double residual(Complex c, Complex z) { return std::abs(z * z + c - z); }

}  // namespace

TEST_CASE("forward iteration") {
    CHECK(iterate_forward(0.0, 2.0, 3).value == Complex{256.0, 0.0});
    CHECK(iterate_forward(kI, 0.0, 2).value == Complex{-1.0, 1.0});
    CHECK(iterate_forward(0.25, 0.5, 50).value == Complex{0.5, 0.0});
    CHECK(iterate_forward(kI, {0.3, 0.2}, 0).value == Complex{0.3, 0.2});
    const auto esc = iterate_forward(0.0, 3.0, 20);
    CHECK(esc.escaped);
    CHECK(is_finite(esc.value));
    CHECK_FALSE(iterate_forward(0.0, 0.5, 2000).escaped);
}

TEST_CASE("fixed points") {
    SUBCASE("parabolic quarter") {
        const auto fps = fixed_points(0.25);
        REQUIRE(fps.size() == 1);
        CHECK(fps[0].point == Complex{0.5, 0.0});
        CHECK(fps[0].multiplier_mag == 1.0);
        CHECK(fps[0].cls == FixedPointClass::indifferent);
    }
    SUBCASE("zero") {
        const auto fps = fixed_points(0.0);
        REQUIRE(fps.size() == 2);
        CHECK(fps[0].point == Complex{0.0, 0.0});
        CHECK(fps[0].multiplier_mag == 0.0);
        CHECK(fps[0].cls == FixedPointClass::attractive);
        CHECK(fps[1].point == Complex{1.0, 0.0});
        CHECK(fps[1].multiplier_mag == 2.0);
        CHECK(fps[1].cls == FixedPointClass::repelling);
    }
    SUBCASE("c = i") {
        const auto fps = fixed_points(kI);
        REQUIRE(fps.size() == 2);
        // Independent route: the textbook formula (1 +- sqrt(1 - 4i)) / 2.
        const Complex s = std::sqrt(Complex{1.0, -4.0});
        const Complex r_plus = (1.0 + s) / 2.0;
        const Complex r_minus = (1.0 - s) / 2.0;
        for (const auto& fp : fps) {
            CHECK(residual(kI, fp.point) < 1e-12);
            CHECK((close(fp.point, r_plus, 1e-14) || close(fp.point, r_minus, 1e-14)));
            CHECK(fp.multiplier_mag == doctest::Approx(std::abs(2.0 * fp.point)));
            // |2z| is about 2.88 and 1.39: both repel
            CHECK(fp.cls == FixedPointClass::repelling);
        }
    }
    SUBCASE("random parameters") {
        Gen gen(29);
        for (int k = 0; k < 5000; ++k) {
            const Complex c = gen.complex(3.0);
            const auto fps = fixed_points(c);
            REQUIRE(fps.size() == 2);
            bool repelling = false;
            for (const auto& fp : fps) {
                REQUIRE(residual(c, fp.point) <= 1e-12 * std::max(1.0, std::abs(c)));
                repelling = repelling || fp.cls == FixedPointClass::repelling;
            }
            const double gap = std::abs(fps[0].multiplier_mag - 1.0) + std::abs(fps[1].multiplier_mag - 1.0);
            if (gap > kClassTolerance) {
                REQUIRE(repelling);
            }
        }
    }
}

TEST_CASE("classification thresholds") {
    CHECK(classify_multiplier(0.5) == FixedPointClass::attractive);
    CHECK(classify_multiplier(1.5) == FixedPointClass::repelling);
    CHECK(classify_multiplier(1.0 + 1e-13) == FixedPointClass::indifferent);
    CHECK(classify_multiplier(1.0 - 1e-11) == FixedPointClass::attractive);
}

TEST_CASE("seed point selection") {
    CHECK(choose_seed_point(0.25) == Complex{0.5, 0.0});
    CHECK(choose_seed_point(0.0) == Complex{1.0, 0.0});
    const Complex seed = choose_seed_point(kI);
    CHECK(std::abs(2.0 * seed) > 1.0);
    CHECK(residual(kI, seed) < 1e-12);
    // largest multiplier among the two repelling roots
    const Complex s = std::sqrt(Complex{1.0, -4.0});
    CHECK(close(seed, (1.0 + s) / 2.0, 1e-14));
}

TEST_CASE("inverse step") {
    CHECK(inverse_step(0.0, 4.0, 0) == Complex{2.0, 0.0});
    CHECK(inverse_step(0.0, 4.0, 1) == Complex{-2.0, 0.0});
    CHECK(inverse_step(0.25, 0.5, 0) == Complex{0.5, 0.0});
    Gen gen(31);
    for (int k = 0; k < 10000; ++k) {
        const Complex c = gen.complex(2.0);
        const Complex z = gen.complex(3.0);
        for (int branch = 0; branch < 2; ++branch) {
            const Complex back = iterate_forward(c, inverse_step(c, z, branch), 1).value;
            REQUIRE(close(back, z, 1e-12));
        }
    }
}

TEST_CASE("iim random walk") {
    SUBCASE("unit circle at c = 0") {
        IimConfig cfg;
        cfg.seed = 42;
        cfg.n_points = 10000;
        cfg.warmup = 20;
        const auto pts = iim(0.0, cfg);
        REQUIRE(pts.size() == 10000);
        std::vector<int> bins(64, 0);
        for (const Complex p : pts) {
            REQUIRE(std::abs(std::abs(p) - 1.0) < 1e-9);
            const double angle = std::arg(p) + std::numbers::pi;
            const auto bin = std::min<std::size_t>(63, static_cast<std::size_t>(angle / (2 * std::numbers::pi) * 64));
            ++bins[bin];
        }
        for (int b : bins) {
            CHECK(b > 0);
        }
    }
    SUBCASE("quarter stays bounded") {
        IimConfig cfg;
        cfg.n_points = 5000;
        for (const Complex p : iim(0.25, cfg)) {
            REQUIRE(std::abs(p) <= 2.0);
            REQUIRE(filled_julia_contains(0.25, p, 10, 2.0 + 1e-6));
        }
    }
    SUBCASE("dendrite c = i") {
        IimConfig cfg;
        cfg.n_points = 5000;
        const auto pts = iim(kI, cfg);
        CHECK(pts.size() == 5000);
        for (const Complex p : pts) {
            REQUIRE(std::abs(p.real()) <= 2.0);
            REQUIRE(std::abs(p.imag()) <= 2.0);
        }
    }
    SUBCASE("deterministic and seed dependent") {
        IimConfig cfg;
        cfg.n_points = 1000;
        cfg.seed = 9;
        const auto a = iim(kI, cfg);
        const auto b = iim(kI, cfg);
        CHECK(a == b);
        cfg.seed = 10;
        CHECK(iim(kI, cfg) != a);
    }
    SUBCASE("warmup drops the first iterates") {
        IimConfig cfg;
        cfg.n_points = 50;
        cfg.warmup = 0;
        const auto full = iim(kI, cfg);
        cfg.warmup = 10;
        cfg.n_points = 40;
        const auto tail = iim(kI, cfg);
        CHECK(std::equal(tail.begin(), tail.end(), full.begin() + 10));
    }
}

TEST_CASE("iim full tree") {
    IimConfig cfg;
    cfg.mode = IimMode::full_tree;
    cfg.depth = 10;
    cfg.warmup = 9;
    const Complex c{-0.123, 0.745};
    const Complex seed = choose_seed_point(c);
    const auto leaves = iim(c, cfg);
    CHECK(leaves.size() == 1024);
    for (const Complex leaf : leaves) {
        REQUIRE(close(iterate_forward(c, leaf, 10).value, seed, 1e-8));
    }
    cfg.warmup = 0;
    CHECK(iim(c, cfg).size() == 2046);

    cfg.depth = kMaxTreeDepth + 1;
    CHECK_THROWS_AS(iim(c, cfg), std::invalid_argument);
    cfg.depth = 5;
    cfg.warmup = 5;
    CHECK_THROWS_AS(iim(c, cfg), std::invalid_argument);
    IimConfig empty;
    empty.n_points = 0;
    CHECK_THROWS_AS(iim(c, empty), std::invalid_argument);
}

TEST_CASE("filled Julia membership") {
    CHECK(filled_julia_contains(0.0, 0.5, 100, 2.0));
    CHECK_FALSE(filled_julia_contains(0.0, 1.5, 100, 2.0));
    CHECK(filled_julia_contains(0.25, 0.5, 100, 2.0));
    CHECK_THROWS_AS(filled_julia_contains(Complex{3.0, 0.0}, 0.0, 10, 2.0), std::invalid_argument);
}

TEST_CASE("grid sampling of K") {
    GridSpec grid;
    grid.nx = grid.ny = 101;
    grid.max_iter = 100;
    SUBCASE("unit disk at c = 0") {
        const auto inside = sample_filled_julia(0.0, grid);
        std::size_t oracle = 0;
        const double cell = grid.cell_diagonal();
        for (std::size_t iy = 0; iy < grid.ny; ++iy) {
            for (std::size_t ix = 0; ix < grid.nx; ++ix) {
                if (std::abs(Complex{grid.x_at(ix), grid.y_at(iy)}) <= 1.0) {
                    ++oracle;
                }
            }
        }
        for (const Complex z : inside) {
            CHECK(std::abs(z) <= 1.0 + cell);
        }
        // Escape-time may only disagree on the rim layer.
        std::size_t rim = 0;
        for (std::size_t iy = 0; iy < grid.ny; ++iy) {
            for (std::size_t ix = 0; ix < grid.nx; ++ix) {
                const double r = std::abs(Complex{grid.x_at(ix), grid.y_at(iy)});
                rim += std::abs(r - 1.0) <= cell ? 1 : 0;
            }
        }
        CHECK(inside.size() + rim >= oracle);
        CHECK(inside.size() <= oracle + rim);
        CHECK(inside.size() > 0);
    }
    SUBCASE("Cantor dust at c = 4") {
        const auto inside = sample_filled_julia(4.0, grid);
        CHECK(inside.size() < grid.nx * grid.ny / 100);
    }
    SUBCASE("quarter contains the parabolic point") {
        const auto inside = sample_filled_julia(0.25, grid);
        // 0.48 and 0.52 are equally close to 1/2; K meets the real axis in [-1/2, 1/2].
        const Complex nearest{grid.x_at(62), grid.y_at(50)};
        CHECK(std::abs(nearest - Complex{0.5, 0.0}) <= grid.cell_diagonal());
        CHECK(std::find(inside.begin(), inside.end(), nearest) != inside.end());
    }
    SUBCASE("row order and validation") {
        const auto a = sample_filled_julia(Complex{-0.123, 0.745}, grid);
        CHECK(a == sample_filled_julia(Complex{-0.123, 0.745}, grid));
        GridSpec bad = grid;
        bad.nx = 1;
        CHECK_THROWS_AS(sample_filled_julia(0.0, bad), std::invalid_argument);
        bad = grid;
        bad.x_max = bad.x_min;
        CHECK_THROWS_AS(sample_filled_julia(0.0, bad), std::invalid_argument);
        bad = grid;
        bad.escape_radius = 1.0;
        CHECK_THROWS_AS(sample_filled_julia(0.0, bad), std::invalid_argument);
    }
}
