#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <set>
#include <stdexcept>

#include "bcjulia/boundary.hpp"
#include "test_util.hpp"

using namespace bcjulia;
using bcjulia::testing::Gen;

namespace {

using Key = std::array<double, 4>;

std::multiset<Key> as_set(const std::vector<Bicomplex>& pts) {
    std::multiset<Key> s;
    for (const auto& w : pts) {
        s.insert(w.components());
    }
    return s;
}

std::set<Key> as_set(const PointCloud4D& cloud) {
    std::set<Key> s;
    for (const auto& tp : cloud.points) {
        s.insert(tp.w.components());
    }
    return s;
}

}  // namespace

TEST_CASE("cartesian combination") {
    const std::vector<Complex> one{1.0};
    CHECK(cartesian_combine(one, one, 1, 0).points == std::vector<Bicomplex>{Bicomplex{1.0}});
    CHECK(cartesian_combine(one, one, 100, 0).points.size() == 1);

    const std::vector<Complex> pm{1.0, -1.0};
    const auto four = cartesian_combine(pm, pm, 4, 0);
    CHECK(as_set(four.points) ==
          as_set({Bicomplex{1.0}, Bicomplex{-1.0}, Bicomplex::j(), -Bicomplex::j()}));
    CHECK(four.duplicates == 0);

    Gen gen(53);
    std::vector<Complex> a(1000);
    std::vector<Complex> b(1000);
    for (auto& z : a) z = gen.complex(1.0);
    for (auto& z : b) z = gen.complex(1.0);
    const auto sample = cartesian_combine(a, b, 100000, 77);
    REQUIRE(sample.points.size() == 100000);
    for (std::size_t k = 0; k < sample.points.size(); k += 97) {
        const IdempotentPair p = to_idempotent(sample.points[k]);
        // Recombination is exact up to rounding; search with a tolerance.
        const bool in_a = std::any_of(a.begin(), a.end(), [&](Complex z) { return std::abs(z - p.p1) < 1e-15; });
        const bool in_b = std::any_of(b.begin(), b.end(), [&](Complex z) { return std::abs(z - p.p2) < 1e-15; });
        REQUIRE(in_a);
        REQUIRE(in_b);
    }
    // 1e5 draws from 1e6 pairs: about 4.8e3 expected repeats
    CHECK(sample.duplicates > 3000);
    CHECK(sample.duplicates < 7000);
    CHECK(cartesian_combine(a, b, 100000, 77).points == sample.points);
    CHECK(cartesian_combine(a, b, 100000, 78).points != sample.points);

    CHECK_THROWS_AS(cartesian_combine({}, one, 4, 0), std::invalid_argument);
    CHECK_THROWS_AS(cartesian_combine(one, {}, 4, 0), std::invalid_argument);
    CHECK_THROWS_AS(cartesian_combine(one, one, 0, 0), std::invalid_argument);
}

TEST_CASE("budget split") {
    const auto s = split_budget(300000);
    CHECK(s.jxj == 150000);
    CHECK(s.jxk == 75000);
    CHECK(s.kxj == 75000);
    const auto small = split_budget(3);
    CHECK(small.jxk + small.kxj + small.jxj == 3);
}

TEST_CASE("generic cartesian boundary") {
    SUBCASE("singletons") {
        const std::vector<Complex> in{0.0};
        const std::vector<Complex> bd{1.0};
        const auto cloud = build_theorem33_boundary(in, bd, in, bd, 100, 0);
        REQUIRE(cloud.size() == 3);
        CHECK(cloud.points[0].w == from_idempotent({1.0, 0.0}));
        CHECK(cloud.points[0].tag == Piece::JxK);
        CHECK(cloud.points[1].w == from_idempotent({0.0, 1.0}));
        CHECK(cloud.points[1].tag == Piece::KxJ);
        CHECK(cloud.points[2].w == from_idempotent({1.0, 1.0}));
        CHECK(cloud.points[2].tag == Piece::JxJ);
    }
    SUBCASE("disk and circle") {
        GridSpec grid;
        grid.nx = grid.ny = 61;
        std::vector<Complex> disk;
        for (std::size_t iy = 0; iy < grid.ny; ++iy) {
            for (std::size_t ix = 0; ix < grid.nx; ++ix) {
                const Complex z{grid.x_at(ix), grid.y_at(iy)};
                if (std::abs(z) <= 1.0) disk.push_back(z);
            }
        }
        std::vector<Complex> circle;
        for (int k = 0; k < 500; ++k) circle.push_back(std::polar(1.0, 2 * std::numbers::pi * k / 500));
        const auto cloud = build_theorem33_boundary(disk, circle, disk, circle, 40000, 5);
        CHECK(cloud.size() == 40000);
        std::map<Piece, int> hist;
        for (const auto& [w, tag] : cloud.points) {
            ++hist[tag];
            const IdempotentPair p = to_idempotent(w);
            REQUIRE(std::max(std::abs(p.p1), std::abs(p.p2)) <= 1.0 + grid.cell_diagonal());
            const bool on1 = std::abs(std::abs(p.p1) - 1.0) < 1e-9;
            const bool on2 = std::abs(std::abs(p.p2) - 1.0) < 1e-9;
            if (tag == Piece::JxK) REQUIRE(on1);
            if (tag == Piece::KxJ) REQUIRE(on2);
            if (tag == Piece::JxJ) REQUIRE((on1 && on2));
        }
        CHECK(hist[Piece::JxJ] == 20000);
        CHECK(hist[Piece::JxK] == 10000);
        CHECK(hist[Piece::KxJ] == 10000);
    }
    SUBCASE("budget cap") {
        const std::vector<Complex> in{0.0};
        const std::vector<Complex> bd{1.0};
        CHECK(build_theorem33_boundary(in, bd, in, bd, 3, 0).size() <= 3);
        CHECK_THROWS_AS(build_theorem33_boundary({}, bd, in, bd, 3, 0), std::invalid_argument);
    }
}

TEST_CASE("Julia boundary") {
    IimConfig cfg;
    cfg.n_points = 2000;
    cfg.seed = 3;
    GridSpec grid;
    grid.nx = grid.ny = 101;
    grid.max_iter = 100;

    SUBCASE("c = 0 pieces satisfy their circle and disk predicates") {
        const BicomplexParam c(Bicomplex{});
        const auto cloud = build_julia_boundary(c, cfg, grid, 20000);
        CHECK(cloud.size() == 20000);
        const double h = grid.cell_diagonal();
        std::size_t good = 0;
        for (const auto& [w, tag] : cloud.points) {
            const IdempotentPair p = to_idempotent(w);
            const bool on1 = std::abs(std::abs(p.p1) - 1.0) < 1e-9;
            const bool on2 = std::abs(std::abs(p.p2) - 1.0) < 1e-9;
            switch (tag) {
                case Piece::JxK: good += on1 && std::abs(p.p2) <= 1.0 + h; break;
                case Piece::KxJ: good += on2 && std::abs(p.p1) <= 1.0 + h; break;
                case Piece::JxJ: REQUIRE((on1 && on2)); ++good; break;
                case Piece::planar: FAIL("unexpected tag");
            }
        }
        CHECK(good == cloud.size());
    }
    SUBCASE("matches the generic construction with J and K factors") {
        const BicomplexParam c({0.0635, 0.3725, 0.3725, 0.1865});
        const auto cloud = build_julia_boundary(c, cfg, grid, 30000);
        const auto f = julia_factors(c, cfg, grid);
        const auto generic =
            build_theorem33_boundary(f.k_minus, f.j_minus, f.k_plus, f.j_plus, 30000, combine_seed(cfg.seed));
        CHECK(as_set(cloud) == as_set(generic));
        const auto again = build_julia_boundary(c, cfg, grid, 30000);
        REQUIRE(again.size() == cloud.size());
        for (std::size_t k = 0; k < cloud.size(); ++k) {
            REQUIRE(again.points[k].w == cloud.points[k].w);
            REQUIRE(again.points[k].tag == cloud.points[k].tag);
        }
    }
    SUBCASE("K empty is reported") {
        const BicomplexParam c(Bicomplex{4.0});
        CHECK_THROWS_AS(build_julia_boundary(c, cfg, grid, 100), std::invalid_argument);
    }
}
