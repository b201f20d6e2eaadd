#include "susyqm/combinatorics.hpp"
#include "susyqm/errors.hpp"
#include "susyqm/grid.hpp"

#include <doctest.h>

#include <cmath>

using namespace susyqm;

TEST_CASE("Dirichlet nodes and links interleave on the half lattice") {
    const auto g = uniform_grid(2, -1.0, 1.0, 20);
    CHECK(g.step(0) == doctest::Approx(2.0 / 21));
    CHECK(g.coordinate(0, 0, true) == doctest::Approx(-1.0 + 0.5 * g.step(0)));
    CHECK(g.coordinate(0, 19, false) == doctest::Approx(1.0 - g.step(0)));
    CHECK(g.link_count(0) == 21);
    const auto hg = half_grid(g);
    CHECK(hg.extent[0] == 41);
    for (int i = 0; i < 20; ++i) {
        const auto y = half_coordinates(g, {half_index(g, i, false), half_index(g, i, true)});
        CHECK(y(0) == doctest::Approx(g.coordinate(0, i, false)));
        CHECK(y(1) == doctest::Approx(g.coordinate(1, i, true)));
    }
}

TEST_CASE("periodic axes wrap with the node offset") {
    GridSpec g;
    g.boundary = Boundary::Periodic;
    g.axes = {GridAxis{0.0, 2.0 * M_PI, 16, 0.25}};
    CHECK(g.link_count(0) == 16);
    CHECK(g.coordinate(0, 0, false) == doctest::Approx(0.25 * g.step(0)));
    CHECK(g.coordinate(0, 0, true) == doctest::Approx(0.75 * g.step(0)));
    const auto y = half_coordinates(g, {half_index(g, 3, true)});
    CHECK(y(0) == doctest::Approx(g.coordinate(0, 3, true)));
}

TEST_CASE("staggered layouts put each component on its own links") {
    const auto g = uniform_grid(3, -1.0, 1.0, 16);
    for (int m = 0; m <= 3; ++m) {
        const auto l = sector_layout(g, m, true);
        CHECK(static_cast<std::int64_t>(l.components.size()) == binomial(3, m));
        std::size_t total = 0;
        for (const auto& c : l.components) {
            CHECK(c.offset == total);
            std::size_t size = 1;
            for (int a = 0; a < 3; ++a) {
                const bool link = std::find(c.link_axes.begin(), c.link_axes.end(), a) != c.link_axes.end();
                CHECK(c.extent[static_cast<std::size_t>(a)] == (link ? 17 : 16));
                size *= static_cast<std::size_t>(c.extent[static_cast<std::size_t>(a)]);
            }
            CHECK(c.size == size);
            for (std::size_t k : {std::size_t{0}, size / 3, size - 1}) CHECK(c.flat(c.unflat(k)) == k);
            total += size;
        }
        CHECK(l.size == total);
        CHECK(sector_layout(g, m, false).size == binomial(3, m) * 16 * 16 * 16);
    }
}

TEST_CASE("grid validation") {
    CHECK_THROWS_AS(uniform_grid(2, -1.0, 1.0, 8), Error);
    CHECK_THROWS_AS(uniform_grid(2, 1.0, -1.0, 32), Error);
    CHECK_THROWS_AS(parse_boundary("open"), Error);
    CHECK_THROWS_AS(sector_layout(uniform_grid(2, -1.0, 1.0, 16), 3, true), Error);
}
