#include <pcg/coloring.hh>
#include <pcg/errors.hh>
#include <pcg/fixtures.hh>
#include <pcg/orbit.hh>

#include "oracles.hh"

#include <catch_amalgamated.hpp>

#include <random>

using namespace pcg;

namespace
{
    const char * case_two = "# pcg v1\nperiods (4,0) (0,4)\n4 1 4 1\n2 4 3 4\n4 1 4 1\n3 4 2 4\n";

    auto random_node(std::mt19937 & rng) -> Vec2
    {
        std::uniform_int_distribution<Coord> d{-1000, 1000};
        return {d(rng), d(rng)};
    }

    auto random_relabel(const PeriodicColoring & f, std::mt19937 & rng) -> PeriodicColoring
    {
        ColorPermutation p;
        for (int c = 1; c <= f.num_colors(); ++c)
            p.image.push_back(c);
        std::shuffle(p.image.begin(), p.image.end(), rng);
        return relabel(f, p);
    }
}

TEST_CASE("parse the four-colour grid")
{
    auto f = parse(case_two);
    CHECK(f.num_colors() == 4);
    CHECK(f.num_cells() == 16);
    CHECK(f.color_at({1, 0}) == 1);
    CHECK(f.color_at({0, 1}) == 2);
    CHECK(f.color_at({0, 0}) == 4);
    CHECK(f.token(4) == "4");
}

TEST_CASE("parse edge cases")
{
    auto c = parse("# pcg v1\nperiods (1,0) (0,1)\nx\n");
    CHECK(c.num_colors() == 1);
    CHECK(c.color_at({-5, 9}) == 1);

    CHECK_THROWS_AS(parse("# pcg v1\nperiods (2,0) (2,0)\n1 2\n"), ParseError);
    CHECK_THROWS_AS(parse("periods (1,0) (0,1)\n1\n"), ParseError);
    CHECK_THROWS_AS(parse("# pcg v1\nperiod (1,0) (0,1)\n1\n"), ParseError);
    CHECK_THROWS_AS(parse("# pcg v1\nperiods (2,0) (0,2)\n1 2\n1\n"), ParseError);
    CHECK_THROWS_AS(parse("# pcg v1\nperiods (2,0) (0,2)\n1 2\n"), ParseError);
    CHECK_THROWS_AS(parse("# pcg v1\nperiods (2,0) (0,1)\n1 2 3\n"), ParseError);
    CHECK_THROWS_AS(parse("# pcg v1\nperiods (1,0) (0,1)\n1-\n"), ParseError);

    // comments, blank lines, and a non-normal basis
    auto f = parse("# pcg v1\n# note\nperiods (0,2) (2,0)\n\n1 2\n# middle\n2 1\n");
    CHECK(f.lattice() == Lattice{2, 0, 2});
    auto g = parse("# pcg v1\nperiods (1,1) (1,-1)\na b\n");
    CHECK(g.lattice() == Lattice{2, 1, 1});
    CHECK(g.color_at({1, 1}) == 1);
}

TEST_CASE("tokens are numbered in natural order")
{
    auto f = parse("# pcg v1\nperiods (4,0) (0,1)\n10 B 2 A\n");
    CHECK(f.tokens() == std::vector<std::string>{"2", "10", "A", "B"});
    CHECK(f.color_at({0, 0}) == 2);
}

TEST_CASE("colour lookup agrees with the naive tiling")
{
    std::mt19937 rng{1};
    for (auto & info : fixtures::list()) {
        auto f = fixtures::get(info.id);
        auto t = oracle::read(info.pcg);
        for (int i = 0; i < 300; ++i) {
            auto v = random_node(rng);
            REQUIRE(f.token(f.color_at(v)) == t.at(v));
            CHECK(f.color_at(v + f.lattice().p1()) == f.color_at(v));
            CHECK(f.color_at(v + f.lattice().p2()) == f.color_at(v));
        }
    }
}

TEST_CASE("render round trip")
{
    std::mt19937 rng{2};
    for (auto & info : fixtures::list()) {
        auto f = fixtures::get(info.id);
        auto g = parse(render(f));
        CHECK(g.tokens() == f.tokens());
        for (int i = 0; i < 1000; ++i) {
            auto v = random_node(rng);
            CHECK(g.color_at(v) == f.color_at(v));
        }
    }
}

TEST_CASE("maximal periods against the period oracle")
{
    for (auto & info : fixtures::list()) {
        auto f = fixtures::get(info.id);
        auto t = oracle::read(info.pcg);
        auto m = maximal_periods(f);
        CHECK(m.contains(f.lattice()));
        CHECK(m.index() == info.maximal_index);
        Coord box = std::max(f.lattice().width(), f.lattice().height());
        for (Coord y = -box; y <= box; ++y)
            for (Coord x = -box; x <= box; ++x)
                CHECK(m.contains({x, y}) == oracle::is_period(t, {x, y}));
    }

    CHECK(maximal_periods(fixtures::checkerboard()) == Lattice::generated_by({{1, 1}, {1, -1}}));
    CHECK(maximal_periods(fixtures::constant()) == Lattice{1, 0, 1});
}

TEST_CASE("maximal periods of a doubled declaration")
{
    auto f = fixtures::get("II-base");
    auto doubled = retile(f, Lattice{8, 0, 8});
    CHECK(doubled.num_cells() == 64);
    auto t = oracle::read(render(doubled));
    std::vector<Vec2> periods;
    for (Coord y = 0; y < 8; ++y)
        for (Coord x = 0; x < 8; ++x)
            if (oracle::is_period(t, {x, y}))
                periods.push_back({x, y});
    // (0,0), (4,0), (0,4), (4,4), (2,2), (6,2), (2,6), (6,6)
    CHECK(periods.size() == 8);
    auto m = maximal_periods(doubled);
    CHECK(m.index() == 8);
    CHECK(m == Lattice{4, 2, 2});
    CHECK(m == maximal_periods(f));
}

TEST_CASE("retile rejects non-periods")
{
    CHECK_THROWS_AS(retile(fixtures::checkerboard(), Lattice{1, 0, 1}), PreconditionError);
    auto c = retile(fixtures::checkerboard(), Lattice{2, 1, 1});
    CHECK(c.num_cells() == 2);
}

TEST_CASE("canonical form is an equivalence invariant")
{
    std::mt19937 rng{3};
    for (auto & info : fixtures::list()) {
        auto f = fixtures::get(info.id);
        auto c = canonical(f);
        CHECK(canonical(parse(c)) == c);
        CHECK(equivalent(f, f));
        for (size_t e = 1; e < 8; ++e) {
            std::uniform_int_distribution<Coord> d{-9, 9};
            GridAutomorphism a{d4_elements()[e], {d(rng), d(rng)}};
            auto g = random_relabel(transform(f, a), rng);
            CHECK(equivalent(f, g));
            CHECK(equivalent(g, f));
            CHECK(maximal_periods(g).index() == maximal_periods(f).index());
            CHECK(is_orbit(g) == is_orbit(f));
        }
    }
    CHECK_FALSE(equivalent(fixtures::get("8-150-1"), fixtures::get("8-150-2")));
    CHECK_FALSE(equivalent(fixtures::get("3-17-2"), fixtures::get("3-17-3")));
    CHECK_FALSE(equivalent(fixtures::get("L1-a"), fixtures::get("L1-b")));
}

TEST_CASE("equivalence is transitive on sampled triples")
{
    std::mt19937 rng{4};
    auto & all = fixtures::list();
    std::uniform_int_distribution<size_t> pick{0, all.size() - 1};
    for (int i = 0; i < 30; ++i) {
        auto f = fixtures::get(all[pick(rng)].id);
        auto g = transform(f, {d4_elements()[1], {1, 2}});
        auto h = transform(g, {d4_elements()[6], {0, 3}});
        auto k = fixtures::get(all[pick(rng)].id);
        CHECK(equivalent(f, g));
        CHECK(equivalent(g, h));
        CHECK(equivalent(f, h));
        if (equivalent(f, k))
            CHECK(equivalent(h, k));
    }
}

TEST_CASE("windows and densities")
{
    auto f = fixtures::get("II-base");
    auto d = densities(f);
    CHECK(d == std::vector<Rational>{Rational(1, 4), Rational(1, 8), Rational(1, 8), Rational(1, 2)});
    CHECK(densities(fixtures::constant()) == std::vector<Rational>{Rational(1)});

    std::mt19937 rng{6};
    auto w = window(f, {-3, 5}, 10, 7);
    std::uniform_int_distribution<Coord> dx{-3, 6}, dy{5, 11};
    for (int i = 0; i < 100; ++i) {
        Vec2 v{dx(rng), dy(rng)};
        CHECK(w.at(v) == f.color_at(v));
    }
    CHECK(w.at({-4, 5}) == 0);

    for (auto & info : fixtures::list()) {
        auto g = fixtures::get(info.id);
        auto expected = oracle::densities(oracle::read(info.pcg));
        auto got = densities(g);
        Rational total{0};
        for (ColorId c = 1; c <= g.num_colors(); ++c) {
            CHECK(got[c - 1] == expected.at(g.token(c)));
            total += got[c - 1];
        }
        CHECK(total == Rational{1});
    }
}

TEST_CASE("relabel rejects non-permutations")
{
    auto f = fixtures::checkerboard();
    CHECK_THROWS_AS(relabel(f, ColorPermutation{{1, 1}}), PreconditionError);
    CHECK_THROWS_AS(relabel(f, ColorPermutation{{1}}), PreconditionError);
    auto g = relabel(f, ColorPermutation{{2, 1}});
    CHECK(g.color_at({0, 0}) == 2);
    CHECK(g.token(2) == "1");
}
