#include <pcg/grid.hh>

#include <catch_amalgamated.hpp>

#include <random>
#include <set>

using namespace pcg;

TEST_CASE("neighbours come in E W S N order")
{
    auto n = neighbors({0, 0});
    CHECK(n == std::array<Vec2, 4>{Vec2{1, 0}, Vec2{-1, 0}, Vec2{0, 1}, Vec2{0, -1}});
    auto m = neighbors({3, -2});
    CHECK(m == std::array<Vec2, 4>{Vec2{4, -2}, Vec2{2, -2}, Vec2{3, -1}, Vec2{3, -3}});
    for (auto v : m)
        CHECK(l1_distance(v, {3, -2}) == 1);
}

TEST_CASE("distance, parity, diagonal index")
{
    CHECK(l1_distance({0, 0}, {0, 0}) == 0);
    CHECK(l1_distance({0, 0}, {3, 1}) == 4);
    CHECK(parity({0, 0}) == Parity::Even);
    CHECK(parity({2, -1}) == Parity::Odd);
    CHECK(diagonal_index({5, 3}, Orientation::Right) == 2);
    CHECK(diagonal_index({5, 3}, Orientation::Left) == 8);

    std::mt19937 rng{7};
    std::uniform_int_distribution<Coord> d{-50, 50};
    for (int i = 0; i < 200; ++i) {
        Vec2 u{d(rng), d(rng)}, v{d(rng), d(rng)};
        CHECK(l1_distance(u, v) == l1_distance(v, u));
        for (auto w : neighbors(u))
            CHECK(parity(w) != parity(u));
        for (auto o : {Orientation::Right, Orientation::Left})
            CHECK(diagonal_index(u + diagonal_generator(o), o) == diagonal_index(u, o));
    }
}

TEST_CASE("floor division")
{
    CHECK(floor_div(-1, 4) == -1);
    CHECK(floor_mod(-1, 4) == 3);
    CHECK(floor_div(8, 4) == 2);
    CHECK(floor_mod(-8, 4) == 0);
}

TEST_CASE("D4 has eight distinct signed permutation matrices")
{
    auto & all = d4_elements();
    std::set<PointMatrix> distinct(all.begin(), all.end());
    CHECK(distinct.size() == 8);
    CHECK(all[0] == PointMatrix{});
    int rotations = 0;
    for (auto & g : all) {
        CHECK(std::abs(g.determinant()) == 1);
        rotations += g.determinant() == 1;
        for (auto & h : all)
            CHECK(is_d4_element(g * h));
    }
    CHECK(rotations == 4);
}

TEST_CASE("automorphism group laws")
{
    std::mt19937 rng{11};
    std::uniform_int_distribution<Coord> d{-20, 20};
    CHECK(apply(identity_automorphism(), {7, -4}) == Vec2{7, -4});
    for (auto & g : d4_elements())
        for (int i = 0; i < 20; ++i) {
            GridAutomorphism a{g, {d(rng), d(rng)}};
            auto h = d4_elements()[size_t(i % 8)];
            GridAutomorphism b{h, {d(rng), d(rng)}};
            CHECK(compose(a, inverse(a)) == identity_automorphism());
            CHECK(compose(inverse(a), a) == identity_automorphism());
            Vec2 v{d(rng), d(rng)};
            CHECK(apply(compose(a, b), v) == apply(a, apply(b, v)));
            for (auto w : neighbors(v))
                CHECK(l1_distance(apply(a, v), apply(a, w)) == 1);
        }
}

TEST_CASE("diagonal indices under the point group")
{
    // expected images of (Right, i) and (Left, i) for each element, in d4 order
    struct Row
    {
        Orientation right_to;
        int right_sign;
        Orientation left_to;
        int left_sign;
    };
    const Row table[8]{
        {Orientation::Right, 1, Orientation::Left, 1},
        {Orientation::Left, 1, Orientation::Right, -1},
        {Orientation::Right, -1, Orientation::Left, -1},
        {Orientation::Left, -1, Orientation::Right, 1},
        {Orientation::Left, 1, Orientation::Right, 1},
        {Orientation::Left, -1, Orientation::Right, -1},
        {Orientation::Right, -1, Orientation::Left, 1},
        {Orientation::Right, 1, Orientation::Left, -1},
    };
    std::mt19937 rng{3};
    std::uniform_int_distribution<Coord> d{-30, 30};
    for (int e = 0; e < 8; ++e) {
        auto & g = d4_elements()[size_t(e)];
        for (int k = 0; k < 50; ++k) {
            Vec2 v{d(rng), d(rng)};
            auto [ro, ri] = transform_diagonal(g, Orientation::Right, diagonal_index(v, Orientation::Right));
            CHECK(ro == table[e].right_to);
            CHECK(ri == table[e].right_sign * diagonal_index(v, Orientation::Right));
            CHECK(diagonal_index(g(v), ro) == ri);
            auto [lo, li] = transform_diagonal(g, Orientation::Left, diagonal_index(v, Orientation::Left));
            CHECK(lo == table[e].left_to);
            CHECK(li == table[e].left_sign * diagonal_index(v, Orientation::Left));
            CHECK(diagonal_index(g(v), lo) == li);
        }
    }
}
