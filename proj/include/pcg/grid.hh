#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <ostream>
#include <utility>

namespace pcg
{
    using Coord = std::int64_t;

    /// A node of the square grid, or a displacement between two nodes.
    struct Vec2
    {
        Coord x = 0;
        Coord y = 0;

        auto operator<=>(const Vec2 &) const = default;
    };

    inline auto operator+(Vec2 a, Vec2 b) -> Vec2 { return {a.x + b.x, a.y + b.y}; }
    inline auto operator-(Vec2 a, Vec2 b) -> Vec2 { return {a.x - b.x, a.y - b.y}; }
    inline auto operator-(Vec2 a) -> Vec2 { return {-a.x, -a.y}; }
    inline auto operator*(Coord k, Vec2 a) -> Vec2 { return {k * a.x, k * a.y}; }

    auto operator<<(std::ostream &, Vec2) -> std::ostream &;

    enum class Orientation
    {
        Right,
        Left
    };

    enum class Parity
    {
        Even,
        Odd
    };

    /// The four neighbours in the fixed order E, W, S, N, that is
    /// v+(1,0), v-(1,0), v+(0,1), v-(0,1). y grows downwards.
    auto neighbors(Vec2 v) -> std::array<Vec2, 4>;

    auto l1_distance(Vec2 u, Vec2 v) -> Coord;

    auto parity(Vec2 v) -> Parity;

    /// x - y for right diagonals (constant along steps of (1,1)), x + y for left
    /// diagonals (constant along steps of (1,-1)).
    auto diagonal_index(Vec2 v, Orientation o) -> Coord;

    /// Step along a diagonal of the given orientation: (1,1) or (1,-1).
    auto diagonal_generator(Orientation o) -> Vec2;

    /// A 2x2 signed permutation matrix acting as v -> (xx*x + xy*y, yx*x + yy*y).
    struct PointMatrix
    {
        int xx = 1, xy = 0, yx = 0, yy = 1;

        auto operator<=>(const PointMatrix &) const = default;

        auto operator()(Vec2 v) const -> Vec2 { return {xx * v.x + xy * v.y, yx * v.x + yy * v.y}; }
        auto determinant() const -> int { return xx * yy - xy * yx; }
        auto transpose() const -> PointMatrix { return {xx, yx, xy, yy}; }
    };

    auto operator*(const PointMatrix & a, const PointMatrix & b) -> PointMatrix;

    /// The point group D4: identity, the rotations by 90, 180, 270 degrees, then
    /// the reflections in the x axis, the y axis, the line y = x and the line y = -x.
    auto d4_elements() -> const std::array<PointMatrix, 8> &;

    auto is_d4_element(const PointMatrix &) -> bool;

    /// An automorphism of the grid graph, v -> point(v) + shift.
    struct GridAutomorphism
    {
        PointMatrix point;
        Vec2 shift;

        auto operator<=>(const GridAutomorphism &) const = default;
    };

    auto identity_automorphism() -> GridAutomorphism;

    auto apply(const GridAutomorphism & a, Vec2 v) -> Vec2;

    /// compose(a, b) applies b first, then a.
    auto compose(const GridAutomorphism & a, const GridAutomorphism & b) -> GridAutomorphism;

    auto inverse(const GridAutomorphism & a) -> GridAutomorphism;

    /// The image of the diagonal (o, index) under a point transformation: point
    /// parts map diagonals onto diagonals, possibly swapping the orientation.
    auto transform_diagonal(const PointMatrix & g, Orientation o, Coord index) -> std::pair<Orientation, Coord>;

    /// Floor division and non-negative modulus for possibly negative numerators.
    auto floor_div(Coord a, Coord b) -> Coord;
    auto floor_mod(Coord a, Coord b) -> Coord;
}
