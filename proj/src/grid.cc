#include <pcg/grid.hh>

#include <algorithm>
#include <cstdlib>

using std::array;
using std::pair;

auto pcg::operator<<(std::ostream & s, Vec2 v) -> std::ostream &
{
    return s << "(" << v.x << "," << v.y << ")";
}

auto pcg::neighbors(Vec2 v) -> array<Vec2, 4>
{
    return {Vec2{v.x + 1, v.y}, Vec2{v.x - 1, v.y}, Vec2{v.x, v.y + 1}, Vec2{v.x, v.y - 1}};
}

auto pcg::l1_distance(Vec2 u, Vec2 v) -> Coord
{
    return std::abs(u.x - v.x) + std::abs(u.y - v.y);
}

auto pcg::parity(Vec2 v) -> Parity
{
    return floor_mod(v.x + v.y, 2) == 0 ? Parity::Even : Parity::Odd;
}

auto pcg::diagonal_index(Vec2 v, Orientation o) -> Coord
{
    return o == Orientation::Right ? v.x - v.y : v.x + v.y;
}

auto pcg::diagonal_generator(Orientation o) -> Vec2
{
    return o == Orientation::Right ? Vec2{1, 1} : Vec2{1, -1};
}

auto pcg::operator*(const PointMatrix & a, const PointMatrix & b) -> PointMatrix
{
    return {a.xx * b.xx + a.xy * b.yx, a.xx * b.xy + a.xy * b.yy,
        a.yx * b.xx + a.yy * b.yx, a.yx * b.xy + a.yy * b.yy};
}

auto pcg::d4_elements() -> const array<PointMatrix, 8> &
{
    static const array<PointMatrix, 8> elements{{
        {1, 0, 0, 1},
        {0, -1, 1, 0},
        {-1, 0, 0, -1},
        {0, 1, -1, 0},
        {1, 0, 0, -1},
        {-1, 0, 0, 1},
        {0, 1, 1, 0},
        {0, -1, -1, 0},
    }};
    return elements;
}

auto pcg::is_d4_element(const PointMatrix & g) -> bool
{
    auto & all = d4_elements();
    return std::find(all.begin(), all.end(), g) != all.end();
}

auto pcg::identity_automorphism() -> GridAutomorphism
{
    return {PointMatrix{}, Vec2{}};
}

auto pcg::apply(const GridAutomorphism & a, Vec2 v) -> Vec2
{
    return a.point(v) + a.shift;
}

auto pcg::compose(const GridAutomorphism & a, const GridAutomorphism & b) -> GridAutomorphism
{
    return {a.point * b.point, a.point(b.shift) + a.shift};
}

auto pcg::inverse(const GridAutomorphism & a) -> GridAutomorphism
{
    // signed permutation matrices are orthogonal
    auto inv = a.point.transpose();
    return {inv, -inv(a.shift)};
}

auto pcg::transform_diagonal(const PointMatrix & g, Orientation o, Coord index) -> pair<Orientation, Coord>
{
    auto step = g(diagonal_generator(o));
    auto image_orientation = (step.x == step.y) ? Orientation::Right : Orientation::Left;
    // (index, 0) lies on diagonal `index` of either orientation
    return {image_orientation, diagonal_index(g(Vec2{index, 0}), image_orientation)};
}

auto pcg::floor_div(Coord a, Coord b) -> Coord
{
    Coord q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0)))
        --q;
    return q;
}

auto pcg::floor_mod(Coord a, Coord b) -> Coord
{
    Coord r = a % b;
    if (r != 0 && ((r < 0) != (b < 0)))
        r += b;
    return r;
}
