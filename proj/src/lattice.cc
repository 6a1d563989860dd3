#include <pcg/errors.hh>
#include <pcg/lattice.hh>

#include <numeric>
#include <optional>
#include <tuple>

using std::optional;
using std::string;
using std::vector;

using namespace pcg;

namespace
{
    // returns (g, a, b) with a*x + b*y = g = gcd(x, y) >= 0
    auto extended_gcd(Coord x, Coord y) -> std::tuple<Coord, Coord, Coord>
    {
        Coord old_r = x, r = y, old_a = 1, a = 0, old_b = 0, b = 1;
        while (r != 0) {
            Coord q = old_r / r;
            std::tie(old_r, r) = std::make_tuple(r, old_r - q * r);
            std::tie(old_a, a) = std::make_tuple(a, old_a - q * a);
            std::tie(old_b, b) = std::make_tuple(b, old_b - q * b);
        }
        if (old_r < 0)
            return {-old_r, -old_a, -old_b};
        return {old_r, old_a, old_b};
    }
}

Lattice::Lattice(Coord w, Coord s, Coord h) :
    _w(w),
    _s(s),
    _h(h)
{
    if (w <= 0 || h <= 0 || s < 0 || s >= w)
        throw PreconditionError{"lattice basis (" + std::to_string(w) + ",0) (" + std::to_string(s) + "," + std::to_string(h) + ") is not in normal form"};
}

auto Lattice::generated_by(const vector<Vec2> & vectors) -> Lattice
{
    // pivot holds the vector with the smallest positive y seen so far; w
    // accumulates the x-gcd of everything with y = 0
    optional<Vec2> pivot;
    Coord w = 0;
    for (auto v : vectors) {
        if (v.y == 0) {
            w = std::gcd(w, v.x);
            continue;
        }
        if (! pivot) {
            pivot = v.y > 0 ? v : -v;
            continue;
        }
        auto [g, a, b] = extended_gcd(pivot->y, v.y);
        Vec2 kernel = (v.y / g) * *pivot - (pivot->y / g) * v;
        w = std::gcd(w, kernel.x);
        pivot = a * *pivot + b * v;
    }

    if (! pivot || w == 0)
        throw PreconditionError{"vectors do not span a rank two lattice"};
    return Lattice{w, floor_mod(pivot->x, w), pivot->y};
}

auto Lattice::contains(Vec2 v) const -> bool
{
    if (v.y % _h != 0)
        return false;
    return (v.x - (v.y / _h) * _s) % _w == 0;
}

auto Lattice::contains(const Lattice & other) const -> bool
{
    return contains(other.p1()) && contains(other.p2());
}

auto Lattice::reduce(Vec2 v) const -> Vec2
{
    Coord k = floor_div(v.y, _h);
    return {floor_mod(v.x - k * _s, _w), v.y - k * _h};
}

auto Lattice::cell_index(Vec2 v) const -> int
{
    auto r = reduce(v);
    return int(r.y * _w + r.x);
}

auto Lattice::transformed(const PointMatrix & g) const -> Lattice
{
    return generated_by({g(p1()), g(p2())});
}

auto pcg::to_string(const Lattice & l) -> string
{
    return "(" + std::to_string(l.width()) + ",0) (" + std::to_string(l.shear()) + "," + std::to_string(l.height()) + ")";
}

auto pcg::lattices_of_index(Coord index) -> vector<Lattice>
{
    vector<Lattice> result;
    for (Coord w = 1; w <= index; ++w)
        if (index % w == 0)
            for (Coord s = 0; s < w; ++s)
                result.emplace_back(w, s, index / w);
    return result;
}
