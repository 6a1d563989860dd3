#pragma once

#include <pcg/grid.hh>

#include <compare>
#include <string>
#include <vector>

namespace pcg
{
    /// A full-rank sublattice of Z^2, kept in Hermite normal form with basis
    /// (w, 0) and (s, h), w > 0, h > 0, 0 <= s < w. The fundamental domain is
    /// the w by h rectangle, cell i being the node (i mod w, i div w).
    class Lattice
    {
    private:
        Coord _w = 1, _s = 0, _h = 1;

    public:
        Lattice() = default;

        /// Throws PreconditionError unless the arguments are already normalised.
        Lattice(Coord w, Coord s, Coord h);

        /// The lattice spanned by the given vectors. Throws PreconditionError if
        /// they do not span a rank two lattice.
        static auto generated_by(const std::vector<Vec2> &) -> Lattice;

        auto width() const -> Coord { return _w; }
        auto shear() const -> Coord { return _s; }
        auto height() const -> Coord { return _h; }
        auto index() const -> Coord { return _w * _h; }

        auto p1() const -> Vec2 { return {_w, 0}; }
        auto p2() const -> Vec2 { return {_s, _h}; }

        auto contains(Vec2) const -> bool;
        auto contains(const Lattice &) const -> bool;

        /// The representative of v + L inside the fundamental domain.
        auto reduce(Vec2 v) const -> Vec2;
        auto cell_index(Vec2 v) const -> int;
        auto cell(int i) const -> Vec2 { return {i % _w, i / _w}; }

        /// The image g(L).
        auto transformed(const PointMatrix & g) const -> Lattice;

        auto operator<=>(const Lattice &) const = default;
    };

    auto to_string(const Lattice &) -> std::string;

    /// All lattices of the given index, in Hermite normal form.
    auto lattices_of_index(Coord index) -> std::vector<Lattice>;
}
