#pragma once

#include <pcg/grid.hh>
#include <pcg/lattice.hh>
#include <pcg/rational.hh>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pcg
{
    /// Colours are numbered 1..n.
    using ColorId = int;

    /// A colouring of Z^2 that is invariant under translation by a lattice. The
    /// colour of every node is the colour of its representative cell in the
    /// lattice's fundamental domain. Each colour keeps the token it was read
    /// with, used only for rendering.
    class PeriodicColoring
    {
    private:
        Lattice _lattice;
        std::vector<ColorId> _cells;
        std::vector<std::string> _tokens;

    public:
        /// Throws PreconditionError unless cells has one entry per cell, uses
        /// every colour 1..tokens.size(), and nothing else.
        PeriodicColoring(Lattice, std::vector<ColorId> cells, std::vector<std::string> tokens);

        /// Tokens are numbered in natural order: integer tokens by value, then
        /// the rest lexicographically.
        static auto from_tokens(Lattice, const std::vector<std::string> & cell_tokens) -> PeriodicColoring;

        /// Colours numbered 1..n with tokens "1".."n"; the ids need not be
        /// contiguous, they are compacted in increasing order.
        static auto from_ids(Lattice, const std::vector<int> & cell_ids) -> PeriodicColoring;

        auto lattice() const -> const Lattice & { return _lattice; }
        auto cells() const -> const std::vector<ColorId> & { return _cells; }
        auto tokens() const -> const std::vector<std::string> & { return _tokens; }
        auto token(ColorId c) const -> const std::string & { return _tokens.at(c - 1); }
        auto num_colors() const -> int { return int(_tokens.size()); }
        auto num_cells() const -> int { return int(_cells.size()); }

        auto color_at(Vec2 v) const -> ColorId { return _cells[_lattice.cell_index(v)]; }
        auto cell_color(int i) const -> ColorId { return _cells[i]; }
        auto cell(int i) const -> Vec2 { return _lattice.cell(i); }
    };

    /// PCG text format, version 1:
    ///
    ///   # pcg v1
    ///   periods (p1x,p1y) (p2x,p2y)
    ///   <h rows of w tokens>
    ///
    /// Row r, column c is the node (c, r), y grows downwards. The periods are
    /// normalised first, and the rows must match the normalised w and h. Later
    /// lines starting with # and blank lines are ignored. Throws ParseError.
    auto parse(std::string_view text) -> PeriodicColoring;

    /// Renders using the stored tokens and the normalised periods.
    auto render(const PeriodicColoring &) -> std::string;

    auto color_at(const PeriodicColoring &, Vec2) -> ColorId;

    /// The same colouring described on a different lattice, which must consist
    /// of periods of it. Throws PreconditionError otherwise.
    auto retile(const PeriodicColoring &, const Lattice &) -> PeriodicColoring;

    /// The lattice of all periods.
    auto maximal_periods(const PeriodicColoring &) -> Lattice;

    /// retile onto maximal_periods.
    auto reduce_to_maximal(const PeriodicColoring &) -> PeriodicColoring;

    /// The colouring v -> F(a^-1(v)), described on the image lattice.
    auto transform(const PeriodicColoring &, const GridAutomorphism & a) -> PeriodicColoring;

    /// A bijection of the colours; image[c - 1] is the new colour of c.
    struct ColorPermutation
    {
        std::vector<ColorId> image;

        auto operator()(ColorId c) const -> ColorId { return image.at(c - 1); }
    };

    /// Throws PreconditionError unless the permutation is a bijection of 1..n.
    auto relabel(const PeriodicColoring &, const ColorPermutation &) -> PeriodicColoring;

    /// Lexicographically least rendering, over the point transforms, the
    /// translations modulo the maximal periods, and colours renumbered in
    /// order of first occurrence.
    auto canonical(const PeriodicColoring &) -> std::string;

    auto equivalent(const PeriodicColoring &, const PeriodicColoring &) -> bool;

    /// A finite rectangle of colours; colour 0 marks an unknown cell.
    struct WindowColoring
    {
        Vec2 origin;
        int width = 0, height = 0;
        std::vector<ColorId> cells;

        auto contains(Vec2 v) const -> bool
        {
            return v.x >= origin.x && v.y >= origin.y && v.x < origin.x + width && v.y < origin.y + height;
        }

        /// 0 outside the window or on a masked cell.
        auto at(Vec2 v) const -> ColorId
        {
            return contains(v) ? cells[(v.y - origin.y) * width + (v.x - origin.x)] : 0;
        }
    };

    auto window(const PeriodicColoring &, Vec2 origin, int width, int height) -> WindowColoring;

    /// Colour frequencies over the fundamental domain, indexed by colour - 1.
    auto densities(const PeriodicColoring &) -> std::vector<Rational>;
}
