#pragma once

#include <pcg/coloring.hh>
#include <pcg/rational.hh>

#include <array>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

namespace pcg
{
    /// S(i, j) is the number of neighbours of colour j around a node of colour
    /// i. Colours are 1-based, rows[i - 1][j - 1] holds S(i, j).
    struct QuotientMatrix
    {
        std::vector<std::vector<int>> rows;

        auto size() const -> int { return int(rows.size()); }
        auto operator()(ColorId i, ColorId j) const -> int { return rows[i - 1][j - 1]; }

        auto operator==(const QuotientMatrix &) const -> bool = default;
    };

    /// True if every row sums to 4 and the zero pattern is symmetric.
    auto is_well_formed(const QuotientMatrix &) -> bool;

    /// Some permutation p has S(p(i), p(j)) = T(i, j) throughout.
    auto equal_up_to_permutation(const QuotientMatrix &, const QuotientMatrix &) -> bool;

    /// The sorted colours of the four neighbours.
    using Profile = std::array<ColorId, 4>;

    struct Violation
    {
        Vec2 node;
        ColorId color = 0;
        /// The neighbour counts required of this colour, when known.
        std::optional<std::vector<int>> expected;
        Profile observed{};
    };

    using CheckResult = std::variant<QuotientMatrix, Violation>;

    auto profile(const PeriodicColoring &, Vec2 v) -> Profile;

    /// The quotient matrix, or the first violation in row-major cell order:
    /// the first cell whose profile differs from the first cell of its colour.
    auto check(const PeriodicColoring &) -> CheckResult;

    auto is_perfect(const PeriodicColoring &) -> bool;

    /// As check, but throws NotPerfect on a violation.
    auto quotient(const PeriodicColoring &) -> QuotientMatrix;

    /// Walks v = v0, v1, ..., vk in the grid with F(vi) = colors[i - 1].
    /// Throws NotPerfect, or PreconditionError for an empty sequence, a bad
    /// colour or a sequence longer than 31.
    auto path_count(const PeriodicColoring &, Vec2 v, const std::vector<ColorId> & colors) -> std::uint64_t;

    /// S(b, b1) S(b1, b2) ... S(b_{k-1}, b_k).
    auto path_product(const QuotientMatrix &, ColorId b, const std::vector<ColorId> & colors) -> std::uint64_t;

    /// (S^k)(b, b2). Throws PreconditionError for k > 31.
    auto dk(const QuotientMatrix &, ColorId b, ColorId b2, int k) -> std::uint64_t;

    /// The positive solution of S(i, j) P(i) = S(j, i) P(j) with sum 1.
    /// Throws StationaryError if there is none.
    auto stationary(const QuotientMatrix &) -> std::vector<Rational>;

    struct NodeType
    {
        int k = 0, l = 0;

        auto operator==(const NodeType &) const -> bool = default;
    };

    /// Neighbour counts of colours a and b around v. Throws PreconditionError
    /// unless a and b are distinct colours of F.
    auto node_type(const PeriodicColoring &, Vec2 v, ColorId a, ColorId b) -> NodeType;

    auto is_bipartite(const PeriodicColoring &) -> bool;

    /// Splits every colour meeting both parities into an even and an odd part
    /// (tokens get suffixes "e" and "o"). Bipartite input is returned as is.
    auto refine_bipartite(const PeriodicColoring &) -> PeriodicColoring;

    /// Checks every unmasked node whose four neighbours are inside the window
    /// and unmasked against its row of S.
    auto verify_window(const WindowColoring &, const QuotientMatrix &) -> std::vector<Violation>;
}
