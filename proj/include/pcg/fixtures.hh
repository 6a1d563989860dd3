#pragma once

#include <pcg/coloring.hh>
#include <pcg/perfectness.hh>

#include <optional>
#include <string>
#include <vector>

namespace pcg::fixtures
{
    struct FixtureInfo
    {
        std::string id;
        std::string summary;
        std::string pcg;
        int colors = 0;
        bool covering = false;
        bool orbit = false;
        int twin_pairs = 0;
        Coord maximal_index = 0;
        /// The matrix printed beside the grid, where there is one.
        std::optional<QuotientMatrix> printed_quotient;
    };

    auto list() -> const std::vector<FixtureInfo> &;

    /// Throws PreconditionError for an unknown id.
    auto info(const std::string & id) -> const FixtureInfo &;
    auto get(const std::string & id) -> PeriodicColoring;

    /// F(x, y) = ((x - 3y) mod alpha) + 1 on periods (alpha,0), (3,1). Throws
    /// PreconditionError unless alpha >= 5 and alpha != 6.
    auto lemma2_family_b(int alpha) -> PeriodicColoring;

    /// Colour 1 on even nodes, 2 on odd ones.
    auto checkerboard() -> PeriodicColoring;
    auto constant() -> PeriodicColoring;
    /// F(x, y) = (x mod k) + 1.
    auto stripes(int k) -> PeriodicColoring;
}
