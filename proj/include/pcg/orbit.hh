#pragma once

#include <pcg/coloring.hh>

#include <optional>
#include <utility>
#include <vector>

namespace pcg
{
    /// The colour-preserving automorphisms of F modulo its maximal periods L.
    /// Every element has a point part g with g(L) = L and a shift reduced into
    /// the fundamental domain of L.
    struct StabilizerGroup
    {
        Lattice lattice;
        std::vector<GridAutomorphism> elements;

        auto order() const -> int { return int(elements.size()); }
    };

    /// Elements in the order of d4_elements, then by shift cell; the identity
    /// is first. The group laws are checked and a std::logic_error thrown if
    /// they fail.
    auto stabilizer(const PeriodicColoring &) -> StabilizerGroup;

    /// Orbit ids of the cells of the maximal-period fundamental domain,
    /// numbered by least cell in row-major order.
    struct OrbitPartition
    {
        Lattice lattice;
        std::vector<int> orbit_of_cell;
        int count = 0;
    };

    auto orbits(const PeriodicColoring &) -> OrbitPartition;

    auto is_orbit(const PeriodicColoring &) -> bool;

    struct OrbitReport
    {
        bool orbit = false;
        int num_orbits = 0;
        int stabilizer_order = 0;
        /// Two nodes of one colour in different orbits.
        std::optional<std::pair<Vec2, Vec2>> counterexample_pair;
    };

    auto orbit_report(const PeriodicColoring &) -> OrbitReport;

    struct BallSimilarity
    {
        bool similar = true;
        std::optional<std::pair<Vec2, Vec2>> failing_pair;
    };

    /// For every pair x, y of the same colour some automorphism sends x to y
    /// and preserves colours on the ball of the given radius around x.
    auto ball_similar(const PeriodicColoring &, int radius) -> BallSimilarity;

    /// A colour-preserving automorphism sending x exactly to y. Throws
    /// PreconditionError if the colours of x and y differ.
    auto find_automorphism(const PeriodicColoring &, Vec2 x, Vec2 y) -> std::optional<GridAutomorphism>;
}
