#pragma once

#include <pcg/coloring.hh>
#include <pcg/errors.hh>
#include <pcg/perfectness.hh>

#include <optional>
#include <utility>
#include <vector>

namespace pcg
{
    using ColorPair = std::pair<ColorId, ColorId>;

    /// Pairs a < b with S(a, j) = S(b, j) for every j other than a and b,
    /// sorted.
    auto twin_pairs(const QuotientMatrix &) -> std::vector<ColorPair>;

    /// Pairs a < b with identical rows, sorted.
    auto equal_rows(const QuotientMatrix &) -> std::vector<ColorPair>;

    /// Thrown by merge for a pair that is not twin.
    class NotTwin : public PreconditionError
    {
    public:
        ColorId column;

        NotTwin(ColorId a, ColorId b, ColorId j);
    };

    /// Recolours b as a, then closes the gap in the numbering. Throws NotTwin,
    /// NotPerfect or PreconditionError.
    auto merge(const PeriodicColoring &, ColorId a, ColorId b) -> PeriodicColoring;

    /// Adjacency matrix of a simple graph on the colours.
    struct TargetGraph
    {
        std::vector<std::vector<int>> adjacency;

        auto size() const -> int { return int(adjacency.size()); }
    };

    /// The target graph when S is a symmetric {0,1} matrix with zero diagonal.
    auto covering_target(const QuotientMatrix &) -> std::optional<TargetGraph>;

    /// The sixteen displacements (0,+-1), (+-1,0), (+-1,+-1), (0,+-2), (+-2,0),
    /// (+-2,+-2).
    auto claim6_offsets() -> const std::vector<Vec2> &;

    enum class Claim6Status
    {
        Holds,
        Counterexample,
        NotApplicable
    };

    struct Claim6Result
    {
        Claim6Status status = Claim6Status::NotApplicable;
        /// Two nodes at one of the offsets with the same colour.
        std::optional<std::pair<Vec2, Vec2>> counterexample;
    };

    /// Applicable to coverings whose quotient has no equal rows: every node and
    /// its translates by claim6_offsets must have different colours.
    auto claim6_check(const PeriodicColoring &) -> Claim6Result;

    struct DichotomyReport
    {
        bool is_covering = false;
        std::vector<ColorPair> twins;
        bool is_orbit = false;
        bool dichotomy_holds = false;
    };

    /// A covering must be an orbit colouring or have twins. Throws NotPerfect.
    auto theorem1_audit(const PeriodicColoring &) -> DichotomyReport;
}
