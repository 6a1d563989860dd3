#pragma once

#include <pcg/coloring.hh>

#include <string>
#include <vector>

namespace pcg
{
    enum class DiagonalKind
    {
        OneColor,
        BinaryAlternating,
        Binary,
        Other
    };

    auto to_string(DiagonalKind) -> std::string;
    auto to_string(Orientation) -> std::string;

    /// The colours met walking along a diagonal, reduced to their minimal
    /// period. index is the diagonal index; for residue classes it is the
    /// residue modulo `modulus`.
    struct DiagonalDescriptor
    {
        Orientation orientation = Orientation::Right;
        Coord index = 0;
        Coord modulus = 1;
        std::vector<ColorId> colors;
        DiagonalKind kind = DiagonalKind::Other;
    };

    /// Translations by maximal periods move diagonal d to d + m * k, where m
    /// is the gcd of the period indices. This is that m.
    auto diagonal_modulus(const PeriodicColoring &, Orientation) -> Coord;

    auto diagonal_sequence(const PeriodicColoring &, Orientation, Coord index) -> DiagonalDescriptor;

    /// One descriptor per residue class, Right classes first, every kind
    /// included.
    auto diagonal_classes(const PeriodicColoring &) -> std::vector<DiagonalDescriptor>;

    /// The classes of diagonal_classes that are one-colour or binary.
    auto find_special_diagonals(const PeriodicColoring &) -> std::vector<DiagonalDescriptor>;

    /// F'(v) = F(v - t g) on diagonals with index = r (mod m), F'(v) = F(v)
    /// elsewhere, g being the diagonal step. Throws PreconditionError unless m
    /// divides the diagonal index of every maximal period.
    auto shift_residue_class(const PeriodicColoring &, Orientation, Coord r, Coord m, Coord t) -> PeriodicColoring;

    /// Cells on diagonals with index > cut take the colour t steps back along
    /// the diagonal; cells whose source is outside the window become masked.
    auto shift_half_plane(const WindowColoring &, Orientation, Coord cut, Coord t) -> WindowColoring;
}
