#pragma once

#include <pcg/coloring.hh>
#include <pcg/diagonals.hh>
#include <pcg/perfectness.hh>
#include <pcg/twins.hh>

#include <optional>
#include <string>
#include <vector>

namespace pcg
{
    struct SearchSpec
    {
        /// Every result is periodic under this lattice.
        Lattice lattice;
        int max_colors = 1;
        /// When set, results have exactly this quotient, up to renumbering.
        std::optional<QuotientMatrix> quotient;
        /// Use exactly max_colors colours (the quotient's size, if given), not
        /// 1..max_colors.
        bool surjective = true;
        /// Keep only coverings; pruned during the search.
        bool coverings_only = false;
        /// Worker threads.
        int jobs = 1;
    };

    /// Throws PreconditionError for an invalid spec.
    auto validate(const SearchSpec &) -> void;

    /// Canonical forms of all perfect colourings matching the SearchSpec, sorted.
    /// Backtracks over the cells in breadth-first order around cell 0, with
    /// colours introduced in increasing order (all colours are open when a
    /// quotient is given), and prunes any cell whose partial neighbour counts
    /// exceed the row fixed by the first complete node of its colour.
    auto enumerate_canonical(const SearchSpec &) -> std::vector<std::string>;

    /// enumerate_canonical, parsed back.
    auto enumerate(const SearchSpec &) -> std::vector<PeriodicColoring>;

    /// Tries every assignment of colours to cells, no pruning. Limited to 12
    /// cells and 4 colours; throws PreconditionError beyond that.
    auto brute_oracle(const SearchSpec &) -> std::vector<std::string>;

    struct ClassificationReport
    {
        std::string canonical_form;
        bool perfect = false;
        std::optional<QuotientMatrix> quotient;
        std::optional<Violation> violation;
        bool bipartite = false;
        std::vector<ColorPair> twins;
        bool covering = false;
        std::vector<DiagonalDescriptor> special_diagonals;
        bool orbit = false;
        Lattice maximal_periods;
    };

    /// Twins and covering are left empty/false for a colouring that is not
    /// perfect.
    auto classify(const PeriodicColoring &) -> ClassificationReport;
}
