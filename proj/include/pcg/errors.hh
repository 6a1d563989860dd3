#pragma once

#include <stdexcept>
#include <string>

namespace pcg
{
    /// Malformed PCG text or CLI input.
    class ParseError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    /// An operation was called outside its documented domain.
    class PreconditionError : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    /// An operation that needs a perfect coloring was given one that is not.
    class NotPerfect : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    /// The matrix admits no positive solution of detailed balance, so it cannot
    /// be the quotient of a perfect coloring of the grid.
    class StationaryError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };
}
