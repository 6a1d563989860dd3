#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace pcg::kernels
{
    /// First i < n with colors[perm[i]] != colors[i], or n if there is none.
    /// Tests a candidate symmetry given as a cell permutation.
    using GatherMismatchFn = std::size_t (*)(const std::int32_t * colors, const std::int32_t * perm, std::size_t n);

    /// One step of the torus walk-count recurrence. neighbours is direction
    /// major (neighbours[d * n + i] is the d-th neighbour of cell i), and
    ///   next[i] = colors[i] == target ? sum_d cur[neighbours[d * n + i]] : 0.
    using WalkStepFn = void (*)(const std::uint64_t * cur, std::uint64_t * next, const std::int32_t * neighbours,
        const std::int32_t * colors, std::int32_t target, std::size_t n);

    namespace scalar
    {
        auto gather_mismatch(const std::int32_t * colors, const std::int32_t * perm, std::size_t n) -> std::size_t;
        auto walk_step(const std::uint64_t * cur, std::uint64_t * next, const std::int32_t * neighbours,
            const std::int32_t * colors, std::int32_t target, std::size_t n) -> void;
    }

    namespace avx2
    {
        /// False when the binary was built without the AVX2 variants or the CPU
        /// lacks AVX2; the functions below must not be called in that case.
        auto available() -> bool;

        auto gather_mismatch(const std::int32_t * colors, const std::int32_t * perm, std::size_t n) -> std::size_t;
        auto walk_step(const std::uint64_t * cur, std::uint64_t * next, const std::int32_t * neighbours,
            const std::int32_t * colors, std::int32_t target, std::size_t n) -> void;
    }

    /// Dispatched entry points, resolved once on first use.
    auto gather_mismatch(const std::int32_t * colors, const std::int32_t * perm, std::size_t n) -> std::size_t;
    auto walk_step(const std::uint64_t * cur, std::uint64_t * next, const std::int32_t * neighbours,
        const std::int32_t * colors, std::int32_t target, std::size_t n) -> void;

    /// "avx2" or "scalar".
    auto active_variant() -> std::string_view;

    /// Pin the dispatched kernels to the scalar variants, or undo that.
    auto force_scalar(bool) -> void;
}
