#include <pcg/kernels.hh>

#include <atomic>
#include <cstdlib>

using std::int32_t;
using std::size_t;
using std::uint64_t;

using namespace pcg::kernels;

#ifndef PCG_HAVE_AVX2_KERNELS
auto pcg::kernels::avx2::available() -> bool
{
    return false;
}

auto pcg::kernels::avx2::gather_mismatch(const int32_t *, const int32_t *, size_t) -> size_t
{
    std::abort();
}

auto pcg::kernels::avx2::walk_step(const uint64_t *, uint64_t *, const int32_t *, const int32_t *, int32_t, size_t) -> void
{
    std::abort();
}
#endif

namespace
{
    std::atomic<bool> pinned_scalar{false};

    auto use_avx2() -> bool
    {
        static const bool supported = avx2::available();
        return supported && ! pinned_scalar.load(std::memory_order_relaxed);
    }
}

auto pcg::kernels::gather_mismatch(const int32_t * colors, const int32_t * perm, size_t n) -> size_t
{
    return use_avx2() ? avx2::gather_mismatch(colors, perm, n) : scalar::gather_mismatch(colors, perm, n);
}

auto pcg::kernels::walk_step(const uint64_t * cur, uint64_t * next, const int32_t * neighbours,
    const int32_t * colors, int32_t target, size_t n) -> void
{
    if (use_avx2())
        avx2::walk_step(cur, next, neighbours, colors, target, n);
    else
        scalar::walk_step(cur, next, neighbours, colors, target, n);
}

auto pcg::kernels::active_variant() -> std::string_view
{
    return use_avx2() ? "avx2" : "scalar";
}

auto pcg::kernels::force_scalar(bool on) -> void
{
    pinned_scalar.store(on, std::memory_order_relaxed);
}
