#include <pcg/kernels.hh>

using std::int32_t;
using std::size_t;
using std::uint64_t;

auto pcg::kernels::scalar::gather_mismatch(const int32_t * colors, const int32_t * perm, size_t n) -> size_t
{
    for (size_t i = 0; i < n; ++i)
        if (colors[perm[i]] != colors[i])
            return i;
    return n;
}

auto pcg::kernels::scalar::walk_step(const uint64_t * cur, uint64_t * next, const int32_t * neighbours,
    const int32_t * colors, int32_t target, size_t n) -> void
{
    for (size_t i = 0; i < n; ++i) {
        if (colors[i] != target) {
            next[i] = 0;
            continue;
        }
        next[i] = cur[neighbours[i]] + cur[neighbours[n + i]] + cur[neighbours[2 * n + i]] + cur[neighbours[3 * n + i]];
    }
}
