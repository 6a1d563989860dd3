#include <pcg/kernels.hh>

#include <immintrin.h>

using std::int32_t;
using std::size_t;
using std::uint64_t;

auto pcg::kernels::avx2::gather_mismatch(const int32_t * colors, const int32_t * perm, size_t n) -> size_t
{
    size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i idx = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(perm + i));
        __m256i mapped = _mm256_i32gather_epi32(colors, idx, 4);
        __m256i own = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(colors + i));
        int equal = _mm256_movemask_ps(_mm256_castsi256_ps(_mm256_cmpeq_epi32(mapped, own)));
        if (equal != 0xff)
            return i + size_t(__builtin_ctz(~unsigned(equal)));
    }
    for (; i < n; ++i)
        if (colors[perm[i]] != colors[i])
            return i;
    return n;
}

auto pcg::kernels::avx2::walk_step(const uint64_t * cur, uint64_t * next, const int32_t * neighbours,
    const int32_t * colors, int32_t target, size_t n) -> void
{
    auto base = reinterpret_cast<const long long *>(cur);
    __m128i want = _mm_set1_epi32(target);
    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i sum = _mm256_setzero_si256();
        for (size_t d = 0; d < 4; ++d) {
            __m128i idx = _mm_loadu_si128(reinterpret_cast<const __m128i *>(neighbours + d * n + i));
            sum = _mm256_add_epi64(sum, _mm256_i32gather_epi64(base, idx, 8));
        }
        // widen the 32-bit colour match mask to 64-bit lanes
        __m128i match = _mm_cmpeq_epi32(_mm_loadu_si128(reinterpret_cast<const __m128i *>(colors + i)), want);
        __m256i mask = _mm256_cvtepi32_epi64(match);
        _mm256_storeu_si256(reinterpret_cast<__m256i *>(next + i), _mm256_and_si256(sum, mask));
    }
    for (; i < n; ++i)
        next[i] = colors[i] != target ? 0
                                       : cur[neighbours[i]] + cur[neighbours[n + i]] + cur[neighbours[2 * n + i]] + cur[neighbours[3 * n + i]];
}

auto pcg::kernels::avx2::available() -> bool
{
    return __builtin_cpu_supports("avx2");
}
