// Compiled with -mavx2; only reached after a runtime CPU check.

#include "rainbow/kernels.hpp"

#include <immintrin.h>

namespace rainbow::kernels::avx2 {

namespace {

    // Lane i of the result is all-ones iff (masks[i] & probe) == want.
    inline int match_bits(const std::uint64_t* p, __m256i probe, __m256i want)
    {
        __m256i m = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
        __m256i eq = _mm256_cmpeq_epi64(_mm256_and_si256(m, probe), want);
        return _mm256_movemask_pd(_mm256_castsi256_pd(eq));
    }

    std::size_t count_matching(std::span<const std::uint64_t> masks, std::uint64_t probe, std::uint64_t want)
    {
        const __m256i vprobe = _mm256_set1_epi64x(static_cast<long long>(probe));
        const __m256i vwant = _mm256_set1_epi64x(static_cast<long long>(want));
        const std::size_t n = masks.size();
        const std::uint64_t* data = masks.data();

        std::size_t count = 0;
        std::size_t i = 0;
        for (; i + 8 <= n; i += 8) {
            count += __builtin_popcount(match_bits(data + i, vprobe, vwant));
            count += __builtin_popcount(match_bits(data + i + 4, vprobe, vwant));
        }
        for (; i + 4 <= n; i += 4)
            count += __builtin_popcount(match_bits(data + i, vprobe, vwant));
        for (; i < n; ++i)
            count += (data[i] & probe) == want;
        return count;
    }

} // namespace

std::size_t count_disjoint(std::span<const std::uint64_t> masks, std::uint64_t occupied)
{
    return count_matching(masks, occupied, 0);
}

std::size_t count_superset(std::span<const std::uint64_t> masks, std::uint64_t subset)
{
    return count_matching(masks, subset, subset);
}

std::size_t find_disjoint(std::span<const std::uint64_t> masks, std::size_t from, std::uint64_t occupied)
{
    const std::size_t n = masks.size();
    const std::uint64_t* data = masks.data();
    std::size_t i = from;

    // Short tails are common in the search; skip the vector setup for them.
    for (; i < n && (i & 3) != 0; ++i)
        if ((data[i] & occupied) == 0)
            return i;

    const __m256i vocc = _mm256_set1_epi64x(static_cast<long long>(occupied));
    const __m256i zero = _mm256_setzero_si256();
    for (; i + 4 <= n; i += 4) {
        int bits = match_bits(data + i, vocc, zero);
        if (bits != 0)
            return i + static_cast<std::size_t>(__builtin_ctz(static_cast<unsigned>(bits)));
    }
    for (; i < n; ++i)
        if ((data[i] & occupied) == 0)
            return i;
    return n;
}

} // namespace rainbow::kernels::avx2
