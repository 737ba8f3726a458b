#include "rainbow/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace rainbow::kernels {

namespace {

    bool cpu_has_avx2()
    {
#if defined(RAINBOW_HAVE_AVX2)
        __builtin_cpu_init();
        return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
        return false;
#endif
    }

    Isa initial_isa()
    {
        if (const char* forced = std::getenv("RAINBOW_LAB_ISA"); forced && std::string(forced) == "scalar")
            return Isa::scalar;
        return cpu_has_avx2() ? Isa::avx2 : Isa::scalar;
    }

    std::atomic<Isa>& current()
    {
        static std::atomic<Isa> isa{initial_isa()};
        return isa;
    }

} // namespace

std::string_view isa_name(Isa isa)
{
    switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
    }
    return "unknown";
}

bool isa_supported(Isa isa)
{
    return isa == Isa::scalar || (isa == Isa::avx2 && cpu_has_avx2());
}

Isa active_isa() { return current().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa)
{
    if (!isa_supported(isa))
        throw std::invalid_argument("kernel variant not supported: " + std::string(isa_name(isa)));
    current().store(isa, std::memory_order_relaxed);
}

std::size_t count_disjoint(std::span<const std::uint64_t> masks, std::uint64_t occupied)
{
#if defined(RAINBOW_HAVE_AVX2)
    if (active_isa() == Isa::avx2)
        return avx2::count_disjoint(masks, occupied);
#endif
    return scalar::count_disjoint(masks, occupied);
}

std::size_t count_superset(std::span<const std::uint64_t> masks, std::uint64_t subset)
{
#if defined(RAINBOW_HAVE_AVX2)
    if (active_isa() == Isa::avx2)
        return avx2::count_superset(masks, subset);
#endif
    return scalar::count_superset(masks, subset);
}

std::size_t find_disjoint(std::span<const std::uint64_t> masks, std::size_t from, std::uint64_t occupied)
{
#if defined(RAINBOW_HAVE_AVX2)
    if (active_isa() == Isa::avx2)
        return avx2::find_disjoint(masks, from, occupied);
#endif
    return scalar::find_disjoint(masks, from, occupied);
}

} // namespace rainbow::kernels
