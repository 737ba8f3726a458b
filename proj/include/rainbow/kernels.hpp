#pragma once

// Mask-scan kernels shared by the solvers and degree queries.
//
// Each edge of a hypergraph on at most 64 vertices is a 64-bit mask. The hot
// loops of the exact search ask "which candidate edges avoid the occupied
// vertices?" and degree queries ask "which edges contain this set?". Both are
// flat scans over a mask array, served by a scalar reference implementation
// and an AVX2 variant chosen once at runtime.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace rainbow::kernels {

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa);

/// True when the variant was compiled in and the CPU supports it.
bool isa_supported(Isa isa);

/// The variant currently used by the dispatching entry points. Defaults to
/// the best supported one; RAINBOW_LAB_ISA=scalar forces the reference path.
Isa active_isa();

/// Overrides the dispatch choice. Throws std::invalid_argument when the
/// variant is not supported here.
void set_active_isa(Isa isa);

/// Number of masks m with (m & occupied) == 0.
std::size_t count_disjoint(std::span<const std::uint64_t> masks, std::uint64_t occupied);

/// Number of masks m with (m & subset) == subset.
std::size_t count_superset(std::span<const std::uint64_t> masks, std::uint64_t subset);

/// Smallest index i >= from with (masks[i] & occupied) == 0, or masks.size().
std::size_t find_disjoint(std::span<const std::uint64_t> masks, std::size_t from, std::uint64_t occupied);

namespace scalar {
std::size_t count_disjoint(std::span<const std::uint64_t> masks, std::uint64_t occupied);
std::size_t count_superset(std::span<const std::uint64_t> masks, std::uint64_t subset);
std::size_t find_disjoint(std::span<const std::uint64_t> masks, std::size_t from, std::uint64_t occupied);
} // namespace scalar

#if defined(RAINBOW_HAVE_AVX2)
namespace avx2 {
std::size_t count_disjoint(std::span<const std::uint64_t> masks, std::uint64_t occupied);
std::size_t count_superset(std::span<const std::uint64_t> masks, std::uint64_t subset);
std::size_t find_disjoint(std::span<const std::uint64_t> masks, std::size_t from, std::uint64_t occupied);
} // namespace avx2
#endif

} // namespace rainbow::kernels
