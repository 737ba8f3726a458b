#include "rainbow/kernels.hpp"

namespace rainbow::kernels::scalar {

std::size_t count_disjoint(std::span<const std::uint64_t> masks, std::uint64_t occupied)
{
    std::size_t count = 0;
    for (auto m : masks)
        count += (m & occupied) == 0;
    return count;
}

std::size_t count_superset(std::span<const std::uint64_t> masks, std::uint64_t subset)
{
    std::size_t count = 0;
    for (auto m : masks)
        count += (m & subset) == subset;
    return count;
}

std::size_t find_disjoint(std::span<const std::uint64_t> masks, std::size_t from, std::uint64_t occupied)
{
    for (std::size_t i = from; i < masks.size(); ++i)
        if ((masks[i] & occupied) == 0)
            return i;
    return masks.size();
}

} // namespace rainbow::kernels::scalar
