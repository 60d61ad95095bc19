#ifndef REALROOT_RNG_HPP
#define REALROOT_RNG_HPP

#include <cstdint>

namespace realroot {

/* splitmix64 step; spreads trial indices xor'd into a base seed so that
 * per-trial streams are independent of execution order. */
inline std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index)
{
    return splitmix64(seed ^ index);
}

} // namespace realroot

#endif
