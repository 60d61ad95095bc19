#ifndef REALROOT_POWER_SUMS_HPP
#define REALROOT_POWER_SUMS_HPP

#include <vector>

#include "realroot/polynomial.hpp"
#include "realroot/rational.hpp"

namespace realroot {

/* Root power sums p_k = Σ_ℓ λ_ℓ^k over all roots with multiplicity,
 * p_0 = degree. Exact rationals; for a monic integer polynomial every
 * p_k is an integer. */
struct PowerSums {
    std::vector<Rat> values; // p_0 .. p_K
    int source_degree = 0;

    const Rat& p(std::size_t k) const { return values.at(k); }
    int max_index() const { return static_cast<int>(values.size()) - 1; }
};

/* Newton's identities on the monic normalization of f: no root finding,
 * exact arithmetic throughout. Requires degree ≥ 1. */
PowerSums power_sums(const Polynomial& f, int k_max);

} // namespace realroot

#endif
