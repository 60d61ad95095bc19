#ifndef REALROOT_STURM_HPP
#define REALROOT_STURM_HPP

#include "realroot/polynomial.hpp"

namespace realroot {

struct SturmCount {
    int distinct_real = 0;
    int distinct_total = 0; // degree of the squarefree part

    bool real_rooted() const { return distinct_real == distinct_total; }
};

/* Exact real-root count: Sturm chain of the squarefree part
 * f / gcd(f, f') over the rationals, sign variations at -inf and +inf.
 * Requires degree ≥ 1. Independent of the Hermite route end to end. */
SturmCount sturm_real_root_count(const Polynomial& f);

} // namespace realroot

#endif
