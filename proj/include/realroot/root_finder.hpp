#ifndef REALROOT_ROOT_FINDER_HPP
#define REALROOT_ROOT_FINDER_HPP

#include <complex>
#include <vector>

#include "realroot/polynomial.hpp"

namespace realroot {

/* Distinct complex roots with multiplicities. Invariants after
 * numeric_roots: non-real entries occur in bit-identical conjugate
 * pairs with equal multiplicities, multiplicities sum to the degree,
 * and distinct entries are separated by more than the clustering
 * radius. */
struct RootSpectrum {
    struct Entry {
        std::complex<double> value;
        int multiplicity = 0;
    };

    std::vector<Entry> distinct_roots;
    double residual_bound = 0.0; // max |f(λ)| over the returned roots

    int total_multiplicity() const
    {
        int n = 0;
        for (const Entry& e : distinct_roots)
            n += e.multiplicity;
        return n;
    }

    bool all_real() const
    {
        for (const Entry& e : distinct_roots)
            if (e.value.imag() != 0.0)
                return false;
        return true;
    }
};

struct RootFinderOptions {
    int max_iterations = 200;                 // Aberth sweeps per precision level
    double clustering_radius_factor = 1e-7;   // radius = factor * (1 + max|λ|)
};

/* All complex roots of f to double precision. The multiplicity
 * structure is taken from the exact squarefree decomposition, so each
 * Aberth run only ever sees simple roots; clustering at the relative
 * radius then merges numerically coincident values, near-real roots are
 * snapped onto the axis, and the remaining roots are averaged into
 * exactly conjugate pairs. One retry at quadruple working precision
 * before giving up with NumericError. Requires degree ≥ 1. */
RootSpectrum numeric_roots(const Polynomial& f, const RootFinderOptions& options = {});

} // namespace realroot

#endif
