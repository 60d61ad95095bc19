#ifndef REALROOT_PSD_HPP
#define REALROOT_PSD_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "realroot/forms.hpp"
#include "realroot/polynomial.hpp"
#include "realroot/rational.hpp"

namespace realroot {

/* n×n Hankel matrix of power sums, H[i][j] = p_{i+j} (0-based), so the
 * quadratic form x^T H x is the degree-2 form of the polynomial. */
struct HermiteMatrix {
    int n = 0;
    std::vector<Rat> entries; // row-major

    const Rat& at(int i, int j) const { return entries[static_cast<std::size_t>(i) * n + j]; }
    Rat& at(int i, int j) { return entries[static_cast<std::size_t>(i) * n + j]; }
};

HermiteMatrix hermite_matrix(const Polynomial& f);

/* Coefficients c_1..c_n with det(tI - H) = t^n - c_1 t^{n-1} + c_2
 * t^{n-2} - …; c_k equals the sum of the k×k principal minors
 * (Faddeev-LeVerrier, exact rational arithmetic). */
std::vector<Rat> principal_minor_sums(const HermiteMatrix& H);

/* Exact test: a real symmetric matrix is PSD iff every c_k ≥ 0. Leading
 * principal minors alone would miss the singular boundary; the
 * characteristic-polynomial signs do not. Throws on asymmetric input.
 * No floating point anywhere. */
bool is_psd_exact(const HermiteMatrix& H);

/* Real-rootedness decided exactly through the degree-2 form, without
 * any root finding. Requires degree ≥ 1. */
bool classify_real_rooted(const Polynomial& f);

std::string hermite_to_json(const HermiteMatrix& H, int indent = -1);

struct SphereSearchOptions {
    int restarts = 32;
    int steps = 500;
    double step_size = 0.1; // initial; backtracking halves it
    std::uint64_t seed = 0x736d696e5f6f6eULL;
};

struct SphereMinimum {
    double min_value = 0.0;
    std::vector<double> argmin;
};

/* Projected gradient descent on the unit sphere from random restarts
 * plus the signed axis points. One-sided: a negative value refutes
 * positive semidefiniteness, a nonnegative one is evidence only.
 * Restarts use independent streams derived from the seed. */
SphereMinimum estimate_min_on_sphere(const MAdicForm& form, const SphereSearchOptions& options = {});
SphereMinimum estimate_min_on_sphere(const MAdicForm& form, int restarts, int steps,
                                     std::uint64_t seed = SphereSearchOptions{}.seed);

} // namespace realroot

#endif
