#include "realroot/root_finder.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <optional>
#include <stdexcept>

#include "realroot/errors.hpp"

namespace realroot {

namespace {

/* Minimal complex type so the same Aberth code runs on double and on
 * __float128 (std::complex is only reliable for standard floating
 * types). Division is the textbook formula; fine at desk scale. */
template <class Real>
struct Cx {
    Real re{};
    Real im{};

    friend Cx operator+(Cx a, Cx b) { return {a.re + b.re, a.im + b.im}; }
    friend Cx operator-(Cx a, Cx b) { return {a.re - b.re, a.im - b.im}; }
    friend Cx operator*(Cx a, Cx b)
    {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Cx operator/(Cx a, Cx b)
    {
        Real d = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }
};

template <class Real>
Real norm2(Cx<Real> a)
{
    return a.re * a.re + a.im * a.im;
}

template <class Real>
struct RealTraits;

template <>
struct RealTraits<double> {
    static double epsilon() { return 2.220446049250313e-16; }
};

#if defined(__SIZEOF_FLOAT128__)
using quad = __float128;
template <>
struct RealTraits<quad> {
    static quad epsilon()
    {
        quad e = 1;
        for (int i = 0; i < 112; ++i)
            e /= 2;
        return e;
    }
};

quad quad_from_int(const Int& z)
{
    // two double legs give ~106 of the available 113 bits
    const double hi = z.get_d();
    const Int rest = z - Int(hi);
    return static_cast<quad>(hi) + static_cast<quad>(rest.get_d());
}

quad quad_from_rat(const Rat& q)
{
    return quad_from_int(q.get_num()) / quad_from_int(q.get_den());
}
#endif

double real_from_rat_as(const Rat& q, double*)
{
    return rat_to_double(q);
}

#if defined(__SIZEOF_FLOAT128__)
quad real_from_rat_as(const Rat& q, quad*)
{
    return quad_from_rat(q);
}
#endif

template <class Real>
std::pair<Cx<Real>, Cx<Real>> eval_with_derivative(const std::vector<Real>& coeffs, Cx<Real> z)
{
    Cx<Real> p{coeffs.back(), Real(0)};
    Cx<Real> dp{Real(0), Real(0)};
    for (std::size_t i = coeffs.size() - 1; i-- > 0;) {
        dp = dp * z + p;
        p = p * z + Cx<Real>{coeffs[i], Real(0)};
    }
    return {p, dp};
}

/* Fujiwara-style inclusion radius for a monic polynomial. Computed in
 * double regardless of Real; initial guesses need no precision. */
double root_radius(const std::vector<double>& monic)
{
    const int n = static_cast<int>(monic.size()) - 1;
    double r = 0.0;
    for (int k = 1; k <= n; ++k) {
        double c = std::abs(monic[n - k]);
        if (c > 0.0)
            r = std::max(r, std::pow(c, 1.0 / k));
    }
    return 2.0 * r + 0.125;
}

/* One Aberth-Ehrlich run at a fixed precision. Gauss-Seidel updates;
 * returns nullopt when the sweep cap is hit before every correction is
 * below tolerance or the final residuals fail a backward-error check. */
template <class Real>
std::optional<std::vector<Cx<Real>>> aberth_run(const std::vector<Real>& monic,
                                                std::vector<Cx<Real>> z, int max_sweeps)
{
    const int n = static_cast<int>(monic.size()) - 1;
    const Real eps = RealTraits<Real>::epsilon();
    const Real tol = eps * 64;

    bool settled = false;
    for (int sweep = 0; sweep < max_sweeps && !settled; ++sweep) {
        settled = true;
        for (int i = 0; i < n; ++i) {
            auto [p, dp] = eval_with_derivative(monic, z[i]);
            if (norm2(p) == Real(0))
                continue;
            if (norm2(dp) == Real(0)) {
                z[i].re += Real(1) / (1 << 10); // nudge off a critical point
                settled = false;
                continue;
            }
            Cx<Real> newton = p / dp;
            Cx<Real> repulsion{Real(0), Real(0)};
            for (int j = 0; j < n; ++j) {
                if (j == i)
                    continue;
                Cx<Real> diff = z[i] - z[j];
                if (norm2(diff) == Real(0)) {
                    diff.re += tol + Real(1) / (1 << 20);
                }
                repulsion = repulsion + Cx<Real>{Real(1), Real(0)} / diff;
            }
            Cx<Real> denom = Cx<Real>{Real(1), Real(0)} - newton * repulsion;
            Cx<Real> w = norm2(denom) == Real(0) ? newton : newton / denom;
            z[i] = z[i] - w;
            if (norm2(w) > tol * tol * (Real(1) + norm2(z[i])))
                settled = false;
        }
    }
    if (!settled)
        return std::nullopt;

    // backward-error acceptance: |p(z)| small relative to Σ|c_k||z|^k
    for (int i = 0; i < n; ++i) {
        auto [p, dp] = eval_with_derivative(monic, z[i]);
        (void)dp;
        const Real az = Real(std::sqrt(static_cast<double>(norm2(z[i]))));
        Real scale = Real(0);
        Real powz = Real(1);
        for (int k = 0; k <= n; ++k) {
            Real c = monic[k] < Real(0) ? -monic[k] : monic[k];
            scale = scale + c * powz;
            powz = powz * az;
        }
        Real bound = Real(n + 1) * eps * 4096 * (scale + Real(1));
        if (norm2(p) > bound * bound)
            return std::nullopt;
    }
    return z;
}

template <class Real>
std::optional<std::vector<std::complex<double>>> roots_at_precision(const Polynomial& monic_poly,
                                                                    int max_sweeps)
{
    const int n = monic_poly.degree();
    std::vector<Real> coeffs(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i)
        coeffs[i] = real_from_rat_as(monic_poly.coeff(i), static_cast<Real*>(nullptr));

    const double radius = root_radius(monic_poly.coeffs_as_double());
    std::vector<Cx<Real>> z;
    z.reserve(n);
    for (int k = 0; k < n; ++k) {
        // staggered radii and an angular offset keep the start
        // asymmetric enough to avoid stalls
        double rho = radius * (0.35 + 0.6 * (k + 1.0) / n);
        double theta = 2.0 * M_PI * k / n + 0.43;
        z.push_back({Real(rho * std::cos(theta)), Real(rho * std::sin(theta))});
    }

    auto result = aberth_run(coeffs, std::move(z), max_sweeps);
    if (!result)
        return std::nullopt;
    std::vector<std::complex<double>> out;
    out.reserve(n);
    for (const Cx<Real>& r : *result)
        out.emplace_back(static_cast<double>(r.re), static_cast<double>(r.im));
    return out;
}

std::vector<std::complex<double>> roots_of_squarefree(const Polynomial& factor, int max_sweeps)
{
    const Polynomial monic = factor.monic();
    if (monic.degree() == 1) {
        return {std::complex<double>(rat_to_double(-monic.coeff(0)), 0.0)};
    }
    if (auto r = roots_at_precision<double>(monic, max_sweeps))
        return *r;
#if defined(__SIZEOF_FLOAT128__)
    if (auto r = roots_at_precision<quad>(monic, max_sweeps))
        return *r;
#endif
    throw NumericError("root finding did not converge within the iteration cap; "
                       "the polynomial appears ill-conditioned at this precision");
}

struct WeightedRoot {
    std::complex<double> value;
    int multiplicity;
};

/* Single-linkage clusters at the given radius; cluster value is the
 * multiplicity-weighted mean. */
std::vector<WeightedRoot> cluster(std::vector<WeightedRoot> points, double radius)
{
    std::vector<WeightedRoot> clusters;
    std::vector<bool> used(points.size(), false);
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (used[i])
            continue;
        std::vector<std::size_t> member{i};
        used[i] = true;
        for (std::size_t cursor = 0; cursor < member.size(); ++cursor) {
            for (std::size_t j = 0; j < points.size(); ++j) {
                if (used[j])
                    continue;
                if (std::abs(points[member[cursor]].value - points[j].value) <= radius) {
                    used[j] = true;
                    member.push_back(j);
                }
            }
        }
        std::complex<double> sum = 0.0;
        int mult = 0;
        for (std::size_t idx : member) {
            sum += points[idx].value * static_cast<double>(points[idx].multiplicity);
            mult += points[idx].multiplicity;
        }
        clusters.push_back({sum / static_cast<double>(mult), mult});
    }
    return clusters;
}

/* Snap near-real values onto the axis, then average the rest into
 * exactly conjugate pairs (bit-identical imaginary parts of opposite
 * sign). */
std::vector<WeightedRoot> symmetrize(std::vector<WeightedRoot> entries, double radius)
{
    std::vector<WeightedRoot> real_entries, upper, lower;
    for (WeightedRoot& e : entries) {
        if (std::abs(e.value.imag()) <= radius) {
            e.value = std::complex<double>(e.value.real(), 0.0);
            real_entries.push_back(e);
        } else if (e.value.imag() > 0) {
            upper.push_back(e);
        } else {
            lower.push_back(e);
        }
    }

    std::sort(upper.begin(), upper.end(), [](const WeightedRoot& a, const WeightedRoot& b) {
        if (a.value.imag() != b.value.imag())
            return a.value.imag() > b.value.imag();
        return a.value.real() < b.value.real();
    });

    std::vector<WeightedRoot> out = std::move(real_entries);
    std::vector<bool> taken(lower.size(), false);
    for (const WeightedRoot& u : upper) {
        std::size_t best = lower.size();
        double best_dist = 0.0;
        for (std::size_t j = 0; j < lower.size(); ++j) {
            if (taken[j])
                continue;
            double dist = std::abs(u.value - std::conj(lower[j].value));
            if (best == lower.size() || dist < best_dist) {
                best = j;
                best_dist = dist;
            }
        }
        if (best == lower.size() || lower[best].multiplicity != u.multiplicity ||
            best_dist > 1024 * radius + 1e-9 * (1.0 + std::abs(u.value))) {
            throw NumericError("conjugate pairing failed: root set is not symmetric "
                               "about the real axis at working precision");
        }
        taken[best] = true;
        const std::complex<double> w =
            0.5 * (u.value + std::conj(lower[best].value));
        out.push_back({w, u.multiplicity});
        out.push_back({std::conj(w), u.multiplicity});
    }
    for (std::size_t j = 0; j < lower.size(); ++j)
        if (!taken[j])
            throw NumericError("conjugate pairing failed: unmatched root below the real axis");
    return out;
}

} // namespace

RootSpectrum numeric_roots(const Polynomial& f, const RootFinderOptions& options)
{
    if (f.is_zero())
        throw std::invalid_argument("numeric roots of the zero polynomial");
    if (f.degree() < 1)
        throw std::invalid_argument("numeric roots require degree >= 1");

    std::vector<WeightedRoot> raw;
    for (const auto& [factor, multiplicity] : squarefree_decomposition(f)) {
        for (const std::complex<double>& z : roots_of_squarefree(factor, options.max_iterations))
            raw.push_back({z, multiplicity});
    }

    double max_abs = 0.0;
    for (const WeightedRoot& r : raw)
        max_abs = std::max(max_abs, std::abs(r.value));
    const double radius = options.clustering_radius_factor * (1.0 + max_abs);

    std::vector<WeightedRoot> merged = symmetrize(cluster(std::move(raw), radius), radius);
    std::sort(merged.begin(), merged.end(), [](const WeightedRoot& a, const WeightedRoot& b) {
        if (a.value.real() != b.value.real())
            return a.value.real() < b.value.real();
        return a.value.imag() < b.value.imag();
    });

    RootSpectrum spectrum;
    double residual = 0.0;
    for (const WeightedRoot& r : merged) {
        spectrum.distinct_roots.push_back({r.value, r.multiplicity});
        residual = std::max(residual, std::abs(f.eval(r.value)));
    }
    spectrum.residual_bound = residual;
    assert(spectrum.total_multiplicity() == f.degree());
    return spectrum;
}

} // namespace realroot
