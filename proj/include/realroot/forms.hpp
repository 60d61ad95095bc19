#ifndef REALROOT_FORMS_HPP
#define REALROOT_FORMS_HPP

#include <complex>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "realroot/polynomial.hpp"
#include "realroot/rational.hpp"
#include "realroot/root_finder.hpp"

namespace realroot {

using Exponents = std::vector<int>;

/* n-ary m-adic form: homogeneous of degree m in n variables, sparse
 * term map keyed by exponent vectors (length n, entries summing to m),
 * exact rational coefficients, no zero coefficient stored. */
struct MAdicForm {
    int nvars = 0;
    int degree = 0;
    std::map<Exponents, Rat> terms;
};

/* Parallel double-coefficient representation produced by the root
 * route. `magnitudes` carries, per term, the sum of absolute values of
 * the summands that produced the coefficient — the conditioning scale
 * any honest float comparison has to normalize by. */
struct NumericMAdicForm {
    int nvars = 0;
    int degree = 0;
    std::map<Exponents, double> terms;
    std::map<Exponents, double> magnitudes;
    double max_imag_residue = 0.0;
};

/* Weighted linear forms ℓ(x) = Σ_j coeffs[j]·x_j. For a root spectrum
 * the rows are the Vandermonde vectors (1, λ, …, λ^{n-1}) weighted by
 * multiplicity; verification of sum-of-powers certificates reuses the
 * same shape with arbitrary real rows. */
struct LinearForm {
    int weight = 1;
    std::vector<std::complex<double>> coeffs;
};
using LinearFormList = std::vector<LinearForm>;

LinearFormList vandermonde_rows(const RootSpectrum& spectrum);

/* Gaussian rational (element of Q(i)); enough arithmetic for the exact
 * expansion route. */
struct GaussianRational {
    Rat re;
    Rat im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b)
    {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b)
    {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
};

/* Coefficient route: the x^α coefficient is multinomial(m; α)·p_{K(α)}
 * with K(α) = Σ_j α_j (j-1), power sums taken exactly from the
 * coefficients. Requires degree ≥ 1 and m ≥ 1. */
MAdicForm build_form_exact(const Polynomial& f, int m);

/* Root route: expands Σ_ℓ μ_ℓ (x_1 + λ_ℓ x_2 + … + λ_ℓ^{n-1} x_n)^m by
 * iterated sparse multiplication. Imaginary parts must cancel across
 * conjugate pairs (exactly so for a symmetrized spectrum); a residue
 * above imag_tol·(1+magnitude) raises NumericError. */
NumericMAdicForm build_form_from_roots(const RootSpectrum& spectrum, int m,
                                       double imag_tol = 1e-8);

/* Same expansion over exact Gaussian rationals; the root list must be
 * closed under conjugation (imaginary parts cancel exactly). Used when
 * a spectrum is known exactly, where the two routes must agree
 * coefficient for coefficient. */
MAdicForm build_form_from_roots_exact(const std::vector<std::pair<GaussianRational, int>>& roots,
                                      int m);

/* Generic expansion helper shared by the root route and certificate
 * verification. */
NumericMAdicForm expand_weighted_powers(const LinearFormList& rows, int nvars, int m,
                                        double imag_tol = 1e-8);

Rat evaluate(const MAdicForm& form, const std::vector<Rat>& x);     // exact
double evaluate(const MAdicForm& form, const std::vector<double>& x);
double evaluate(const NumericMAdicForm& form, const std::vector<double>& x);

struct PowerEvaluation {
    double value = 0.0;         // real part of Σ μ_ℓ p(λ_ℓ)^m
    double imag_residue = 0.0;
    double scale = 0.0;         // Σ μ_ℓ |p(λ_ℓ)|^m, the conditioning scale
};

/* Evaluates through the roots instead of the collected coefficients.
 * Throws NumericError when the imaginary residue exceeds
 * imag_tol·(1+scale). */
PowerEvaluation evaluate_via_powers(const RootSpectrum& spectrum, const std::vector<double>& x,
                                    int m, double imag_tol = 1e-8);

/* Max over terms of |exact - numeric| / (1 + magnitude); magnitude
 * falls back to the larger coefficient when the numeric form carries no
 * scale for a term. */
double compare_forms(const MAdicForm& exact, const NumericMAdicForm& numeric);

Rat max_abs_coeff(const MAdicForm& form);
MAdicForm scale_form(const MAdicForm& form, const Rat& factor);

/* Canonical text: descending lexicographic exponents (powers of x1
 * first), explicit signs, e.g. "2x1^3 - 3x1^2x2 - 3x1x2^2 + 2x2^3". */
std::string form_to_text(const MAdicForm& form);

/* JSON schema:
 *   {"nvars": n, "degree": m, "coefficient_field": "rational"|"double",
 *    "terms": [{"exponents": [...], "coeff": "a/b"|number}, ...]}
 * terms sorted lexicographically by exponents. */
std::string form_to_json(const MAdicForm& form, int indent = -1);
std::string form_to_json(const NumericMAdicForm& form, int indent = -1);
std::variant<MAdicForm, NumericMAdicForm> form_from_json(const std::string& text);

} // namespace realroot

#endif
