#ifndef REALROOT_WITNESS_HPP
#define REALROOT_WITNESS_HPP

#include <complex>
#include <string>
#include <variant>
#include <vector>

#include "realroot/forms.hpp"
#include "realroot/polynomial.hpp"
#include "realroot/root_finder.hpp"

namespace realroot {

/* A vector x* with Φ_m(x*) < 0 for even m, refuting positive
 * semidefiniteness. The construction targets Φ_m(x*) = -2μ, with μ the
 * multiplicity of the selected conjugate pair. */
struct NegativeWitness {
    int m = 0;
    std::vector<double> x;
    double claimed_value = 0.0; // exact evaluation of Φ_m at x, ≈ -2μ
    int mu = 0;
    double residual = 0.0;      // |claimed_value + 2μ|
};

/* Sum-of-even-powers decomposition Φ_m = Σ_ℓ weight_ℓ · (row_ℓ·x)^m
 * with real rows (the Vandermonde vectors of the real roots); a proof
 * of positive semidefiniteness for even m. */
struct PsdCertificate {
    struct Row {
        int weight = 0;
        std::vector<double> coeffs;
    };
    int m = 0;
    std::vector<Row> rows;
};

using Certificate = std::variant<NegativeWitness, PsdCertificate>;

struct WitnessOptions {
    double verify_tol = 1e-6;  // |Φ_m(x*) + 2μ| ≤ verify_tol·(1+2μ)
    double interp_tol = 1e-8;  // interpolation residuals and imaginary parts
    double cert_tol = 1e-8;    // coefficientwise re-expansion tolerance
    RootFinderOptions roots;
};

/* The non-real entry with the largest imaginary part (ties broken by
 * smallest real part); throws CertificateUnavailable when every root is
 * real. */
const RootSpectrum::Entry& principal_nonreal_root(const RootSpectrum& spectrum);

/* Real-coefficient p of degree ≤ r-1 with p(λ1) = ω, p(conj λ1) =
 * conj ω and p = 0 at the remaining distinct roots, built by solving
 * the r×r Vandermonde system in complex double with partial pivoting.
 * Imaginary parts of the coefficients must fall below tol and are then
 * zeroed. */
Polynomial interpolate_witness_poly(const RootSpectrum& spectrum, std::complex<double> omega,
                                    double tol = 1e-8);

/* ω = e^{iπ/m} interpolation; witness vector is p's coefficient list
 * zero-padded to n. Verification against the exact form is mandatory
 * and fail-closed. Requires even m ≥ 2 and a non-real root (decided
 * exactly, not numerically). */
NegativeWitness negative_witness(const Polynomial& f, int m, const WitnessOptions& options = {});
NegativeWitness negative_witness(const Polynomial& f, const RootSpectrum& spectrum, int m,
                                 const WitnessOptions& options = {});

/* Rows (μ_ℓ, (1, λ_ℓ, …, λ_ℓ^{n-1})) over the distinct real roots;
 * re-expansion is compared against the exact form before the
 * certificate is returned. Requires even m ≥ 2 and a real-rooted
 * input. */
PsdCertificate psd_certificate(const Polynomial& f, int m, const WitnessOptions& options = {});
PsdCertificate psd_certificate(const Polynomial& f, const RootSpectrum& spectrum, int m,
                               const WitnessOptions& options = {});

struct VerifyReport {
    bool pass = false;
    double residual = 0.0;
    std::string detail;
};

/* Witness check: Φ_m rebuilt from the coefficients, evaluated exactly
 * at x (doubles are exact rationals); passes iff the value is negative
 * and within tol·(1+2μ) of -2μ. Never throws; failures are reported. */
VerifyReport verify_certificate(const Polynomial& f, const NegativeWitness& witness,
                                double tol = 1e-6);

/* Decomposition check: Σ weight·(row·x)^m re-expanded and compared
 * coefficientwise (scale-aware) against the exact form. */
VerifyReport verify_certificate(const Polynomial& f, const PsdCertificate& cert,
                                double tol = 1e-8);

VerifyReport verify_certificate(const Polynomial& f, const Certificate& cert,
                                double witness_tol = 1e-6, double cert_tol = 1e-8);

std::string certificate_to_json(const NegativeWitness& witness, int indent = -1);
std::string certificate_to_json(const PsdCertificate& cert, int indent = -1);
std::string certificate_to_json(const Certificate& cert, int indent = -1);
Certificate certificate_from_json(const std::string& text);

} // namespace realroot

#endif
