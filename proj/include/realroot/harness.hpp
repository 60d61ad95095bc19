#ifndef REALROOT_HARNESS_HPP
#define REALROOT_HARNESS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "realroot/polynomial.hpp"

namespace realroot {

/* Seeded random corpus: a mix of entries forced real-rooted (products
 * of integer linear factors, a slice of them with one squared factor),
 * entries forced non-real (an irreducible integer quadratic times a
 * random cofactor), and uniform integer-coefficient draws. */
struct CorpusSpec {
    int count = 100;
    int degree_lo = 2;
    int degree_hi = 6;
    int coeff_lo = -9;
    int coeff_hi = 9;
    std::uint64_t seed = 0;
    double frac_forced_real = 0.4;
    double frac_forced_nonreal = 0.4; // remainder drawn uniformly
    double squared_factor_rate = 0.1; // applies to forced-real entries
};

std::vector<Polynomial> generate_corpus(const CorpusSpec& spec);

/* Π (t - a_i), exact. */
Polynomial poly_from_integer_roots(const std::vector<long>& roots);

struct ConsistencyOptions {
    std::vector<int> m_list = {2, 4, 6, 8}; // all entries must be even
    double witness_tol = 1e-6;
    double cert_tol = 1e-8;
    double sphere_tol = 1e-7;
    int sphere_restarts = 4;  // corpus-scale effort; the sphere search
    int sphere_steps = 80;    // itself defaults higher for single calls
    std::uint64_t seed = 1;
    bool collect_timings = true;
};

struct DegreeReport {
    int degree = 0;
    int count = 0;
    int n_real_rooted = 0;
    int mismatches = 0;
    double max_witness_residual = 0.0;
    double max_cert_residual = 0.0;
    double wall_ms_hermite = 0.0;
    double wall_ms_sturm = 0.0;
    double wall_ms_witness = 0.0;
};

struct ConsistencyReport {
    std::vector<DegreeReport> per_degree; // ascending degree
    int total_count = 0;
    int total_real_rooted = 0;
    int total_mismatches = 0;
    double max_witness_residual = 0.0;
    double max_cert_residual = 0.0;
    double min_sphere_value = 0.0; // over normalized forms
    int witness_failures = 0;
    int cert_failures = 0;
    int sphere_violations = 0;
    std::vector<std::string> failure_notes;

    bool clean() const
    {
        return total_mismatches == 0 && witness_failures == 0 && cert_failures == 0 &&
               sphere_violations == 0;
    }

    /* columns: degree,n_real_rooted,mismatches,max_witness_residual,
     * max_cert_residual,wall_ms_hermite,wall_ms_sturm,wall_ms_witness */
    std::string to_csv(bool with_timings = true) const;
    std::string to_text(bool with_timings = true) const;
};

/* For every corpus member: the exact Hermite decision against the
 * Sturm oracle (must agree); for non-real-rooted entries a verified
 * negative witness per m; for real-rooted entries a verified
 * sum-of-powers certificate per m plus a sphere-minimum sanity check on
 * the max-coefficient-normalized form. */
ConsistencyReport run_consistency(const std::vector<Polynomial>& corpus,
                                  const ConsistencyOptions& options = {});

} // namespace realroot

#endif
