#include "realroot/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "realroot/errors.hpp"
#include "realroot/psd.hpp"
#include "realroot/rng.hpp"
#include "realroot/sturm.hpp"
#include "realroot/witness.hpp"

namespace realroot {

Polynomial poly_from_integer_roots(const std::vector<long>& roots)
{
    Polynomial acc(std::vector<Rat>{Rat(1)});
    for (long a : roots)
        acc = acc * Polynomial(std::vector<Rat>{Rat(-a), Rat(1)});
    return acc;
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start)
{
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

long draw_int(std::mt19937_64& rng, long lo, long hi)
{
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

Polynomial uniform_poly(std::mt19937_64& rng, int degree, long lo, long hi)
{
    std::vector<Rat> coeffs(static_cast<std::size_t>(degree) + 1);
    for (int i = 0; i <= degree; ++i)
        coeffs[i] = Rat(draw_int(rng, lo, hi));
    while (coeffs.back() == 0)
        coeffs.back() = Rat(draw_int(rng, lo, hi));
    return Polynomial(std::move(coeffs));
}

Polynomial forced_real_poly(std::mt19937_64& rng, int degree, long lo, long hi,
                            double squared_rate)
{
    std::vector<long> roots;
    const bool square_one =
        degree >= 2 && std::uniform_real_distribution<double>(0.0, 1.0)(rng) < squared_rate;
    const int distinct_draws = square_one ? degree - 1 : degree;
    for (int i = 0; i < distinct_draws; ++i)
        roots.push_back(draw_int(rng, lo, hi));
    if (square_one)
        roots.push_back(roots[static_cast<std::size_t>(
            draw_int(rng, 0, static_cast<long>(roots.size()) - 1))]);
    return poly_from_integer_roots(roots);
}

Polynomial forced_nonreal_poly(std::mt19937_64& rng, int degree, long lo, long hi)
{
    // irreducible factor t^2 + b t + c needs b^2 < 4c
    long b = 0, c = 0;
    for (int attempt = 0;; ++attempt) {
        b = draw_int(rng, lo, hi);
        c = draw_int(rng, std::max(lo, 1L), hi);
        if (b * b < 4 * c)
            break;
        if (attempt > 1000)
            throw std::invalid_argument(
                "coefficient range admits no irreducible quadratic factor");
    }
    Polynomial quadratic(std::vector<Rat>{Rat(c), Rat(b), Rat(1)});
    if (degree <= 2)
        return quadratic;
    return quadratic * uniform_poly(rng, degree - 2, lo, hi);
}

} // namespace

std::vector<Polynomial> generate_corpus(const CorpusSpec& spec)
{
    if (spec.count < 1)
        throw std::invalid_argument("corpus count must be >= 1");
    if (spec.degree_lo < 1 || spec.degree_hi < spec.degree_lo)
        throw std::invalid_argument("empty degree range");
    if (spec.coeff_hi < spec.coeff_lo)
        throw std::invalid_argument("empty coefficient range");
    if (spec.frac_forced_real < 0 || spec.frac_forced_nonreal < 0 ||
        spec.frac_forced_real + spec.frac_forced_nonreal > 1.0)
        throw std::invalid_argument("forced fractions must be in [0,1] and sum to at most 1");
    if (spec.coeff_lo == 0 && spec.coeff_hi == 0)
        throw std::invalid_argument("coefficient range {0} cannot produce nonzero polynomials");

    std::vector<Polynomial> corpus;
    corpus.reserve(spec.count);
    for (int index = 0; index < spec.count; ++index) {
        std::mt19937_64 rng(derive_seed(spec.seed, static_cast<std::uint64_t>(index)));
        const double pick = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
        int degree = static_cast<int>(draw_int(rng, spec.degree_lo, spec.degree_hi));
        if (pick < spec.frac_forced_real) {
            corpus.push_back(forced_real_poly(rng, degree, spec.coeff_lo, spec.coeff_hi,
                                              spec.squared_factor_rate));
        } else if (pick < spec.frac_forced_real + spec.frac_forced_nonreal &&
                   spec.degree_hi >= 2 && spec.coeff_hi >= 1) {
            degree = std::max(degree, 2); // an irreducible quadratic needs room
            corpus.push_back(forced_nonreal_poly(rng, degree, spec.coeff_lo, spec.coeff_hi));
        } else {
            corpus.push_back(uniform_poly(rng, degree, spec.coeff_lo, spec.coeff_hi));
        }
    }
    return corpus;
}

ConsistencyReport run_consistency(const std::vector<Polynomial>& corpus,
                                  const ConsistencyOptions& options)
{
    for (int m : options.m_list)
        if (m < 2 || m % 2 != 0)
            throw std::invalid_argument("consistency m_list entries must be even and >= 2");

    std::map<int, DegreeReport> by_degree;
    ConsistencyReport report;
    report.min_sphere_value = std::numeric_limits<double>::infinity();

    WitnessOptions witness_options;
    witness_options.verify_tol = options.witness_tol;
    witness_options.cert_tol = options.cert_tol;

    std::uint64_t trial = 0;
    for (const Polynomial& f : corpus) {
        ++trial;
        DegreeReport& row = by_degree[f.degree()];
        row.degree = f.degree();
        row.count += 1;
        report.total_count += 1;

        auto t0 = Clock::now();
        const bool hermite_real = classify_real_rooted(f);
        row.wall_ms_hermite += ms_since(t0);

        t0 = Clock::now();
        const SturmCount sturm = sturm_real_root_count(f);
        row.wall_ms_sturm += ms_since(t0);

        if (hermite_real != sturm.real_rooted()) {
            row.mismatches += 1;
            report.total_mismatches += 1;
            report.failure_notes.push_back("decision mismatch on " + f.to_string());
        }
        if (hermite_real) {
            row.n_real_rooted += 1;
            report.total_real_rooted += 1;
        }

        if (options.m_list.empty())
            continue;

        t0 = Clock::now();
        RootSpectrum spectrum;
        try {
            spectrum = numeric_roots(f, witness_options.roots);
        } catch (const NumericError& e) {
            row.wall_ms_witness += ms_since(t0);
            report.failure_notes.push_back("root finding failed on " + f.to_string() + ": " +
                                           e.what());
            if (hermite_real)
                report.cert_failures += 1;
            else
                report.witness_failures += 1;
            continue;
        }

        if (!hermite_real) {
            for (int m : options.m_list) {
                try {
                    const NegativeWitness w = negative_witness(f, spectrum, m, witness_options);
                    row.max_witness_residual = std::max(row.max_witness_residual, w.residual);
                    report.max_witness_residual =
                        std::max(report.max_witness_residual, w.residual);
                } catch (const std::exception& e) {
                    report.witness_failures += 1;
                    report.failure_notes.push_back("witness (m=" + std::to_string(m) + ") on " +
                                                   f.to_string() + ": " + e.what());
                }
            }
            row.wall_ms_witness += ms_since(t0);
        } else {
            row.wall_ms_witness += ms_since(t0);
            for (int m : options.m_list) {
                try {
                    const PsdCertificate cert = psd_certificate(f, spectrum, m, witness_options);
                    const VerifyReport check = verify_certificate(f, cert, options.cert_tol);
                    row.max_cert_residual = std::max(row.max_cert_residual, check.residual);
                    report.max_cert_residual = std::max(report.max_cert_residual, check.residual);
                    if (!check.pass) {
                        report.cert_failures += 1;
                        report.failure_notes.push_back("certificate (m=" + std::to_string(m) +
                                                       ") on " + f.to_string() + ": " +
                                                       check.detail);
                    }
                } catch (const std::exception& e) {
                    report.cert_failures += 1;
                    report.failure_notes.push_back("certificate (m=" + std::to_string(m) +
                                                   ") on " + f.to_string() + ": " + e.what());
                }

                // sphere sanity check on the normalized form: evidence,
                // not proof, but a negative value here is a hard bug
                MAdicForm form = build_form_exact(f, m);
                const Rat top = max_abs_coeff(form);
                if (top != 0)
                    form = scale_form(form, Rat(1) / top);
                SphereSearchOptions sphere;
                sphere.restarts = options.sphere_restarts;
                sphere.steps = options.sphere_steps;
                sphere.seed = derive_seed(options.seed, trial * 64 + static_cast<std::uint64_t>(m));
                const SphereMinimum minimum = estimate_min_on_sphere(form, sphere);
                report.min_sphere_value = std::min(report.min_sphere_value, minimum.min_value);
                if (minimum.min_value < -options.sphere_tol) {
                    report.sphere_violations += 1;
                    report.failure_notes.push_back(
                        "sphere minimum " + std::to_string(minimum.min_value) + " below -" +
                        std::to_string(options.sphere_tol) + " (m=" + std::to_string(m) +
                        ") on " + f.to_string());
                }
            }
        }
    }

    if (report.min_sphere_value == std::numeric_limits<double>::infinity())
        report.min_sphere_value = 0.0;
    for (auto& [degree, row] : by_degree)
        report.per_degree.push_back(row);
    return report;
}

namespace {

std::string format_double(double v, bool zeroed)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3e", zeroed ? 0.0 : v);
    return buf;
}

} // namespace

std::string ConsistencyReport::to_csv(bool with_timings) const
{
    std::ostringstream os;
    os << "degree,n_real_rooted,mismatches,max_witness_residual,max_cert_residual,"
          "wall_ms_hermite,wall_ms_sturm,wall_ms_witness\n";
    for (const DegreeReport& row : per_degree) {
        os << row.degree << ',' << row.n_real_rooted << ',' << row.mismatches << ','
           << format_double(row.max_witness_residual, false) << ','
           << format_double(row.max_cert_residual, false) << ','
           << format_double(row.wall_ms_hermite, !with_timings) << ','
           << format_double(row.wall_ms_sturm, !with_timings) << ','
           << format_double(row.wall_ms_witness, !with_timings) << '\n';
    }
    return os.str();
}

std::string ConsistencyReport::to_text(bool with_timings) const
{
    std::ostringstream os;
    char buf[256];
    std::snprintf(buf, sizeof(buf), "%6s %6s %6s %10s %12s %12s %10s %10s %10s\n", "degree",
                  "count", "real", "mismatch", "wit_resid", "cert_resid", "ms_herm", "ms_sturm",
                  "ms_wit");
    os << buf;
    for (const DegreeReport& row : per_degree) {
        std::snprintf(buf, sizeof(buf), "%6d %6d %6d %10d %12.3e %12.3e %10.2f %10.2f %10.2f\n",
                      row.degree, row.count, row.n_real_rooted, row.mismatches,
                      row.max_witness_residual, row.max_cert_residual,
                      with_timings ? row.wall_ms_hermite : 0.0,
                      with_timings ? row.wall_ms_sturm : 0.0,
                      with_timings ? row.wall_ms_witness : 0.0);
        os << buf;
    }
    std::snprintf(buf, sizeof(buf),
                  "total: %d polynomials, %d real-rooted, %d mismatches, "
                  "max witness residual %.3e, max certificate residual %.3e, "
                  "min sphere value %.3e\n",
                  total_count, total_real_rooted, total_mismatches, max_witness_residual,
                  max_cert_residual, min_sphere_value);
    os << buf;
    if (witness_failures || cert_failures || sphere_violations) {
        std::snprintf(buf, sizeof(buf),
                      "FAILURES: %d witness, %d certificate, %d sphere violations\n",
                      witness_failures, cert_failures, sphere_violations);
        os << buf;
    }
    return os.str();
}

} // namespace realroot
