#include <doctest.h>

#include "realroot/harness.hpp"
#include "realroot/psd.hpp"
#include "realroot/sturm.hpp"
#include "realroot/witness.hpp"

using namespace realroot;

TEST_CASE("expanding integer roots")
{
    CHECK(poly_from_integer_roots({1, 2, 3}) == parse_polynomial("-6,11,-6,1"));
    CHECK(poly_from_integer_roots({}) == Polynomial({Rat(1)}));
}

TEST_CASE("corpus generation is deterministic and validated")
{
    CorpusSpec spec;
    spec.count = 30;
    spec.seed = 123;
    const auto a = generate_corpus(spec);
    const auto b = generate_corpus(spec);
    REQUIRE(a.size() == 30);
    for (std::size_t i = 0; i < a.size(); ++i)
        CHECK(a[i] == b[i]);

    spec.seed = 124;
    const auto c = generate_corpus(spec);
    bool any_different = false;
    for (std::size_t i = 0; i < a.size(); ++i)
        any_different = any_different || !(a[i] == c[i]);
    CHECK(any_different);

    CorpusSpec bad = spec;
    bad.count = 0;
    CHECK_THROWS_AS(generate_corpus(bad), std::invalid_argument);
    bad = spec;
    bad.degree_hi = 0;
    CHECK_THROWS_AS(generate_corpus(bad), std::invalid_argument);
    bad = spec;
    bad.coeff_lo = 5;
    bad.coeff_hi = 4;
    CHECK_THROWS_AS(generate_corpus(bad), std::invalid_argument);
}

TEST_CASE("forced fractions drive the classification mix")
{
    CorpusSpec spec;
    spec.count = 80;
    spec.seed = 7;
    spec.degree_lo = 2;
    spec.degree_hi = 6;

    spec.frac_forced_real = 1.0;
    spec.frac_forced_nonreal = 0.0;
    for (const Polynomial& f : generate_corpus(spec))
        CHECK(classify_real_rooted(f));

    spec.frac_forced_real = 0.0;
    spec.frac_forced_nonreal = 1.0;
    for (const Polynomial& f : generate_corpus(spec))
        CHECK(!classify_real_rooted(f));
}

TEST_CASE("consistency run over the two staple quadratics")
{
    const std::vector<Polynomial> corpus{parse_polynomial("-1,0,1"), parse_polynomial("1,1,1")};
    ConsistencyOptions options;
    options.m_list = {2, 4, 6};
    const ConsistencyReport report = run_consistency(corpus, options);
    CHECK(report.total_count == 2);
    CHECK(report.total_real_rooted == 1);
    CHECK(report.total_mismatches == 0);
    CHECK(report.clean());
    CHECK(report.max_witness_residual <= 1e-6 * 3);
    CHECK(report.max_cert_residual <= 1e-8);
    CHECK(report.min_sphere_value >= -1e-7);
}

TEST_CASE("empty m_list runs the oracle comparison only")
{
    CorpusSpec spec;
    spec.count = 25;
    spec.seed = 99;
    ConsistencyOptions options;
    options.m_list = {};
    const ConsistencyReport report = run_consistency(generate_corpus(spec), options);
    CHECK(report.total_count == 25);
    CHECK(report.total_mismatches == 0);
    CHECK(report.max_witness_residual == 0.0);
    CHECK(report.max_cert_residual == 0.0);
}

TEST_CASE("doubled conjugate pair shows up as a -4 witness in the pipeline")
{
    const std::vector<Polynomial> corpus{parse_polynomial("1,0,2,0,1")}; // (t^2+1)^2
    ConsistencyOptions options;
    options.m_list = {2};
    const ConsistencyReport report = run_consistency(corpus, options);
    CHECK(report.clean());
    const NegativeWitness w = negative_witness(corpus[0], 2);
    CHECK(w.claimed_value == doctest::Approx(-4.0).epsilon(1e-8));
}

TEST_CASE("odd m is rejected in the consistency options")
{
    ConsistencyOptions options;
    options.m_list = {2, 3};
    CHECK_THROWS_AS(run_consistency({parse_polynomial("1,1,1")}, options),
                    std::invalid_argument);
}

TEST_CASE("CSV report carries the fixed column set")
{
    CorpusSpec spec;
    spec.count = 12;
    spec.seed = 3;
    ConsistencyOptions options;
    options.m_list = {2};
    const ConsistencyReport report = run_consistency(generate_corpus(spec), options);
    const std::string csv = report.to_csv(false);
    CHECK(csv.rfind("degree,n_real_rooted,mismatches,max_witness_residual,max_cert_residual,"
                    "wall_ms_hermite,wall_ms_sturm,wall_ms_witness\n",
                    0) == 0);
    // timings zeroed on request, for byte-reproducible output
    CHECK(csv.find("0.000e+00,0.000e+00,0.000e+00") != std::string::npos);
    CHECK(report.to_csv(false) == report.to_csv(false));
}
