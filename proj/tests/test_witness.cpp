#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "realroot/errors.hpp"
#include "realroot/harness.hpp"
#include "realroot/psd.hpp"
#include "realroot/witness.hpp"

using namespace realroot;

TEST_CASE("interpolation hits omega = i on t^2+t+1")
{
    const RootSpectrum spectrum = numeric_roots(parse_polynomial("1,1,1"));
    const Polynomial p = interpolate_witness_poly(spectrum, {0.0, 1.0});
    REQUIRE(p.degree() == 1);
    // derived by solving x1 + x2 λ1 = i with λ1 = -1/2 + i√3/2
    CHECK(rat_to_double(p.coeff(0)) == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-12));
    CHECK(rat_to_double(p.coeff(1)) == doctest::Approx(2.0 / std::sqrt(3.0)).epsilon(1e-12));

    const std::complex<double> lambda1(-0.5, std::sqrt(3.0) / 2.0);
    CHECK(std::abs(p.eval(lambda1) - std::complex<double>(0.0, 1.0)) < 1e-10);
    CHECK(std::abs(p.eval(std::conj(lambda1)) - std::complex<double>(0.0, -1.0)) < 1e-10);
}

TEST_CASE("interpolation with omega = 0 returns the zero polynomial")
{
    const RootSpectrum spectrum = numeric_roots(parse_polynomial("1,1,1"));
    const Polynomial p = interpolate_witness_poly(spectrum, {0.0, 0.0});
    CHECK(p.is_zero());
}

TEST_CASE("interpolation across three nodes: (t^2+1)(t-1)")
{
    const RootSpectrum spectrum = numeric_roots(parse_polynomial("-1,1,-1,1"));
    const Polynomial p = interpolate_witness_poly(spectrum, {0.0, 1.0});
    REQUIRE(p.degree() <= 2);
    // derived by solving the 3x3 system: p(t) = -1/2 + t - t^2/2
    CHECK(rat_to_double(p.coeff(0)) == doctest::Approx(-0.5).epsilon(1e-10));
    CHECK(rat_to_double(p.coeff(1)) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(rat_to_double(p.coeff(2)) == doctest::Approx(-0.5).epsilon(1e-10));
    CHECK(std::abs(p.eval(std::complex<double>(0.0, 1.0)) - std::complex<double>(0.0, 1.0)) < 1e-10);
    CHECK(std::abs(p.eval(std::complex<double>(0.0, -1.0)) - std::complex<double>(0.0, -1.0)) < 1e-10);
    CHECK(std::abs(p.eval(std::complex<double>(1.0, 0.0))) < 1e-10);
}

TEST_CASE("interpolation demands a non-real root")
{
    const RootSpectrum spectrum = numeric_roots(parse_polynomial("-1,0,1"));
    CHECK_THROWS_AS(interpolate_witness_poly(spectrum, {0.0, 1.0}), CertificateUnavailable);
}

TEST_CASE("negative witness: value -2 for t^2+t+1")
{
    for (int m : {2, 4}) {
        const NegativeWitness w = negative_witness(parse_polynomial("1,1,1"), m);
        CHECK(w.m == m);
        CHECK(w.mu == 1);
        CHECK(w.claimed_value == doctest::Approx(-2.0).epsilon(1e-8));
        CHECK(w.residual <= 1e-8);
        CHECK(static_cast<int>(w.x.size()) == 2);
    }
}

TEST_CASE("negative witness: doubled conjugate pair gives -4")
{
    const NegativeWitness w = negative_witness(parse_polynomial("1,0,2,0,1"), 2); // (t^2+1)^2
    CHECK(w.mu == 2);
    CHECK(w.claimed_value == doctest::Approx(-4.0).epsilon(1e-8));
    CHECK(static_cast<int>(w.x.size()) == 4);
}

TEST_CASE("negative witness refuses real-rooted input and odd m")
{
    CHECK_THROWS_AS(negative_witness(parse_polynomial("-1,0,1"), 2), CertificateUnavailable);
    CHECK_THROWS_AS(negative_witness(parse_polynomial("1,1,1"), 3), std::invalid_argument);
    CHECK_THROWS_AS(negative_witness(parse_polynomial("1,1,1"), 0), std::invalid_argument);
}

TEST_CASE("sum-of-powers certificate for t^2-1 at m=2")
{
    // oracle: 2x1^2 + 2x2^2 = (x1+x2)^2 + (x1-x2)^2
    const PsdCertificate cert = psd_certificate(parse_polynomial("-1,0,1"), 2);
    REQUIRE(cert.rows.size() == 2);
    CHECK(cert.rows[0].weight == 1);
    CHECK(cert.rows[1].weight == 1);
    CHECK(cert.rows[0].coeffs[0] == doctest::Approx(1.0));
    CHECK(cert.rows[0].coeffs[1] == doctest::Approx(-1.0));
    CHECK(cert.rows[1].coeffs[1] == doctest::Approx(1.0));
    CHECK(verify_certificate(parse_polynomial("-1,0,1"), cert).pass);
}

TEST_CASE("single repeated root: one row of weight two")
{
    const PsdCertificate cert = psd_certificate(parse_polynomial("1,-2,1"), 4); // (t-1)^2
    REQUIRE(cert.rows.size() == 1);
    CHECK(cert.rows[0].weight == 2);
    CHECK(cert.rows[0].coeffs[0] == doctest::Approx(1.0));
    CHECK(cert.rows[0].coeffs[1] == doctest::Approx(1.0));
}

TEST_CASE("degree one: the certificate is x1^m itself")
{
    const PsdCertificate cert = psd_certificate(parse_polynomial("-5,1"), 2);
    REQUIRE(cert.rows.size() == 1);
    CHECK(cert.rows[0].weight == 1);
    REQUIRE(cert.rows[0].coeffs.size() == 1);
    CHECK(cert.rows[0].coeffs[0] == doctest::Approx(1.0));
}

TEST_CASE("certificate refuses non-real-rooted input")
{
    CHECK_THROWS_AS(psd_certificate(parse_polynomial("1,1,1"), 2), CertificateUnavailable);
}

TEST_CASE("verification rejects a fabricated witness")
{
    NegativeWitness fake;
    fake.m = 2;
    fake.x = {1.0, 0.0};
    fake.mu = 1;
    const VerifyReport report = verify_certificate(parse_polynomial("-1,0,1"), fake);
    CHECK(!report.pass); // the form value there is 2, not negative
}

TEST_CASE("verification rejects a corrupted decomposition")
{
    PsdCertificate cert = psd_certificate(parse_polynomial("-1,0,1"), 2);
    cert.rows[0].coeffs[1] += 0.25;
    CHECK(!verify_certificate(parse_polynomial("-1,0,1"), cert).pass);
    // wrong dimension is reported, not thrown
    cert.rows[0].coeffs.pop_back();
    CHECK(!verify_certificate(parse_polynomial("-1,0,1"), cert).pass);
}

TEST_CASE("end-to-end verification of generated certificates")
{
    const Polynomial bad = parse_polynomial("1,1,1");
    const NegativeWitness w = negative_witness(bad, 2);
    const VerifyReport report = verify_certificate(bad, w);
    CHECK(report.pass);
    CHECK(report.residual < 1e-10);

    const Polynomial good = parse_polynomial("-1,0,1");
    const PsdCertificate cert = psd_certificate(good, 2);
    CHECK(verify_certificate(good, cert).pass);
}

TEST_CASE("witness value law across a corpus, all even m")
{
    CorpusSpec spec;
    spec.count = 70;
    spec.degree_lo = 2;
    spec.degree_hi = 8;
    spec.seed = 0x9e77ULL;
    int nonreal_seen = 0;
    for (const Polynomial& f : generate_corpus(spec)) {
        if (classify_real_rooted(f))
            continue;
        ++nonreal_seen;
        const RootSpectrum spectrum = numeric_roots(f);
        for (int m : {2, 4, 6, 8}) {
            const NegativeWitness w = negative_witness(f, spectrum, m);
            CHECK(w.residual <= 1e-6 * (1.0 + 2.0 * w.mu));
            CHECK(w.claimed_value < 0.0);
        }
    }
    CHECK(nonreal_seen >= 20);
}

TEST_CASE("certificate completeness: exactly one direction succeeds")
{
    CorpusSpec spec;
    spec.count = 60;
    spec.degree_lo = 1;
    spec.degree_hi = 6;
    spec.seed = 0xd1c40ULL;
    for (const Polynomial& f : generate_corpus(spec)) {
        const bool real_rooted = classify_real_rooted(f);
        const RootSpectrum spectrum = numeric_roots(f);
        bool witness_ok = true, cert_ok = true;
        try {
            negative_witness(f, spectrum, 2);
        } catch (const CertificateUnavailable&) {
            witness_ok = false;
        }
        try {
            psd_certificate(f, spectrum, 2);
        } catch (const CertificateUnavailable&) {
            cert_ok = false;
        }
        CHECK(witness_ok != cert_ok);
        CHECK(cert_ok == real_rooted);
    }
}

TEST_CASE("interpolant degree stays below the distinct-root count")
{
    CorpusSpec spec;
    spec.count = 40;
    spec.degree_lo = 2;
    spec.degree_hi = 7;
    spec.seed = 0xdeb7ULL;
    for (const Polynomial& f : generate_corpus(spec)) {
        if (classify_real_rooted(f))
            continue;
        const RootSpectrum spectrum = numeric_roots(f);
        const int r = static_cast<int>(spectrum.distinct_roots.size());
        for (int m : {2, 6}) {
            const Polynomial p =
                interpolate_witness_poly(spectrum, std::polar(1.0, M_PI / m));
            CHECK(p.degree() <= r - 1);
            CHECK(p.degree() <= f.degree() - 1);
        }
    }
}

TEST_CASE("odd-degree forms flip sign with the argument")
{
    CorpusSpec spec;
    spec.count = 15;
    spec.degree_lo = 2;
    spec.degree_hi = 5;
    spec.seed = 0x0ddULL;
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> pick(-7, 7);
    for (const Polynomial& f : generate_corpus(spec)) {
        for (int m : {1, 3, 5}) {
            const MAdicForm form = build_form_exact(f, m);
            for (int trial = 0; trial < 10; ++trial) {
                std::vector<Rat> x(f.degree());
                std::vector<Rat> neg(f.degree());
                for (int j = 0; j < f.degree(); ++j) {
                    x[j] = Rat(pick(rng), 1 + std::abs(pick(rng)));
                    neg[j] = -x[j];
                }
                CHECK(evaluate(form, neg) == -evaluate(form, x));
            }
        }
    }
}

TEST_CASE("certificate JSON round trip")
{
    const NegativeWitness w = negative_witness(parse_polynomial("1,1,1"), 4);
    const Certificate back = certificate_from_json(certificate_to_json(w));
    REQUIRE(std::holds_alternative<NegativeWitness>(back));
    const NegativeWitness& w2 = std::get<NegativeWitness>(back);
    CHECK(w2.m == w.m);
    CHECK(w2.mu == w.mu);
    CHECK(w2.x == w.x);
    CHECK(w2.claimed_value == w.claimed_value);
    CHECK(verify_certificate(parse_polynomial("1,1,1"), back).pass);

    const PsdCertificate cert = psd_certificate(parse_polynomial("-6,11,-6,1"), 2);
    const Certificate back2 = certificate_from_json(certificate_to_json(cert));
    REQUIRE(std::holds_alternative<PsdCertificate>(back2));
    CHECK(verify_certificate(parse_polynomial("-6,11,-6,1"), back2).pass);

    CHECK_THROWS_AS(certificate_from_json("{}"), ParseError);
    CHECK_THROWS_AS(certificate_from_json(R"({"kind":"mystery","m":2})"), ParseError);
}
