#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "realroot/harness.hpp"
#include "realroot/psd.hpp"
#include "realroot/sturm.hpp"

using namespace realroot;

namespace {

HermiteMatrix matrix_of(int n, std::vector<long> entries)
{
    HermiteMatrix H;
    H.n = n;
    for (long e : entries)
        H.entries.emplace_back(e);
    return H;
}

/* Oracle: determinant by cofactor expansion, then every principal
 * minor checked nonnegative. Exact and independent of the
 * characteristic-polynomial route. */
Rat det_cofactor(const std::vector<Rat>& a, int n)
{
    if (n == 1)
        return a[0];
    Rat acc = 0;
    for (int col = 0; col < n; ++col) {
        if (a[col] == 0)
            continue;
        std::vector<Rat> sub;
        sub.reserve(static_cast<std::size_t>(n - 1) * (n - 1));
        for (int i = 1; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (j != col)
                    sub.push_back(a[static_cast<std::size_t>(i) * n + j]);
        Rat term = a[col] * det_cofactor(sub, n - 1);
        acc += (col % 2 == 0) ? term : -term;
    }
    return acc;
}

bool psd_by_minors(const HermiteMatrix& H)
{
    const int n = H.n;
    for (int mask = 1; mask < (1 << n); ++mask) {
        std::vector<int> idx;
        for (int i = 0; i < n; ++i)
            if (mask & (1 << i))
                idx.push_back(i);
        const int k = static_cast<int>(idx.size());
        std::vector<Rat> sub(static_cast<std::size_t>(k) * k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                sub[static_cast<std::size_t>(i) * k + j] = H.at(idx[i], idx[j]);
        if (det_cofactor(sub, k) < 0)
            return false;
    }
    return true;
}

} // namespace

TEST_CASE("Hermite matrices of the staples")
{
    const HermiteMatrix a = hermite_matrix(parse_polynomial("-1,0,1"));
    REQUIRE(a.n == 2);
    CHECK(a.at(0, 0) == 2);
    CHECK(a.at(0, 1) == 0);
    CHECK(a.at(1, 0) == 0);
    CHECK(a.at(1, 1) == 2);

    const HermiteMatrix b = hermite_matrix(parse_polynomial("1,1,1"));
    CHECK(b.at(0, 0) == 2);
    CHECK(b.at(0, 1) == -1);
    CHECK(b.at(1, 1) == -1);

    const HermiteMatrix c = hermite_matrix(parse_polynomial("-5,1"));
    REQUIRE(c.n == 1);
    CHECK(c.at(0, 0) == 1);
}

TEST_CASE("Hankel structure and symmetry hold for random inputs")
{
    CorpusSpec spec;
    spec.count = 20;
    spec.degree_lo = 2;
    spec.degree_hi = 8;
    spec.seed = 21;
    for (const Polynomial& f : generate_corpus(spec)) {
        const HermiteMatrix H = hermite_matrix(f);
        CHECK(H.at(0, 0) == f.degree());
        for (int i = 0; i < H.n; ++i)
            for (int j = 0; j < H.n; ++j) {
                CHECK(H.at(i, j) == H.at(j, i));
                if (i + 1 < H.n && j > 0)
                    CHECK(H.at(i, j) == H.at(i + 1, j - 1));
            }
    }
}

TEST_CASE("exact PSD test on fixed matrices")
{
    CHECK(is_psd_exact(matrix_of(2, {2, 0, 0, 2})));
    CHECK(!is_psd_exact(matrix_of(2, {2, -1, -1, -1})));
    CHECK(is_psd_exact(matrix_of(2, {0, 0, 0, 0})));
    // PSD boundary: rank one
    CHECK(is_psd_exact(matrix_of(2, {1, 1, 1, 1})));
    // indefinite despite nonnegative leading minors
    CHECK(!is_psd_exact(matrix_of(2, {0, 0, 0, -1})));
    CHECK_THROWS_AS(is_psd_exact(matrix_of(2, {1, 2, 3, 4})), std::invalid_argument);
}

TEST_CASE("char-poly sign test agrees with the brute-force minor oracle (3x3 exhaustive)")
{
    // all symmetric 3x3 matrices with entries in {-2..2}
    for (long d0 = -2; d0 <= 2; ++d0)
        for (long d1 = -2; d1 <= 2; ++d1)
            for (long d2 = -2; d2 <= 2; ++d2)
                for (long o01 = -2; o01 <= 2; ++o01)
                    for (long o02 = -2; o02 <= 2; ++o02)
                        for (long o12 = -2; o12 <= 2; ++o12) {
                            const HermiteMatrix H =
                                matrix_of(3, {d0, o01, o02, o01, d1, o12, o02, o12, d2});
                            CHECK(is_psd_exact(H) == psd_by_minors(H));
                        }
}

TEST_CASE("char-poly sign test agrees with the minor oracle (4x4 random)")
{
    std::mt19937_64 rng(0x4444ULL);
    std::uniform_int_distribution<long> entry(-2, 2);
    for (int trial = 0; trial < 10000; ++trial) {
        HermiteMatrix H;
        H.n = 4;
        H.entries.assign(16, Rat(0));
        for (int i = 0; i < 4; ++i)
            for (int j = i; j < 4; ++j) {
                const long v = entry(rng);
                H.at(i, j) = v;
                H.at(j, i) = v;
            }
        CHECK(is_psd_exact(H) == psd_by_minors(H));
    }
}

TEST_CASE("classification examples")
{
    CHECK(classify_real_rooted(parse_polynomial("-1,0,1")));
    CHECK(!classify_real_rooted(parse_polynomial("1,1,1")));
    CHECK(!classify_real_rooted(parse_polynomial("1,-2,2,-2,1"))); // (t-1)^2 (t^2+1)
    CHECK(classify_real_rooted(parse_polynomial("1,-2,1")));       // PSD boundary
    CHECK(classify_real_rooted(parse_polynomial("7,3")));
}

TEST_CASE("classification equals the Sturm oracle across a seeded corpus")
{
    CorpusSpec spec;
    spec.count = 400;
    spec.degree_lo = 1;
    spec.degree_hi = 8;
    spec.seed = 0x5ca1eULL;
    for (const Polynomial& f : generate_corpus(spec))
        CHECK(classify_real_rooted(f) == sturm_real_root_count(f).real_rooted());
}

TEST_CASE("sphere search: PSD form of t^2-1 bottoms out at 2")
{
    const MAdicForm phi2 = build_form_exact(parse_polynomial("-1,0,1"), 2);
    const SphereMinimum m = estimate_min_on_sphere(phi2, 8, 200);
    CHECK(m.min_value == doctest::Approx(2.0).epsilon(1e-6));
}

TEST_CASE("sphere search finds the negative region of a non-PSD form")
{
    const MAdicForm phi4 = build_form_exact(parse_polynomial("1,1,1"), 4);
    const SphereMinimum m = estimate_min_on_sphere(phi4); // spec-default effort
    CHECK(m.min_value < 0.0);
    // reported argmin really achieves the reported value
    CHECK(evaluate(phi4, m.argmin) == doctest::Approx(m.min_value).epsilon(1e-9));
}

TEST_CASE("sphere search on one variable evaluates the axis")
{
    for (int m : {2, 4}) {
        const MAdicForm form = build_form_exact(parse_polynomial("-5,1"), m);
        const SphereMinimum best = estimate_min_on_sphere(form, 4, 50);
        CHECK(best.min_value == doctest::Approx(1.0));
    }
}

TEST_CASE("sphere minimum sign is invariant under positive scaling")
{
    const MAdicForm phi4 = build_form_exact(parse_polynomial("1,1,1"), 4);
    const MAdicForm scaled = scale_form(phi4, Rat(7, 3));
    const SphereMinimum a = estimate_min_on_sphere(phi4, 16, 300, 9);
    const SphereMinimum b = estimate_min_on_sphere(scaled, 16, 300, 9);
    CHECK(a.min_value < 0.0);
    CHECK(b.min_value < 0.0);
}
