#ifndef REALROOT_POLYNOMIAL_HPP
#define REALROOT_POLYNOMIAL_HPP

#include <complex>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "realroot/rational.hpp"

namespace realroot {

/* Univariate polynomial with exact rational coefficients, stored in
 * ascending degree with trailing zeros trimmed. The zero polynomial is
 * representable (empty coefficient list, degree -1); the analysis
 * operations reject it. */
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rat> coeffs);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    /* Coefficient of t^i; zero beyond the degree. */
    const Rat& coeff(std::size_t i) const;
    const Rat& leading() const; // throws on the zero polynomial

    Polynomial derivative() const;
    Polynomial monic() const;

    Rat eval(const Rat& t) const;
    std::complex<double> eval(std::complex<double> z) const;

    std::vector<double> coeffs_as_double() const;

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Rat& c);
    friend bool operator==(const Polynomial& a, const Polynomial& b);

    /* Quotient and remainder over the rationals; b must be nonzero. */
    static std::pair<Polynomial, Polynomial> div_mod(const Polynomial& a, const Polynomial& b);
    /* Division known to be exact; asserts the remainder is zero. */
    static Polynomial div_exact(const Polynomial& a, const Polynomial& b);
    /* Monic gcd (zero when both inputs are zero). */
    static Polynomial gcd(Polynomial a, Polynomial b);

    std::string to_string(std::string_view var = "t") const;

private:
    std::vector<Rat> coeffs_;
    void trim();
};

/* Accepts either a comma-separated ascending coefficient list
 * ("-1,0,1") or a sum of monomials in one indeterminate
 * ("t^2 + t + 1", "3/2x^4 - x"). Rejects empty input and the zero
 * polynomial. */
Polynomial parse_polynomial(std::string_view text);

/* Yun's algorithm: monic squarefree factors with their multiplicities,
 * Σ degree(factor)·multiplicity = degree(f). Requires degree ≥ 1. */
std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& f);

} // namespace realroot

#endif
