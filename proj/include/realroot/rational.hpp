#ifndef REALROOT_RATIONAL_HPP
#define REALROOT_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace realroot {

using Rat = mpq_class;
using Int = mpz_class;

/* Exact conversion; every finite double is a rational with a power-of-two
 * denominator. Throws NumericError on NaN/Inf. */
Rat rat_from_double(double x);

double rat_to_double(const Rat& q);

/* "a/b" with "/b" omitted when the denominator is 1. */
std::string rat_to_string(const Rat& q);

/* Accepts "a", "a/b" and decimal literals like "-1.25"; exact in all
 * three cases. Throws ParseError. */
Rat parse_rational(std::string_view text);

} // namespace realroot

#endif
