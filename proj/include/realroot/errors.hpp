#ifndef REALROOT_ERRORS_HPP
#define REALROOT_ERRORS_HPP

#include <stdexcept>

namespace realroot {

/* Input text that cannot be turned into a polynomial (bad syntax, empty
 * input, or the zero polynomial). */
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* A floating-point stage failed to deliver a trustworthy result:
 * root finding did not converge, an imaginary residue exceeded its
 * tolerance, or interpolation nodes were too close. */
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* The requested certificate does not exist for this input: a negative
 * witness for a real-rooted polynomial, or a sum-of-even-powers
 * decomposition for a polynomial with non-real roots. */
struct CertificateUnavailable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* A freshly constructed certificate failed its mandatory verification.
 * Certificates are never handed out unverified. */
struct VerificationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace realroot

#endif
