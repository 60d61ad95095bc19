#include "realroot/witness.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "realroot/errors.hpp"
#include "realroot/psd.hpp"

namespace realroot {

namespace {

using Complex = std::complex<double>;

/* Gaussian elimination with partial pivoting on an r×r complex system.
 * r stays tiny (number of distinct roots), so no blocking, no frills. */
std::vector<Complex> solve_dense(std::vector<std::vector<Complex>> A, std::vector<Complex> b)
{
    const std::size_t r = b.size();
    for (std::size_t col = 0; col < r; ++col) {
        std::size_t pivot = col;
        double best = std::abs(A[col][col]);
        for (std::size_t row = col + 1; row < r; ++row) {
            const double mag = std::abs(A[row][col]);
            if (mag > best) {
                best = mag;
                pivot = row;
            }
        }
        if (best < 1e-300)
            throw NumericError("interpolation system is singular at working precision");
        std::swap(A[col], A[pivot]);
        std::swap(b[col], b[pivot]);
        for (std::size_t row = col + 1; row < r; ++row) {
            const Complex factor = A[row][col] / A[col][col];
            if (factor == 0.0)
                continue;
            for (std::size_t k = col; k < r; ++k)
                A[row][k] -= factor * A[col][k];
            b[row] -= factor * b[col];
        }
    }
    std::vector<Complex> x(r);
    for (std::size_t row = r; row-- > 0;) {
        Complex acc = b[row];
        for (std::size_t k = row + 1; k < r; ++k)
            acc -= A[row][k] * x[k];
        x[row] = acc / A[row][row];
    }
    return x;
}

std::vector<Rat> doubles_to_rats(const std::vector<double>& x)
{
    std::vector<Rat> out;
    out.reserve(x.size());
    for (double v : x)
        out.push_back(rat_from_double(v));
    return out;
}

} // namespace

const RootSpectrum::Entry& principal_nonreal_root(const RootSpectrum& spectrum)
{
    const RootSpectrum::Entry* best = nullptr;
    for (const auto& entry : spectrum.distinct_roots) {
        if (entry.value.imag() <= 0.0)
            continue;
        if (!best || entry.value.imag() > best->value.imag() ||
            (entry.value.imag() == best->value.imag() &&
             entry.value.real() < best->value.real()))
            best = &entry;
    }
    if (!best)
        throw CertificateUnavailable("all roots are real: no negative witness exists");
    return *best;
}

Polynomial interpolate_witness_poly(const RootSpectrum& spectrum, Complex omega, double tol)
{
    const RootSpectrum::Entry& lambda1 = principal_nonreal_root(spectrum);

    std::vector<Complex> nodes;
    std::vector<Complex> values;
    nodes.push_back(lambda1.value);
    values.push_back(omega);
    nodes.push_back(std::conj(lambda1.value));
    values.push_back(std::conj(omega));
    for (const auto& entry : spectrum.distinct_roots) {
        if (entry.value == lambda1.value || entry.value == std::conj(lambda1.value))
            continue;
        nodes.push_back(entry.value);
        values.push_back(0.0);
    }

    const std::size_t r = nodes.size();
    double min_gap = std::numeric_limits<double>::infinity();
    double max_abs = 0.0;
    for (std::size_t i = 0; i < r; ++i) {
        max_abs = std::max(max_abs, std::abs(nodes[i]));
        for (std::size_t j = i + 1; j < r; ++j)
            min_gap = std::min(min_gap, std::abs(nodes[i] - nodes[j]));
    }
    if (r > 1 && min_gap < 1e-12 * (1.0 + max_abs))
        throw NumericError("interpolation nodes too close: spectrum is ill-conditioned");

    std::vector<std::vector<Complex>> V(r, std::vector<Complex>(r));
    for (std::size_t i = 0; i < r; ++i) {
        Complex power = 1.0;
        for (std::size_t j = 0; j < r; ++j) {
            V[i][j] = power;
            power *= nodes[i];
        }
    }
    const std::vector<Complex> a = solve_dense(std::move(V), values);

    std::vector<Rat> coeffs;
    coeffs.reserve(r);
    for (const Complex& c : a) {
        if (std::abs(c.imag()) > tol * (1.0 + std::abs(c)))
            throw NumericError("interpolated coefficients have imaginary residue above tolerance");
        coeffs.push_back(rat_from_double(c.real()));
    }
    return Polynomial(std::move(coeffs));
}

NegativeWitness negative_witness(const Polynomial& f, int m, const WitnessOptions& options)
{
    return negative_witness(f, numeric_roots(f, options.roots), m, options);
}

NegativeWitness negative_witness(const Polynomial& f, const RootSpectrum& spectrum, int m,
                                 const WitnessOptions& options)
{
    if (m < 2 || m % 2 != 0)
        throw std::invalid_argument("negative witness requires even m >= 2");
    if (classify_real_rooted(f))
        throw CertificateUnavailable(
            "polynomial is real-rooted: every even-degree form is positive semidefinite, "
            "so no negative witness exists");

    const RootSpectrum::Entry& lambda1 = principal_nonreal_root(spectrum);
    const Complex omega = std::polar(1.0, M_PI / m);
    const Polynomial p = interpolate_witness_poly(spectrum, omega, options.interp_tol);

    const int n = f.degree();
    std::vector<double> x(n, 0.0);
    const std::vector<double> pc = p.coeffs_as_double();
    if (static_cast<int>(pc.size()) > n)
        throw NumericError("interpolant degree exceeds the witness dimension");
    for (std::size_t i = 0; i < pc.size(); ++i)
        x[i] = pc[i];

    NegativeWitness witness;
    witness.m = m;
    witness.x = std::move(x);
    witness.mu = lambda1.multiplicity;

    const MAdicForm form = build_form_exact(f, m);
    const Rat value = evaluate(form, doubles_to_rats(witness.x));
    const Rat target = Rat(-2) * witness.mu;
    const Rat deviation = abs(value - target);
    witness.claimed_value = rat_to_double(value);
    witness.residual = rat_to_double(deviation);

    if (!(value < 0) ||
        deviation > rat_from_double(options.verify_tol) * (1 + Rat(2) * witness.mu)) {
        std::ostringstream os;
        os << "witness verification failed: form value " << witness.claimed_value
           << " vs target " << (-2.0 * witness.mu) << " (residual " << witness.residual << ")";
        throw VerificationError(os.str());
    }
    return witness;
}

PsdCertificate psd_certificate(const Polynomial& f, int m, const WitnessOptions& options)
{
    return psd_certificate(f, numeric_roots(f, options.roots), m, options);
}

PsdCertificate psd_certificate(const Polynomial& f, const RootSpectrum& spectrum, int m,
                               const WitnessOptions& options)
{
    if (m < 2 || m % 2 != 0)
        throw std::invalid_argument("sum-of-powers certificate requires even m >= 2");
    if (!classify_real_rooted(f))
        throw CertificateUnavailable(
            "polynomial has non-real roots: its even-degree forms are not positive "
            "semidefinite, so no sum-of-even-powers certificate exists");
    if (!spectrum.all_real())
        throw NumericError("numeric spectrum disagrees with the exact real-rootedness decision");

    const int n = f.degree();
    PsdCertificate cert;
    cert.m = m;
    for (const auto& entry : spectrum.distinct_roots) {
        PsdCertificate::Row row;
        row.weight = entry.multiplicity;
        row.coeffs.resize(n);
        double power = 1.0;
        for (int j = 0; j < n; ++j) {
            row.coeffs[j] = power;
            power *= entry.value.real();
        }
        cert.rows.push_back(std::move(row));
    }

    const VerifyReport report = verify_certificate(f, cert, options.cert_tol);
    if (!report.pass)
        throw VerificationError("certificate verification failed: " + report.detail);
    return cert;
}

VerifyReport verify_certificate(const Polynomial& f, const NegativeWitness& witness, double tol)
{
    VerifyReport report;
    if (f.is_zero() || f.degree() < 1) {
        report.detail = "polynomial must have degree >= 1";
        return report;
    }
    if (static_cast<int>(witness.x.size()) != f.degree()) {
        report.detail = "witness vector length does not match the polynomial degree";
        return report;
    }
    if (witness.m < 2 || witness.m % 2 != 0) {
        report.detail = "witness m must be even and >= 2";
        return report;
    }
    if (witness.mu < 1) {
        report.detail = "witness multiplicity must be positive";
        return report;
    }

    const MAdicForm form = build_form_exact(f, witness.m);
    const Rat value = evaluate(form, doubles_to_rats(witness.x));
    const Rat deviation = abs(value - Rat(-2) * witness.mu);
    report.residual = rat_to_double(deviation);

    std::ostringstream os;
    if (!(value < 0)) {
        os << "form value " << rat_to_double(value) << " is not negative";
        report.detail = os.str();
        return report;
    }
    if (deviation > rat_from_double(tol) * (1 + Rat(2) * witness.mu)) {
        os << "form value " << rat_to_double(value) << " misses -2*mu = " << (-2.0 * witness.mu)
           << " by " << report.residual;
        report.detail = os.str();
        return report;
    }
    report.pass = true;
    os << "form value " << rat_to_double(value) << " within " << tol << " of "
       << (-2.0 * witness.mu);
    report.detail = os.str();
    return report;
}

VerifyReport verify_certificate(const Polynomial& f, const PsdCertificate& cert, double tol)
{
    VerifyReport report;
    if (f.is_zero() || f.degree() < 1) {
        report.detail = "polynomial must have degree >= 1";
        return report;
    }
    const int n = f.degree();
    if (cert.m < 2 || cert.m % 2 != 0) {
        report.detail = "certificate m must be even and >= 2";
        return report;
    }
    int total_weight = 0;
    for (const auto& row : cert.rows) {
        if (static_cast<int>(row.coeffs.size()) != n) {
            report.detail = "certificate row length does not match the polynomial degree";
            return report;
        }
        if (row.weight < 1) {
            report.detail = "certificate row weights must be positive";
            return report;
        }
        total_weight += row.weight;
    }
    if (total_weight != n) {
        report.detail = "certificate row weights do not sum to the polynomial degree";
        return report;
    }

    LinearFormList rows;
    rows.reserve(cert.rows.size());
    for (const auto& row : cert.rows) {
        LinearForm lf;
        lf.weight = row.weight;
        lf.coeffs.assign(row.coeffs.begin(), row.coeffs.end());
        rows.push_back(std::move(lf));
    }

    const MAdicForm expected = build_form_exact(f, cert.m);
    const NumericMAdicForm expanded = expand_weighted_powers(rows, n, cert.m);
    report.residual = compare_forms(expected, expanded);

    std::ostringstream os;
    if (report.residual > tol) {
        os << "re-expansion deviates from the form by " << report.residual
           << " (normalized), tolerance " << tol;
        report.detail = os.str();
        return report;
    }
    report.pass = true;
    os << "re-expansion matches the form within " << tol << " (normalized residual "
       << report.residual << ")";
    report.detail = os.str();
    return report;
}

VerifyReport verify_certificate(const Polynomial& f, const Certificate& cert, double witness_tol,
                                double cert_tol)
{
    if (std::holds_alternative<NegativeWitness>(cert))
        return verify_certificate(f, std::get<NegativeWitness>(cert), witness_tol);
    return verify_certificate(f, std::get<PsdCertificate>(cert), cert_tol);
}

namespace {
using nlohmann::json;
} // namespace

std::string certificate_to_json(const NegativeWitness& witness, int indent)
{
    json j;
    j["kind"] = "negative_witness";
    j["m"] = witness.m;
    j["x"] = witness.x;
    j["claimed_value"] = witness.claimed_value;
    j["mu"] = witness.mu;
    j["residual"] = witness.residual;
    return j.dump(indent);
}

std::string certificate_to_json(const PsdCertificate& cert, int indent)
{
    json rows = json::array();
    for (const auto& row : cert.rows) {
        json r;
        r["weight"] = row.weight;
        r["coeffs"] = row.coeffs;
        rows.push_back(std::move(r));
    }
    json j;
    j["kind"] = "psd_decomposition";
    j["m"] = cert.m;
    j["rows"] = std::move(rows);
    return j.dump(indent);
}

std::string certificate_to_json(const Certificate& cert, int indent)
{
    if (std::holds_alternative<NegativeWitness>(cert))
        return certificate_to_json(std::get<NegativeWitness>(cert), indent);
    return certificate_to_json(std::get<PsdCertificate>(cert), indent);
}

Certificate certificate_from_json(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid certificate JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("kind") || !j.contains("m"))
        throw ParseError("certificate JSON is missing 'kind' or 'm'");
    const std::string kind = j["kind"].get<std::string>();
    if (!j["m"].is_number_integer())
        throw ParseError("certificate JSON: 'm' must be an integer");

    if (kind == "negative_witness") {
        NegativeWitness w;
        w.m = j["m"].get<int>();
        if (!j.contains("x") || !j["x"].is_array() || !j.contains("mu"))
            throw ParseError("negative witness JSON needs 'x' and 'mu'");
        for (const json& v : j["x"])
            w.x.push_back(v.get<double>());
        w.mu = j["mu"].get<int>();
        w.claimed_value = j.value("claimed_value", 0.0);
        w.residual = j.value("residual", 0.0);
        return w;
    }
    if (kind == "psd_decomposition") {
        PsdCertificate c;
        c.m = j["m"].get<int>();
        if (!j.contains("rows") || !j["rows"].is_array())
            throw ParseError("decomposition JSON needs 'rows'");
        for (const json& r : j["rows"]) {
            if (!r.is_object() || !r.contains("weight") || !r.contains("coeffs"))
                throw ParseError("decomposition JSON: malformed row");
            PsdCertificate::Row row;
            row.weight = r["weight"].get<int>();
            for (const json& v : r["coeffs"])
                row.coeffs.push_back(v.get<double>());
            c.rows.push_back(std::move(row));
        }
        return c;
    }
    throw ParseError("unknown certificate kind '" + kind + "'");
}

} // namespace realroot
