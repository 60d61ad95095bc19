/* Command-line front end: classify | form | witness | certify | verify
 * | bench. Exit codes: classify returns 0 for real-rooted, 1 for
 * non-real roots; witness/certify/verify return 0 on pass, 1 on fail;
 * usage and parse problems exit 2 everywhere. */

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "realroot/realroot.hpp"

namespace {

using namespace realroot;

constexpr int kExitUsage = 2;

std::string read_stream(std::istream& in)
{
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string trimmed(std::string s)
{
    const auto from = s.find_first_not_of(" \t\r\n");
    if (from == std::string::npos)
        return "";
    const auto to = s.find_last_not_of(" \t\r\n");
    return s.substr(from, to - from + 1);
}

Polynomial load_polynomial(const std::string& arg)
{
    std::string text = arg;
    if (arg == "-")
        text = trimmed(read_stream(std::cin));
    const Polynomial f = parse_polynomial(text);
    if (f.degree() < 1)
        throw ParseError("polynomial must have degree >= 1");
    return f;
}

struct RangeOption {
    int lo = 0;
    int hi = 0;
};

RangeOption parse_range(const std::string& text)
{
    RangeOption r;
    const auto sep = text.find("..");
    try {
        if (sep == std::string::npos) {
            r.lo = r.hi = std::stoi(text);
        } else {
            r.lo = std::stoi(text.substr(0, sep));
            r.hi = std::stoi(text.substr(sep + 2));
        }
    } catch (const std::exception&) {
        throw CLI::ValidationError("range", "expected '<lo>..<hi>' or a single integer");
    }
    if (r.hi < r.lo)
        throw CLI::ValidationError("range", "empty range '" + text + "'");
    return r;
}

int cmd_classify(const std::string& poly_arg, const std::string& format)
{
    const Polynomial f = load_polynomial(poly_arg);
    const HermiteMatrix H = hermite_matrix(f);
    const bool real_rooted = is_psd_exact(H);
    const SturmCount sturm = sturm_real_root_count(f);

    if (format == "json") {
        nlohmann::json j;
        j["polynomial"] = f.to_string();
        j["degree"] = f.degree();
        j["real_rooted"] = real_rooted;
        j["hermite_psd"] = real_rooted;
        j["hermite_matrix"] = nlohmann::json::parse(hermite_to_json(H));
        j["sturm"] = {{"distinct_real", sturm.distinct_real},
                      {"distinct_total", sturm.distinct_total}};
        j["sturm_agrees"] = sturm.real_rooted() == real_rooted;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "polynomial: " << f.to_string() << " (degree " << f.degree() << ")\n";
        std::cout << "hermite form (m=2): " << (real_rooted ? "positive semidefinite" : "not positive semidefinite")
                  << "\n";
        std::cout << "sturm cross-check: " << sturm.distinct_real << " real of "
                  << sturm.distinct_total << " distinct roots ("
                  << (sturm.real_rooted() == real_rooted ? "agrees" : "DISAGREES") << ")\n";
        std::cout << (real_rooted ? "real-rooted" : "has non-real roots") << "\n";
    }
    return real_rooted ? 0 : 1;
}

int cmd_form(const std::string& poly_arg, int m, const std::string& format)
{
    const Polynomial f = load_polynomial(poly_arg);
    const MAdicForm form = build_form_exact(f, m);
    if (format == "json")
        std::cout << form_to_json(form, 2) << "\n";
    else
        std::cout << form_to_text(form) << "\n";
    return 0;
}

int cmd_witness(const std::string& poly_arg, int m, const std::string& format, double tol)
{
    const Polynomial f = load_polynomial(poly_arg);
    WitnessOptions options;
    options.verify_tol = tol;
    try {
        const NegativeWitness witness = negative_witness(f, m, options);
        const VerifyReport report = verify_certificate(f, witness, tol);
        if (format == "json") {
            nlohmann::json j;
            j["certificate"] = nlohmann::json::parse(certificate_to_json(witness));
            j["verification"] = {{"pass", report.pass},
                                 {"residual", report.residual},
                                 {"detail", report.detail}};
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << certificate_to_json(witness, 2) << "\n";
            std::cout << "verification: " << (report.pass ? "pass" : "FAIL") << " ("
                      << report.detail << ")\n";
        }
        return report.pass ? 0 : 1;
    } catch (const CertificateUnavailable& e) {
        std::cout << "refused: " << e.what() << "\n";
        return 1;
    }
}

int cmd_certify(const std::string& poly_arg, int m, const std::string& format, double tol)
{
    const Polynomial f = load_polynomial(poly_arg);
    WitnessOptions options;
    options.cert_tol = tol;
    try {
        const PsdCertificate cert = psd_certificate(f, m, options);
        const VerifyReport report = verify_certificate(f, cert, tol);
        if (format == "json") {
            nlohmann::json j;
            j["certificate"] = nlohmann::json::parse(certificate_to_json(cert));
            j["verification"] = {{"pass", report.pass},
                                 {"residual", report.residual},
                                 {"detail", report.detail}};
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << certificate_to_json(cert, 2) << "\n";
            std::cout << "verification: " << (report.pass ? "pass" : "FAIL") << " ("
                      << report.detail << ")\n";
        }
        return report.pass ? 0 : 1;
    } catch (const CertificateUnavailable& e) {
        std::cout << "refused: " << e.what() << "\n";
        return 1;
    }
}

int cmd_verify(const std::string& poly_arg, const std::string& cert_arg, double witness_tol,
               double cert_tol)
{
    // witness_tol/cert_tol already resolved by the caller (defaults or --tol)
    const Polynomial f = load_polynomial(poly_arg);
    std::string text;
    if (cert_arg == "-") {
        text = read_stream(std::cin);
    } else {
        std::ifstream in(cert_arg);
        if (!in)
            throw ParseError("cannot open certificate file '" + cert_arg + "'");
        text = read_stream(in);
    }
    const Certificate cert = certificate_from_json(text);
    const VerifyReport report = verify_certificate(f, cert, witness_tol, cert_tol);
    std::cout << (report.pass ? "pass" : "FAIL") << ": " << report.detail << "\n";
    return report.pass ? 0 : 1;
}

int cmd_bench(const CorpusSpec& spec, const std::string& format, double tol, bool timings)
{
    const std::vector<Polynomial> corpus = generate_corpus(spec);
    ConsistencyOptions options;
    options.m_list = {2, 4, 6, 8};
    options.witness_tol = tol;
    options.seed = spec.seed;
    const ConsistencyReport report = run_consistency(corpus, options);
    if (format == "csv")
        std::cout << report.to_csv(timings);
    else
        std::cout << report.to_text(timings);
    for (const std::string& note : report.failure_notes)
        std::cerr << "note: " << note << "\n";
    return report.clean() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"decide real-rootedness through the m-adic Hermite forms, with "
                 "machine-checkable certificates in both directions"};
    app.require_subcommand(1);

    std::string poly_arg;
    std::string format = "text";
    std::string cert_arg;
    int m = 2;
    double tol = 1e-6;
    bool timings = true;
    CorpusSpec spec;
    spec.count = 100;
    spec.degree_lo = 2;
    spec.degree_hi = 6;
    spec.seed = 42;

    auto add_tol = [&](CLI::App* cmd) {
        cmd->add_option("--tol", tol, "verification tolerance")->envname("REALROOT_TOL");
    };

    CLI::App* classify = app.add_subcommand("classify", "decide real-rootedness exactly");
    classify->add_option("polynomial", poly_arg, "coefficients 'c0,c1,...' or expression; '-' for stdin")
        ->required();
    classify->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    CLI::App* form = app.add_subcommand("form", "print the n-ary m-adic form");
    form->add_option("polynomial", poly_arg)->required();
    form->add_option("--m", m, "form degree (>= 1)")->required()->check(CLI::PositiveNumber);
    form->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    CLI::App* witness = app.add_subcommand("witness", "negative witness for non-real roots");
    witness->add_option("polynomial", poly_arg)->required();
    witness->add_option("--m", m, "even form degree (>= 2)")->required();
    witness->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    add_tol(witness);

    CLI::App* certify = app.add_subcommand("certify", "sum-of-even-powers certificate");
    certify->add_option("polynomial", poly_arg)->required();
    certify->add_option("--m", m, "even form degree (>= 2)")->required();
    certify->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    add_tol(certify);

    CLI::App* verify = app.add_subcommand("verify", "check a certificate against a polynomial");
    verify->add_option("polynomial", poly_arg)->required();
    verify->add_option("--cert", cert_arg, "certificate JSON file, '-' for stdin")->required();
    add_tol(verify);

    CLI::App* bench = app.add_subcommand("bench", "seeded differential-testing benchmark");
    bench->add_option("--count", spec.count)->check(CLI::PositiveNumber);
    std::string deg_range = "2..6", coeff_range = "-9..9";
    bench->add_option("--deg", deg_range, "degree range '<lo>..<hi>'");
    bench->add_option("--coeff", coeff_range, "coefficient range '<lo>..<hi>'");
    bench->add_option("--seed", spec.seed);
    bench->add_option("--format", format)->check(CLI::IsMember({"text", "csv"}));
    bench->add_flag("--timings,!--no-timings", timings,
                    "include wall-clock columns (off for byte-reproducible output)");
    add_tol(bench);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp" ||
            e.get_name() == "CallForVersion")
            return app.exit(e);
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (classify->parsed())
            return cmd_classify(poly_arg, format);
        if (form->parsed())
            return cmd_form(poly_arg, m, format);
        if (witness->parsed()) {
            if (m < 2 || m % 2 != 0)
                throw std::invalid_argument("witness requires an even m >= 2");
            return cmd_witness(poly_arg, m, format, tol);
        }
        if (certify->parsed()) {
            if (m < 2 || m % 2 != 0)
                throw std::invalid_argument("certify requires an even m >= 2");
            return cmd_certify(poly_arg, m, format,
                               certify->count("--tol") > 0 ? tol : 1e-8);
        }
        if (verify->parsed()) {
            const bool tol_given = verify->count("--tol") > 0;
            return cmd_verify(poly_arg, cert_arg, tol_given ? tol : 1e-6,
                              tol_given ? tol : 1e-8);
        }
        if (bench->parsed()) {
            const RangeOption deg = parse_range(deg_range);
            const RangeOption coeff = parse_range(coeff_range);
            spec.degree_lo = deg.lo;
            spec.degree_hi = deg.hi;
            spec.coeff_lo = coeff.lo;
            spec.coeff_hi = coeff.hi;
            return cmd_bench(spec, format, tol, timings);
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitUsage;
}
