#include "realroot/forms.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "realroot/errors.hpp"
#include "realroot/power_sums.hpp"

namespace realroot {

namespace {

constexpr long kMaxTerms = 2'000'000;

long term_count(int nvars, int m)
{
    // C(nvars + m - 1, m), clamped
    long count = 1;
    for (int i = 1; i <= m; ++i) {
        count = count * (nvars + m - i) / i;
        if (count > kMaxTerms)
            return kMaxTerms + 1;
    }
    return count;
}

void check_form_size(int nvars, int m)
{
    if (nvars < 1)
        throw std::invalid_argument("form needs at least one variable");
    if (m < 1)
        throw std::invalid_argument("form degree m must be >= 1");
    if (term_count(nvars, m) > kMaxTerms)
        throw std::invalid_argument("form too large: monomial count exceeds the desk-scale cap");
}

template <class Fn>
void for_each_exponent(int nvars, int m, Fn&& fn)
{
    Exponents alpha(nvars, 0);
    // iterative enumeration of all α with Σα = m, ascending lex order
    auto recurse = [&](auto&& self, int var, int remaining) -> void {
        if (var == nvars - 1) {
            alpha[var] = remaining;
            fn(const_cast<const Exponents&>(alpha));
            alpha[var] = 0;
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            alpha[var] = v;
            self(self, var + 1, remaining - v);
        }
        alpha[var] = 0;
    };
    recurse(recurse, 0, m);
}

Int multinomial(int m, const Exponents& alpha)
{
    Int num;
    mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(m));
    for (int a : alpha) {
        if (a > 1) {
            Int fac;
            mpz_fac_ui(fac.get_mpz_t(), static_cast<unsigned long>(a));
            num /= fac;
        }
    }
    return num;
}

int weighted_degree(const Exponents& alpha)
{
    int k = 0;
    for (std::size_t j = 0; j < alpha.size(); ++j)
        k += alpha[j] * static_cast<int>(j);
    return k;
}

} // namespace

LinearFormList vandermonde_rows(const RootSpectrum& spectrum)
{
    const int n = spectrum.total_multiplicity();
    LinearFormList rows;
    rows.reserve(spectrum.distinct_roots.size());
    for (const auto& entry : spectrum.distinct_roots) {
        LinearForm row;
        row.weight = entry.multiplicity;
        row.coeffs.resize(n);
        std::complex<double> power = 1.0;
        for (int j = 0; j < n; ++j) {
            row.coeffs[j] = power;
            power *= entry.value;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

MAdicForm build_form_exact(const Polynomial& f, int m)
{
    if (f.is_zero())
        throw std::invalid_argument("form of the zero polynomial");
    const int n = f.degree();
    if (n < 1)
        throw std::invalid_argument("form construction requires degree >= 1");
    check_form_size(n, m);

    const PowerSums p = power_sums(f, m * (n - 1));
    MAdicForm form;
    form.nvars = n;
    form.degree = m;
    for_each_exponent(n, m, [&](const Exponents& alpha) {
        const Rat& pk = p.p(weighted_degree(alpha));
        if (pk == 0)
            return;
        Rat coeff = Rat(multinomial(m, alpha)) * pk;
        form.terms.emplace(alpha, std::move(coeff));
    });
    return form;
}

NumericMAdicForm expand_weighted_powers(const LinearFormList& rows, int nvars, int m,
                                        double imag_tol)
{
    check_form_size(nvars, m);

    struct Cell {
        std::complex<double> value;
        double magnitude = 0.0;
    };
    std::map<Exponents, Cell> total;

    for (const LinearForm& row : rows) {
        if (static_cast<int>(row.coeffs.size()) != nvars)
            throw std::invalid_argument("linear form length does not match the variable count");
        std::map<Exponents, Cell> cur;
        cur.emplace(Exponents(nvars, 0), Cell{1.0, 1.0});
        for (int step = 0; step < m; ++step) {
            std::map<Exponents, Cell> next;
            for (const auto& [alpha, cell] : cur) {
                for (int j = 0; j < nvars; ++j) {
                    if (row.coeffs[j] == 0.0)
                        continue;
                    Exponents beta = alpha;
                    ++beta[j];
                    Cell& slot = next[std::move(beta)];
                    slot.value += cell.value * row.coeffs[j];
                    slot.magnitude += cell.magnitude * std::abs(row.coeffs[j]);
                }
            }
            cur = std::move(next);
        }
        const double w = row.weight;
        for (const auto& [alpha, cell] : cur) {
            Cell& slot = total[alpha];
            slot.value += w * cell.value;
            slot.magnitude += w * cell.magnitude;
        }
    }

    NumericMAdicForm form;
    form.nvars = nvars;
    form.degree = m;
    for (const auto& [alpha, cell] : total) {
        const double residue = std::abs(cell.value.imag());
        if (residue > imag_tol * (1.0 + cell.magnitude))
            throw NumericError("imaginary residue above tolerance: linear-form rows are not "
                               "conjugate-closed");
        form.max_imag_residue = std::max(form.max_imag_residue, residue);
        form.terms[alpha] = cell.value.real();
        form.magnitudes[alpha] = cell.magnitude;
    }
    return form;
}

NumericMAdicForm build_form_from_roots(const RootSpectrum& spectrum, int m, double imag_tol)
{
    if (spectrum.distinct_roots.empty())
        throw std::invalid_argument("form from an empty root spectrum");
    return expand_weighted_powers(vandermonde_rows(spectrum), spectrum.total_multiplicity(), m,
                                  imag_tol);
}

MAdicForm build_form_from_roots_exact(const std::vector<std::pair<GaussianRational, int>>& roots,
                                      int m)
{
    if (roots.empty())
        throw std::invalid_argument("form from an empty root list");
    int n = 0;
    for (const auto& [root, mult] : roots)
        n += mult;
    check_form_size(n, m);

    std::map<Exponents, GaussianRational> total;
    for (const auto& [root, mult] : roots) {
        std::vector<GaussianRational> row(n);
        GaussianRational power(Rat(1), Rat(0));
        for (int j = 0; j < n; ++j) {
            row[j] = power;
            power = power * root;
        }
        std::map<Exponents, GaussianRational> cur;
        cur.emplace(Exponents(n, 0), GaussianRational(Rat(1), Rat(0)));
        for (int step = 0; step < m; ++step) {
            std::map<Exponents, GaussianRational> next;
            for (const auto& [alpha, value] : cur) {
                for (int j = 0; j < n; ++j) {
                    if (row[j].re == 0 && row[j].im == 0)
                        continue;
                    Exponents beta = alpha;
                    ++beta[j];
                    auto [it, inserted] = next.emplace(std::move(beta), GaussianRational());
                    it->second = it->second + value * row[j];
                }
            }
            cur = std::move(next);
        }
        const Rat w(mult);
        for (const auto& [alpha, value] : cur) {
            auto [it, inserted] = total.emplace(alpha, GaussianRational());
            it->second = it->second + GaussianRational(w, Rat(0)) * value;
        }
    }

    MAdicForm form;
    form.nvars = n;
    form.degree = m;
    for (const auto& [alpha, value] : total) {
        if (value.im != 0)
            throw std::invalid_argument("exact root list is not closed under conjugation");
        if (value.re != 0)
            form.terms.emplace(alpha, value.re);
    }
    return form;
}

Rat evaluate(const MAdicForm& form, const std::vector<Rat>& x)
{
    if (static_cast<int>(x.size()) != form.nvars)
        throw std::invalid_argument("evaluation point has the wrong dimension");
    // power tables keep the per-term work at one multiply per variable
    std::vector<std::vector<Rat>> powers(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) {
        powers[j].resize(form.degree + 1);
        powers[j][0] = 1;
        for (int k = 1; k <= form.degree; ++k)
            powers[j][k] = powers[j][k - 1] * x[j];
    }
    Rat acc = 0;
    for (const auto& [alpha, coeff] : form.terms) {
        Rat term = coeff;
        for (std::size_t j = 0; j < x.size(); ++j)
            if (alpha[j] > 0)
                term *= powers[j][alpha[j]];
        acc += term;
    }
    return acc;
}

double evaluate(const MAdicForm& form, const std::vector<double>& x)
{
    if (static_cast<int>(x.size()) != form.nvars)
        throw std::invalid_argument("evaluation point has the wrong dimension");
    double acc = 0.0;
    for (const auto& [alpha, coeff] : form.terms) {
        double term = rat_to_double(coeff);
        for (std::size_t j = 0; j < x.size(); ++j)
            for (int k = 0; k < alpha[j]; ++k)
                term *= x[j];
        acc += term;
    }
    return acc;
}

double evaluate(const NumericMAdicForm& form, const std::vector<double>& x)
{
    if (static_cast<int>(x.size()) != form.nvars)
        throw std::invalid_argument("evaluation point has the wrong dimension");
    double acc = 0.0;
    for (const auto& [alpha, coeff] : form.terms) {
        double term = coeff;
        for (std::size_t j = 0; j < x.size(); ++j)
            for (int k = 0; k < alpha[j]; ++k)
                term *= x[j];
        acc += term;
    }
    return acc;
}

PowerEvaluation evaluate_via_powers(const RootSpectrum& spectrum, const std::vector<double>& x,
                                    int m, double imag_tol)
{
    const int n = spectrum.total_multiplicity();
    if (static_cast<int>(x.size()) != n)
        throw std::invalid_argument("evaluation point has the wrong dimension");
    if (m < 1)
        throw std::invalid_argument("form degree m must be >= 1");

    std::complex<double> sum = 0.0;
    double scale = 0.0;
    for (const auto& entry : spectrum.distinct_roots) {
        std::complex<double> value = 0.0;
        for (int j = n; j-- > 0;)
            value = value * entry.value + x[j];
        std::complex<double> power = 1.0;
        for (int k = 0; k < m; ++k)
            power *= value;
        sum += static_cast<double>(entry.multiplicity) * power;
        scale += entry.multiplicity * std::pow(std::abs(value), m);
    }

    PowerEvaluation out;
    out.value = sum.real();
    out.imag_residue = std::abs(sum.imag());
    out.scale = scale;
    if (out.imag_residue > imag_tol * (1.0 + scale))
        throw NumericError("imaginary residue above tolerance in power-sum evaluation");
    return out;
}

double compare_forms(const MAdicForm& exact, const NumericMAdicForm& numeric)
{
    if (exact.nvars != numeric.nvars || exact.degree != numeric.degree)
        throw std::invalid_argument("cannot compare forms of different shape");
    double worst = 0.0;
    auto scale_for = [&](const Exponents& alpha, double a, double b) {
        auto it = numeric.magnitudes.find(alpha);
        double mag = it != numeric.magnitudes.end() ? it->second : 0.0;
        return 1.0 + std::max(mag, std::max(std::abs(a), std::abs(b)));
    };
    for (const auto& [alpha, coeff] : exact.terms) {
        const double a = rat_to_double(coeff);
        auto it = numeric.terms.find(alpha);
        const double b = it != numeric.terms.end() ? it->second : 0.0;
        worst = std::max(worst, std::abs(a - b) / scale_for(alpha, a, b));
    }
    for (const auto& [alpha, b] : numeric.terms) {
        if (exact.terms.count(alpha))
            continue;
        worst = std::max(worst, std::abs(b) / scale_for(alpha, 0.0, b));
    }
    return worst;
}

Rat max_abs_coeff(const MAdicForm& form)
{
    Rat best = 0;
    for (const auto& [alpha, coeff] : form.terms) {
        Rat mag = abs(coeff);
        if (mag > best)
            best = mag;
    }
    return best;
}

MAdicForm scale_form(const MAdicForm& form, const Rat& factor)
{
    if (factor == 0)
        throw std::invalid_argument("scaling a form by zero");
    MAdicForm out;
    out.nvars = form.nvars;
    out.degree = form.degree;
    for (const auto& [alpha, coeff] : form.terms)
        out.terms.emplace(alpha, coeff * factor);
    return out;
}

std::string form_to_text(const MAdicForm& form)
{
    if (form.terms.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    // reverse map order = descending powers of x1, matching the usual
    // way these forms are written out
    for (auto it = form.terms.rbegin(); it != form.terms.rend(); ++it) {
        const auto& [alpha, coeff] = *it;
        const bool neg = coeff < 0;
        if (first) {
            if (neg)
                os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        Rat mag = abs(coeff);
        bool has_var = false;
        for (int a : alpha)
            has_var = has_var || a > 0;
        if (mag != 1 || !has_var)
            os << rat_to_string(mag);
        for (std::size_t j = 0; j < alpha.size(); ++j) {
            if (alpha[j] == 0)
                continue;
            os << "x" << (j + 1);
            if (alpha[j] > 1)
                os << "^" << alpha[j];
        }
    }
    return os.str();
}

namespace {

using nlohmann::json;

json exponents_to_json(const Exponents& alpha)
{
    return json(alpha);
}

template <class Form, class CoeffFn>
json form_to_json_impl(const Form& form, const char* field, CoeffFn&& coeff_to_json)
{
    json j;
    j["nvars"] = form.nvars;
    j["degree"] = form.degree;
    j["coefficient_field"] = field;
    json terms = json::array();
    for (const auto& [alpha, coeff] : form.terms) {
        json t;
        t["exponents"] = exponents_to_json(alpha);
        t["coeff"] = coeff_to_json(coeff);
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

} // namespace

std::string form_to_json(const MAdicForm& form, int indent)
{
    return form_to_json_impl(form, "rational", [](const Rat& c) { return rat_to_string(c); })
        .dump(indent);
}

std::string form_to_json(const NumericMAdicForm& form, int indent)
{
    return form_to_json_impl(form, "double", [](double c) { return c; }).dump(indent);
}

std::variant<MAdicForm, NumericMAdicForm> form_from_json(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid form JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("nvars") || !j.contains("degree") ||
        !j.contains("coefficient_field") || !j.contains("terms"))
        throw ParseError("form JSON is missing a required key");
    if (!j["nvars"].is_number_integer() || !j["degree"].is_number_integer() ||
        !j["terms"].is_array())
        throw ParseError("form JSON has a key of the wrong type");

    const int nvars = j["nvars"].get<int>();
    const int degree = j["degree"].get<int>();
    if (nvars < 1 || degree < 1)
        throw ParseError("form JSON: nvars and degree must be positive");
    const std::string field = j["coefficient_field"].get<std::string>();
    if (field != "rational" && field != "double")
        throw ParseError("form JSON: unknown coefficient_field '" + field + "'");

    auto read_exponents = [&](const json& t) {
        if (!t.is_object() || !t.contains("exponents") || !t.contains("coeff"))
            throw ParseError("form JSON: malformed term");
        const json& e = t["exponents"];
        if (!e.is_array() || static_cast<int>(e.size()) != nvars)
            throw ParseError("form JSON: exponent vector length does not match nvars");
        Exponents alpha(nvars);
        int total = 0;
        for (int i = 0; i < nvars; ++i) {
            if (!e[i].is_number_integer() || e[i].get<int>() < 0)
                throw ParseError("form JSON: exponents must be nonnegative integers");
            alpha[i] = e[i].get<int>();
            total += alpha[i];
        }
        if (total != degree)
            throw ParseError("form JSON: non-homogeneous term (exponents do not sum to degree)");
        return alpha;
    };

    if (field == "rational") {
        MAdicForm form;
        form.nvars = nvars;
        form.degree = degree;
        for (const json& t : j["terms"]) {
            Exponents alpha = read_exponents(t);
            if (!t["coeff"].is_string())
                throw ParseError("form JSON: rational coefficients must be strings");
            Rat coeff = parse_rational(t["coeff"].get<std::string>());
            if (coeff == 0)
                continue;
            if (!form.terms.emplace(std::move(alpha), std::move(coeff)).second)
                throw ParseError("form JSON: duplicate exponent vector");
        }
        return form;
    }

    NumericMAdicForm form;
    form.nvars = nvars;
    form.degree = degree;
    for (const json& t : j["terms"]) {
        Exponents alpha = read_exponents(t);
        if (!t["coeff"].is_number())
            throw ParseError("form JSON: double coefficients must be numbers");
        const double coeff = t["coeff"].get<double>();
        if (!form.terms.emplace(std::move(alpha), coeff).second)
            throw ParseError("form JSON: duplicate exponent vector");
    }
    return form;
}

} // namespace realroot
