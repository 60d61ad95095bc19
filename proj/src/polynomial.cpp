#include "realroot/polynomial.hpp"

#include <cassert>
#include <cctype>
#include <sstream>

#include "realroot/errors.hpp"

namespace realroot {

namespace {
const Rat kZero = 0;
} // namespace

Polynomial::Polynomial(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs))
{
    trim();
}

void Polynomial::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

const Rat& Polynomial::coeff(std::size_t i) const
{
    return i < coeffs_.size() ? coeffs_[i] : kZero;
}

const Rat& Polynomial::leading() const
{
    if (coeffs_.empty())
        throw std::invalid_argument("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

Polynomial Polynomial::derivative() const
{
    if (degree() <= 0)
        return {};
    std::vector<Rat> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        d[i - 1] = coeffs_[i] * static_cast<long>(i);
    return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const
{
    if (is_zero())
        throw std::invalid_argument("monic form of the zero polynomial");
    std::vector<Rat> c(coeffs_);
    const Rat lc = c.back();
    for (Rat& x : c)
        x /= lc;
    return Polynomial(std::move(c));
}

Rat Polynomial::eval(const Rat& t) const
{
    Rat acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;)
        acc = acc * t + coeffs_[i];
    return acc;
}

std::complex<double> Polynomial::eval(std::complex<double> z) const
{
    std::complex<double> acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;)
        acc = acc * z + rat_to_double(coeffs_[i]);
    return acc;
}

std::vector<double> Polynomial::coeffs_as_double() const
{
    std::vector<double> out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        out[i] = rat_to_double(coeffs_[i]);
    return out;
}

Polynomial Polynomial::operator-() const
{
    std::vector<Rat> c(coeffs_);
    for (Rat& x : c)
        x = -x;
    return Polynomial(std::move(c));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b)
{
    std::vector<Rat> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rat(0));
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = a.coeff(i) + b.coeff(i);
    return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b)
{
    std::vector<Rat> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rat(0));
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = a.coeff(i) - b.coeff(i);
    return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Rat> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Rat& c)
{
    std::vector<Rat> out(a.coeffs_);
    for (Rat& x : out)
        x *= c;
    return Polynomial(std::move(out));
}

bool operator==(const Polynomial& a, const Polynomial& b)
{
    return a.coeffs_ == b.coeffs_;
}

std::pair<Polynomial, Polynomial> Polynomial::div_mod(const Polynomial& a, const Polynomial& b)
{
    if (b.is_zero())
        throw std::invalid_argument("polynomial division by zero");
    if (a.degree() < b.degree())
        return {Polynomial(), a};
    std::vector<Rat> rem(a.coeffs_);
    std::vector<Rat> quo(a.coeffs_.size() - b.coeffs_.size() + 1, Rat(0));
    const int db = b.degree();
    for (int i = static_cast<int>(rem.size()) - 1; i >= db; --i) {
        if (rem[i] == 0)
            continue;
        Rat q = rem[i] / b.leading();
        quo[i - db] = q;
        for (int j = 0; j <= db; ++j)
            rem[i - db + j] -= q * b.coeffs_[j];
        rem[i] = 0; // exact by construction; avoid leftover round trips
    }
    return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

Polynomial Polynomial::div_exact(const Polynomial& a, const Polynomial& b)
{
    auto [q, r] = div_mod(a, b);
    assert(r.is_zero());
    return q;
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b)
{
    while (!b.is_zero()) {
        Polynomial r = div_mod(a, b).second;
        a = std::move(b);
        b = std::move(r);
        if (!b.is_zero())
            b = b.monic(); // keeps coefficient growth in check
    }
    return a.is_zero() ? a : a.monic();
}

std::string Polynomial::to_string(std::string_view var) const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rat& c = coeffs_[i];
        if (c == 0)
            continue;
        const bool neg = c < 0;
        if (first) {
            if (neg)
                os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        Rat mag = abs(c);
        if (mag != 1 || i == 0)
            os << rat_to_string(mag);
        if (i > 0) {
            os << var;
            if (i > 1)
                os << "^" << i;
        }
    }
    return os.str();
}

namespace {

Polynomial from_coefficient_list(std::string_view text)
{
    std::vector<Rat> coeffs;
    std::size_t start = 0;
    const std::string s(text);
    while (start <= s.size()) {
        std::size_t comma = s.find(',', start);
        std::string item = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        coeffs.push_back(parse_rational(item));
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    return Polynomial(std::move(coeffs));
}

struct ExprParser {
    std::string_view s;
    std::size_t pos = 0;
    std::string var_name;

    void skip_ws()
    {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
            ++pos;
    }

    bool at_end()
    {
        skip_ws();
        return pos >= s.size();
    }

    char peek()
    {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    std::string read_number()
    {
        skip_ws();
        std::size_t begin = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            ++pos;
        if (pos < s.size() && (s[pos] == '.' || s[pos] == '/')) {
            char sep = s[pos];
            std::size_t save = pos++;
            std::size_t digits = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
                ++pos;
            if (pos == digits && sep == '/') { // "3/" with no denominator
                pos = save;
            }
        }
        return std::string(s.substr(begin, pos - begin));
    }

    std::string read_identifier()
    {
        skip_ws();
        std::size_t begin = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) {
            ++pos;
        }
        return std::string(s.substr(begin, pos - begin));
    }

    long read_exponent()
    {
        skip_ws();
        std::size_t begin = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            ++pos;
        if (pos == begin)
            throw ParseError("missing exponent after '^'");
        long e = std::stol(std::string(s.substr(begin, pos - begin)));
        if (e < 0 || e > 4096)
            throw ParseError("exponent out of range");
        return e;
    }

    /* term := coefficient? '*'? variable ('^' uint)?  |  coefficient */
    void read_term(int sign, std::vector<Rat>& coeffs)
    {
        Rat coefficient = sign;
        bool saw_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.') {
            coefficient *= parse_rational(read_number());
            saw_coeff = true;
            if (peek() == '*')
                ++pos;
        }
        long exponent = 0;
        if (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_') {
            std::string name = read_identifier();
            if (var_name.empty())
                var_name = name;
            else if (name != var_name)
                throw ParseError("more than one indeterminate: '" + var_name + "' and '" + name + "'");
            exponent = 1;
            if (peek() == '^') {
                ++pos;
                exponent = read_exponent();
            }
        } else if (!saw_coeff) {
            throw ParseError("expected a coefficient or a variable");
        }
        if (static_cast<std::size_t>(exponent) >= coeffs.size())
            coeffs.resize(exponent + 1, Rat(0));
        coeffs[exponent] += coefficient;
    }

    Polynomial parse()
    {
        std::vector<Rat> coeffs;
        int sign = 1;
        if (peek() == '+' || peek() == '-') {
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
        }
        read_term(sign, coeffs);
        while (!at_end()) {
            char op = peek();
            if (op != '+' && op != '-')
                throw ParseError(std::string("unexpected character '") + op + "' in polynomial");
            ++pos;
            read_term(op == '-' ? -1 : 1, coeffs);
        }
        return Polynomial(std::move(coeffs));
    }
};

} // namespace

Polynomial parse_polynomial(std::string_view text)
{
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    if (s.empty())
        throw ParseError("empty polynomial input");

    Polynomial p;
    if (s.find(',') != std::string_view::npos) {
        p = from_coefficient_list(s);
    } else {
        ExprParser parser{s, 0, {}};
        p = parser.parse();
    }
    if (p.is_zero())
        throw ParseError("zero polynomial");
    return p;
}

std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& f)
{
    if (f.is_zero() || f.degree() < 1)
        throw std::invalid_argument("squarefree decomposition requires degree >= 1");

    const Polynomial fp = f.derivative();
    Polynomial d = Polynomial::gcd(f, fp);
    std::vector<std::pair<Polynomial, int>> out;
    if (d.degree() == 0)
        return {{f.monic(), 1}};

    Polynomial b = Polynomial::div_exact(f, d).monic();
    Polynomial c = Polynomial::div_exact(fp, d);
    Polynomial e = c - b.derivative();
    for (int i = 1; b.degree() > 0; ++i) {
        Polynomial a = Polynomial::gcd(b, e);
        if (a.degree() > 0)
            out.emplace_back(a, i);
        b = Polynomial::div_exact(b, a).monic();
        c = Polynomial::div_exact(e, a);
        e = c - b.derivative();
    }

    int total = 0;
    for (const auto& [factor, mult] : out)
        total += factor.degree() * mult;
    assert(total == f.degree());
    return out;
}

} // namespace realroot
