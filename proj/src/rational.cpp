#include "realroot/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstddef>

#include "realroot/errors.hpp"

namespace realroot {

Rat rat_from_double(double x)
{
    if (!std::isfinite(x))
        throw NumericError("cannot convert non-finite double to rational");
    Rat q;
    mpq_set_d(q.get_mpq_t(), x); // exact
    return q;
}

double rat_to_double(const Rat& q)
{
    return q.get_d();
}

std::string rat_to_string(const Rat& q)
{
    return q.get_str(); // canonical, omits "/1"
}

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

} // namespace

Rat parse_rational(std::string_view text)
{
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    if (s.empty())
        throw ParseError("empty rational literal");

    bool negative = false;
    if (s.front() == '+' || s.front() == '-') {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty())
        throw ParseError("sign without digits in rational literal");

    const std::size_t slash = s.find('/');
    const std::size_t dot = s.find('.');
    Rat value;
    if (slash != std::string_view::npos) {
        std::string_view num = s.substr(0, slash);
        std::string_view den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw ParseError("malformed fraction '" + std::string(text) + "'");
        Int n(std::string(num), 10);
        Int d(std::string(den), 10);
        if (d == 0)
            throw ParseError("zero denominator in '" + std::string(text) + "'");
        value = Rat(n) / Rat(d);
    } else if (dot != std::string_view::npos) {
        std::string_view whole = s.substr(0, dot);
        std::string_view frac = s.substr(dot + 1);
        if (whole.empty() && frac.empty())
            throw ParseError("malformed decimal '" + std::string(text) + "'");
        if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)))
            throw ParseError("malformed decimal '" + std::string(text) + "'");
        Int scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i)
            scale *= 10;
        Int n = whole.empty() ? Int(0) : Int(std::string(whole), 10);
        Int f = frac.empty() ? Int(0) : Int(std::string(frac), 10);
        value = Rat(n * scale + f) / Rat(scale);
    } else {
        if (!all_digits(s))
            throw ParseError("malformed integer '" + std::string(text) + "'");
        value = Rat(Int(std::string(s), 10));
    }
    value.canonicalize();
    return negative ? Rat(-value) : value;
}

} // namespace realroot
