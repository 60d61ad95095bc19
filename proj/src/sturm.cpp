#include "realroot/sturm.hpp"

#include <stdexcept>
#include <vector>

namespace realroot {

namespace {

int sign_of(const Rat& q)
{
    return sgn(q);
}

int variations(const std::vector<int>& signs)
{
    int count = 0;
    int prev = 0;
    for (int s : signs) {
        if (s == 0)
            continue;
        if (prev != 0 && s != prev)
            ++count;
        prev = s;
    }
    return count;
}

} // namespace

SturmCount sturm_real_root_count(const Polynomial& f)
{
    if (f.is_zero())
        throw std::invalid_argument("Sturm count of the zero polynomial");
    if (f.degree() < 1)
        throw std::invalid_argument("Sturm count requires degree >= 1");

    const Polynomial g = Polynomial::div_exact(f, Polynomial::gcd(f, f.derivative()));

    std::vector<Polynomial> chain;
    chain.push_back(g);
    chain.push_back(g.derivative());
    while (!chain.back().is_zero() && chain.back().degree() >= 0) {
        const Polynomial& a = chain[chain.size() - 2];
        const Polynomial& b = chain.back();
        if (b.degree() == 0)
            break;
        Polynomial r = -Polynomial::div_mod(a, b).second;
        if (r.is_zero())
            break; // g squarefree: only at the constant end
        chain.push_back(std::move(r));
    }

    std::vector<int> at_minus_inf, at_plus_inf;
    at_minus_inf.reserve(chain.size());
    at_plus_inf.reserve(chain.size());
    for (const Polynomial& p : chain) {
        if (p.is_zero())
            continue;
        const int lc = sign_of(p.leading());
        at_plus_inf.push_back(lc);
        at_minus_inf.push_back(p.degree() % 2 == 0 ? lc : -lc);
    }

    SturmCount out;
    out.distinct_total = g.degree();
    out.distinct_real = variations(at_minus_inf) - variations(at_plus_inf);
    return out;
}

} // namespace realroot
