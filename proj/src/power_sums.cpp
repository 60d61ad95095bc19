#include "realroot/power_sums.hpp"

#include <stdexcept>

namespace realroot {

PowerSums power_sums(const Polynomial& f, int k_max)
{
    if (f.is_zero())
        throw std::invalid_argument("power sums of the zero polynomial");
    const int n = f.degree();
    if (n < 1)
        throw std::invalid_argument("power sums require degree >= 1");
    if (k_max < 0)
        throw std::invalid_argument("negative power-sum index");

    /* Elementary symmetric functions of the roots from the monic
     * normalization: e_k = (-1)^k c_{n-k} / c_n. */
    std::vector<Rat> e(static_cast<std::size_t>(n) + 1);
    e[0] = 1;
    for (int k = 1; k <= n; ++k) {
        e[k] = f.coeff(n - k) / f.leading();
        if (k & 1)
            e[k] = -e[k];
    }

    PowerSums out;
    out.source_degree = n;
    out.values.resize(static_cast<std::size_t>(k_max) + 1);
    out.values[0] = n;
    for (int k = 1; k <= k_max; ++k) {
        Rat s = 0;
        const int top = std::min(k - 1, n);
        for (int i = 1; i <= top; ++i) {
            Rat term = e[i] * out.values[k - i];
            s += (i & 1) ? term : -term;
        }
        if (k <= n) {
            Rat tail = Rat(k) * e[k];
            s += (k & 1) ? tail : -tail;
        }
        out.values[k] = s;
    }
    return out;
}

} // namespace realroot
