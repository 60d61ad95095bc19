#include "realroot/psd.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include <json.hpp>

#include "realroot/power_sums.hpp"
#include "realroot/rng.hpp"

namespace realroot {

HermiteMatrix hermite_matrix(const Polynomial& f)
{
    if (f.is_zero())
        throw std::invalid_argument("Hermite matrix of the zero polynomial");
    const int n = f.degree();
    if (n < 1)
        throw std::invalid_argument("Hermite matrix requires degree >= 1");
    const PowerSums p = power_sums(f, 2 * n - 2);
    HermiteMatrix H;
    H.n = n;
    H.entries.resize(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            H.at(i, j) = p.p(i + j);
    return H;
}

std::vector<Rat> principal_minor_sums(const HermiteMatrix& H)
{
    const int n = H.n;
    if (n < 1 || H.entries.size() != static_cast<std::size_t>(n) * n)
        throw std::invalid_argument("malformed matrix");

    /* Faddeev-LeVerrier in the det(tI - H) = t^n + a_1 t^{n-1} + ...
     * convention: a_k = -tr(M_k)/k with M_1 = H and
     * M_{k+1} = H (M_k + a_k I). The principal-minor sums are then
     * c_k = (-1)^k a_k. */
    std::vector<Rat> M(H.entries);
    std::vector<Rat> c(n);
    for (int k = 1; k <= n; ++k) {
        Rat trace = 0;
        for (int i = 0; i < n; ++i)
            trace += M[static_cast<std::size_t>(i) * n + i];
        Rat ak = -trace / k;
        c[k - 1] = (k & 1) ? Rat(-ak) : ak;
        if (k == n)
            break;
        for (int i = 0; i < n; ++i)
            M[static_cast<std::size_t>(i) * n + i] += ak;
        std::vector<Rat> next(static_cast<std::size_t>(n) * n, Rat(0));
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < n; ++l) {
                const Rat& h = H.at(i, l);
                if (h == 0)
                    continue;
                for (int j = 0; j < n; ++j)
                    next[static_cast<std::size_t>(i) * n + j] +=
                        h * M[static_cast<std::size_t>(l) * n + j];
            }
        M = std::move(next);
    }
    return c;
}

bool is_psd_exact(const HermiteMatrix& H)
{
    const int n = H.n;
    if (n < 1 || H.entries.size() != static_cast<std::size_t>(n) * n)
        throw std::invalid_argument("malformed matrix");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (H.at(i, j) != H.at(j, i))
                throw std::invalid_argument("matrix is not symmetric");

    for (const Rat& ck : principal_minor_sums(H))
        if (ck < 0)
            return false;
    return true;
}

bool classify_real_rooted(const Polynomial& f)
{
    return is_psd_exact(hermite_matrix(f));
}

std::string hermite_to_json(const HermiteMatrix& H, int indent)
{
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < H.n; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < H.n; ++j)
            row.push_back(rat_to_string(H.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows.dump(indent);
}

namespace {

struct FlatForm {
    int nvars;
    std::vector<std::pair<Exponents, double>> terms;
};

FlatForm flatten(const MAdicForm& form)
{
    FlatForm flat;
    flat.nvars = form.nvars;
    flat.terms.reserve(form.terms.size());
    for (const auto& [alpha, coeff] : form.terms)
        flat.terms.emplace_back(alpha, rat_to_double(coeff));
    return flat;
}

double eval_flat(const FlatForm& form, const std::vector<double>& x)
{
    double acc = 0.0;
    for (const auto& [alpha, coeff] : form.terms) {
        double term = coeff;
        for (int j = 0; j < form.nvars; ++j)
            for (int k = 0; k < alpha[j]; ++k)
                term *= x[j];
        acc += term;
    }
    return acc;
}

std::vector<double> gradient_flat(const FlatForm& form, const std::vector<double>& x)
{
    std::vector<double> g(form.nvars, 0.0);
    for (const auto& [alpha, coeff] : form.terms) {
        for (int j = 0; j < form.nvars; ++j) {
            if (alpha[j] == 0)
                continue;
            double term = coeff * alpha[j];
            for (int l = 0; l < form.nvars; ++l) {
                int e = alpha[l] - (l == j ? 1 : 0);
                for (int k = 0; k < e; ++k)
                    term *= x[l];
            }
            g[j] += term;
        }
    }
    return g;
}

void normalize(std::vector<double>& x)
{
    double norm = 0.0;
    for (double v : x)
        norm += v * v;
    norm = std::sqrt(norm);
    if (norm == 0.0) {
        x[0] = 1.0;
        return;
    }
    for (double& v : x)
        v /= norm;
}

} // namespace

SphereMinimum estimate_min_on_sphere(const MAdicForm& form, const SphereSearchOptions& options)
{
    if (form.nvars < 1)
        throw std::invalid_argument("sphere search needs at least one variable");
    const FlatForm flat = flatten(form);
    const int n = form.nvars;

    SphereMinimum best;
    bool have_best = false;
    auto consider = [&](const std::vector<double>& x) {
        const double v = eval_flat(flat, x);
        if (!have_best || v < best.min_value) {
            best.min_value = v;
            best.argmin = x;
            have_best = true;
        }
    };

    // deterministic coverage of the axes before any descent
    for (int j = 0; j < n; ++j) {
        std::vector<double> axis(n, 0.0);
        axis[j] = 1.0;
        consider(axis);
        axis[j] = -1.0;
        consider(axis);
    }

    for (int restart = 0; restart < options.restarts; ++restart) {
        std::mt19937_64 rng(derive_seed(options.seed, static_cast<std::uint64_t>(restart)));
        std::normal_distribution<double> gauss(0.0, 1.0);
        std::vector<double> x(n);
        for (double& v : x)
            v = gauss(rng);
        normalize(x);

        double fx = eval_flat(flat, x);
        double step = options.step_size;
        for (int iter = 0; iter < options.steps; ++iter) {
            std::vector<double> g = gradient_flat(flat, x);
            double dot = 0.0;
            for (int j = 0; j < n; ++j)
                dot += g[j] * x[j];
            double tangent_norm2 = 0.0;
            for (int j = 0; j < n; ++j) {
                g[j] -= dot * x[j];
                tangent_norm2 += g[j] * g[j];
            }
            if (tangent_norm2 <= 1e-28 * (1.0 + fx * fx))
                break;

            bool moved = false;
            while (step > 1e-12) {
                std::vector<double> y(n);
                for (int j = 0; j < n; ++j)
                    y[j] = x[j] - step * g[j];
                normalize(y);
                const double fy = eval_flat(flat, y);
                if (fy < fx) {
                    x = std::move(y);
                    fx = fy;
                    step = std::min(step * 1.5, 4.0 * options.step_size);
                    moved = true;
                    break;
                }
                step *= 0.5;
            }
            if (!moved)
                break;
        }
        consider(x);
        if (fx < best.min_value) {
            best.min_value = fx;
            best.argmin = x;
        }
    }
    return best;
}

SphereMinimum estimate_min_on_sphere(const MAdicForm& form, int restarts, int steps,
                                     std::uint64_t seed)
{
    SphereSearchOptions options;
    options.restarts = restarts;
    options.steps = steps;
    options.seed = seed;
    return estimate_min_on_sphere(form, options);
}

} // namespace realroot
