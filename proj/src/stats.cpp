#include "ccmc/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace ccmc {

namespace {

// Series expansion of P(a,x), valid for x < a + 1.
double gamma_p_series(double a, double x) {
    double term = 1.0 / a;
    double sum = term;
    double ap = a;
    for (int i = 0; i < 500; ++i) {
        ap += 1.0;
        term *= x / ap;
        sum += term;
        if (std::fabs(term) < std::fabs(sum) * 1e-16)
            break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Lentz continued fraction for Q(a,x), valid for x >= a + 1.
double gamma_q_cf(double a, double x) {
    constexpr double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 500; ++i) {
        const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny)
            d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny)
            c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::fabs(delta - 1.0) < 1e-16)
            break;
    }
    return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

} // namespace

double regularized_gamma_lower(double a, double x) {
    if (a <= 0.0 || x < 0.0)
        throw std::invalid_argument("gamma arguments out of domain");
    if (x == 0.0)
        return 0.0;
    return (x < a + 1.0) ? gamma_p_series(a, x) : 1.0 - gamma_q_cf(a, x);
}

double regularized_gamma_upper(double a, double x) {
    if (a <= 0.0 || x < 0.0)
        throw std::invalid_argument("gamma arguments out of domain");
    if (x == 0.0)
        return 1.0;
    return (x < a + 1.0) ? 1.0 - gamma_p_series(a, x) : gamma_q_cf(a, x);
}

double chi_square_upper_tail(double x, double df) {
    if (x <= 0.0)
        return 1.0;
    return regularized_gamma_upper(df / 2.0, x / 2.0);
}

KruskalWallisResult kruskal_wallis(const std::vector<std::vector<double>>& groups) {
    if (groups.size() < 2)
        throw std::invalid_argument("Kruskal-Wallis needs at least two groups");
    std::size_t total = 0;
    for (const auto& g : groups) {
        if (g.empty())
            throw std::invalid_argument("Kruskal-Wallis groups must be nonempty");
        total += g.size();
    }

    struct Tagged {
        double value;
        std::size_t group;
    };
    std::vector<Tagged> pooled;
    pooled.reserve(total);
    for (std::size_t gi = 0; gi < groups.size(); ++gi)
        for (double v : groups[gi])
            pooled.push_back({v, gi});
    std::sort(pooled.begin(), pooled.end(),
              [](const Tagged& a, const Tagged& b) { return a.value < b.value; });

    // Average ranks within tie runs; accumulate the tie correction term.
    std::vector<double> rank_sum(groups.size(), 0.0);
    double tie_term = 0.0;
    std::size_t i = 0;
    while (i < pooled.size()) {
        std::size_t j = i;
        while (j < pooled.size() && pooled[j].value == pooled[i].value)
            ++j;
        const double run = static_cast<double>(j - i);
        const double avg_rank = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
        for (std::size_t k = i; k < j; ++k)
            rank_sum[pooled[k].group] += avg_rank;
        tie_term += run * run * run - run;
        i = j;
    }

    const double n = static_cast<double>(total);
    double h = 0.0;
    for (std::size_t gi = 0; gi < groups.size(); ++gi)
        h += rank_sum[gi] * rank_sum[gi] / static_cast<double>(groups[gi].size());
    h = 12.0 / (n * (n + 1.0)) * h - 3.0 * (n + 1.0);

    const double correction = 1.0 - tie_term / (n * n * n - n);
    if (correction <= 0.0)
        return {0.0, 1.0}; // all observations tied
    h /= correction;

    const double df = static_cast<double>(groups.size() - 1);
    return {h, chi_square_upper_tail(h, df)};
}

} // namespace ccmc
