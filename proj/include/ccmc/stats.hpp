#pragma once

#include <vector>

namespace ccmc {

// Regularized incomplete gamma functions P(a,x) and Q(a,x) = 1 - P(a,x).
double regularized_gamma_lower(double a, double x);
double regularized_gamma_upper(double a, double x);

// Upper-tail probability of a chi-square variable with df degrees of freedom.
double chi_square_upper_tail(double x, double df);

struct KruskalWallisResult {
    double h = 0.0;
    double p_value = 1.0;
};

// Kruskal-Wallis H test with average ranks for ties and the standard tie
// correction; p-value from the chi-square upper tail with (groups - 1)
// degrees of freedom. When every observation is identical the statistic is
// undefined and the result is reported as p = 1.
KruskalWallisResult kruskal_wallis(const std::vector<std::vector<double>>& groups);

} // namespace ccmc
