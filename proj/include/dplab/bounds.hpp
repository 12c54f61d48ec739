#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace dplab {

/// Cardinality of the domain space for bound formulas; the bound functions
/// are the only place where an infinite space is meaningful.
struct CardX {
    bool infinite = false;
    int k = 0;

    static CardX of(int k) { return {false, k}; }
    static CardX inf() { return {true, 0}; }
};

/// omega_n = (n^2 - 1) / (4 n^2); strictly increasing with limit 1/4.
double omega(int n);

/// The unique n >= 1 with omega(2n-1) <= eps < omega(2n+1), for eps in [0, 1/4).
int band_index(double eps);

/// The sharp stability/instability radius for functionals: three cases on
/// band_index(eps) versus the cardinality of X.
double o_X(double eps, CardX card);

/// The sharp instability radius for finite X (card >= 2), cased on the
/// parity of n and eps versus omega(n).
double o_prime_X(double eps, int n);

/// gamma(t) = t - sqrt(t^2 - 4 eps) on [2 sqrt(eps), 1]; strictly
/// decreasing, bounded above by 2 sqrt(eps).
double gamma(double t, double eps);

/// Derived thresholds for a defect level eps in (0, 1/4).
struct BoundParams {
    double eps;
    double two_sqrt_eps;
    double r9;   // sqrt(9 eps / 2)
    double r17;  // sqrt(17 eps / 2)

    explicit BoundParams(double eps);

    static constexpr double kQuarter = 0.25;
    static constexpr double kTwoNinths = 2.0 / 9.0;
    static constexpr double kTwoSeventeenths = 2.0 / 17.0;
};

struct BoundRow {
    double eps;
    double o_x;
    std::optional<double> o_prime_x;  // empty for infinite X
    double two_sqrt_eps;
    double r17;
    bool applicable_rz;  // the sqrt(17 eps / 2) bound needs eps < 2/17
};

/// One record per grid value; grid values must lie in (0, 1/4).
std::vector<BoundRow> bound_table(std::span<const double> eps_grid, CardX card);

/// CSV with header "eps,o_X,o_prime_X,two_sqrt_eps,r17,applicable_rz",
/// 12 significant digits.
std::string bound_table_csv(std::span<const double> eps_grid, CardX card);

/// Formats a double with 12 significant digits.
std::string format_g12(double v);

}  // namespace dplab
