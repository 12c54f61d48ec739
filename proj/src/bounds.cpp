#include "dplab/bounds.hpp"

#include <cmath>
#include <cstdio>

#include "dplab/model.hpp"

namespace dplab {

double omega(int n) {
    if (n < 1) throw ValidationError("omega: n must be positive");
    const double nn = static_cast<double>(n) * n;
    return (nn - 1.0) / (4.0 * nn);
}

int band_index(double eps) {
    if (!(eps >= 0.0 && eps < 0.25))
        throw ValidationError("band_index: eps must lie in [0, 1/4)");
    int n = 1;
    while (eps >= omega(2 * n + 1)) ++n;
    return n;
}

double o_X(double eps, CardX card) {
    if (!(eps > 0.0 && eps < 0.25))
        throw ValidationError("o_X: eps must lie in (0, 1/4)");
    if (!card.infinite && card.k < 2)
        throw ValidationError("o_X: card X must be at least 2");
    const int n = band_index(eps);
    const double root = std::sqrt(1.0 - 4.0 * eps);
    if (card.infinite || 2 * n <= card.k) return (2.0 * n - 1.0 - root) / (2.0 * n);
    const int k = card.k;
    if (k % 2 == 0) return (k - 1.0 - root) / k;
    return (k - 1.0) / k;
}

double o_prime_X(double eps, int n) {
    if (!(eps > 0.0 && eps < 0.25))
        throw ValidationError("o_prime_X: eps must lie in (0, 1/4)");
    if (n < 2) throw ValidationError("o_prime_X: card X must be at least 2");
    if (n % 2 == 0) return 2.0 * (n - 1.0) * std::sqrt(eps) / n;
    if (eps <= omega(n)) return 2.0 * std::sqrt((n - 1.0) * eps / (n + 1.0));
    return (n - 1.0) / n;
}

double gamma(double t, double eps) {
    if (!(eps > 0.0 && eps < 0.25))
        throw ValidationError("gamma: eps must lie in (0, 1/4)");
    const double lo = 2.0 * std::sqrt(eps);
    if (!(t >= lo && t <= 1.0))
        throw ValidationError("gamma: t must lie in [2 sqrt(eps), 1]");
    // Factored radicand so the radical vanishes exactly at t = 2 sqrt(eps).
    return t - std::sqrt(std::max((t - lo) * (t + lo), 0.0));
}

BoundParams::BoundParams(double e) : eps(e) {
    if (!(eps > 0.0 && eps < kQuarter))
        throw ValidationError("BoundParams: eps must lie in (0, 1/4)");
    two_sqrt_eps = 2.0 * std::sqrt(eps);
    r9 = std::sqrt(9.0 * eps / 2.0);
    r17 = std::sqrt(17.0 * eps / 2.0);
}

std::vector<BoundRow> bound_table(std::span<const double> eps_grid, CardX card) {
    std::vector<BoundRow> rows;
    rows.reserve(eps_grid.size());
    for (double eps : eps_grid) {
        if (!(eps > 0.0 && eps < 0.25))
            throw ValidationError("bound_table: grid values must lie in (0, 1/4)");
        BoundRow row;
        row.eps = eps;
        row.o_x = o_X(eps, card);
        if (!card.infinite) row.o_prime_x = o_prime_X(eps, card.k);
        row.two_sqrt_eps = 2.0 * std::sqrt(eps);
        row.r17 = std::sqrt(17.0 * eps / 2.0);
        row.applicable_rz = eps < BoundParams::kTwoSeventeenths;
        rows.push_back(row);
    }
    return rows;
}

std::string format_g12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string bound_table_csv(std::span<const double> eps_grid, CardX card) {
    std::string out = "eps,o_X,o_prime_X,two_sqrt_eps,r17,applicable_rz\n";
    for (const auto& row : bound_table(eps_grid, card)) {
        out += format_g12(row.eps);
        out += ',';
        out += format_g12(row.o_x);
        out += ',';
        if (row.o_prime_x) out += format_g12(*row.o_prime_x);
        out += ',';
        out += format_g12(row.two_sqrt_eps);
        out += ',';
        out += format_g12(row.r17);
        out += ',';
        out += row.applicable_rz ? "1" : "0";
        out += '\n';
    }
    return out;
}

}  // namespace dplab
