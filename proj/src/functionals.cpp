#include "dplab/functionals.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "dplab/bounds.hpp"
#include "dplab/calculus.hpp"

namespace dplab {

FunctionalVec abs_functional(const FunctionalVec& phi) {
    FunctionalVec out = phi;
    for (double& w : out.weights) w = std::abs(w);
    return out;
}

std::pair<int, double> max_atom(const FunctionalVec& phi) {
    if (phi.weights.empty()) throw ValidationError("max_atom: empty functional");
    int best = 0;
    double best_val = std::abs(phi.weights[0]);
    for (int i = 1; i < phi.size(); ++i) {
        const double v = std::abs(phi.weights[i]);
        if (v > best_val) {
            best = i;
            best_val = v;
        }
    }
    return {best, best_val};
}

namespace {

constexpr int kMaxGapSupport = 20;

/// Worst penetration of a subset sum into the open interval (lo, hi).
double gap_penetration(const FunctionalVec& phi, double lo, double hi) {
    std::vector<double> mags;
    for (double w : phi.weights)
        if (w != 0.0) mags.push_back(std::abs(w));
    double worst = 0.0;
    const std::uint32_t count = 1u << mags.size();
    for (std::uint32_t mask = 0; mask < count; ++mask) {
        double s = 0.0;
        for (size_t j = 0; j < mags.size(); ++j)
            if (mask & (1u << j)) s += mags[j];
        if (s > lo && s < hi) worst = std::max(worst, std::min(s - lo, hi - s));
    }
    return worst;
}

}  // namespace

std::vector<Certificate> check_atom_lemmas(const FunctionalVec& phi, double eps) {
    const char* kExistence = "atom existence: max mass >= sqrt(1-4eps)";
    const char* kUnique = "unique dominant atom (eps < 2/9)";
    const char* kEven = "even-card mass: max >= (1+sqrt(1-4eps))/k";
    const char* kBand = "band mass: max >= (1+sqrt(1-4eps))/(2n)";
    const char* kGap = "gap: subset sums avoid the open middle interval";

    std::vector<Certificate> certs;
    const bool in_range = eps > 0.0 && eps < 0.25;
    const bool norm_one = in_range && std::abs(phi.norm() - 1.0) <= kCertTolerance;
    const bool dp = norm_one && epsilon_exact(phi) <= eps + kCertTolerance;
    if (!dp) {
        for (const char* src : {kExistence, kUnique, kEven, kBand, kGap})
            certs.push_back(Certificate::inapplicable(src));
        return certs;
    }

    const double root = std::sqrt(1.0 - 4.0 * eps);
    const double mass = max_atom(phi).second;

    certs.push_back(Certificate::check(kExistence, 0.0, root - mass));

    if (eps < BoundParams::kTwoNinths) {
        const double threshold = (1.0 + root) / 2.0;
        int count = 0;
        for (double w : phi.weights)
            if (std::abs(w) >= threshold - kCertTolerance) ++count;
        Certificate c = Certificate::check(kUnique, 0.0, std::abs(count - 1), 0.0);
        if (mass < threshold - kCertTolerance) c.status = CertStatus::fail;
        certs.push_back(c);
    } else {
        certs.push_back(Certificate::inapplicable(kUnique));
    }

    const int k = phi.size();
    if (k % 2 == 0) {
        certs.push_back(Certificate::check(kEven, 0.0, (1.0 + root) / k - mass));
    } else {
        certs.push_back(Certificate::inapplicable(kEven));
    }

    const int n = band_index(eps);
    if (k >= 2 * n) {
        certs.push_back(Certificate::check(kBand, 0.0, (1.0 + root) / (2.0 * n) - mass));
    } else {
        certs.push_back(Certificate::inapplicable(kBand));
    }

    int support = 0;
    for (double w : phi.weights)
        if (w != 0.0) ++support;
    if (support <= kMaxGapSupport) {
        const double lo = (1.0 - root) / 2.0;
        const double hi = (1.0 + root) / 2.0;
        certs.push_back(Certificate::check(kGap, 0.0, gap_penetration(phi, lo, hi)));
    } else {
        certs.push_back(Certificate::inapplicable(kGap));
    }
    return certs;
}

FunctionalVec extremal_functional(int card_x, double eps) {
    if (card_x < 2) throw ValidationError("extremal_functional: card X must be at least 2");
    if (!(eps > 0.0 && eps < 0.25))
        throw ValidationError("extremal_functional: eps must lie in (0, 1/4)");

    const int n = band_index(eps);
    const double root = std::sqrt(1.0 - 4.0 * eps);

    FunctionalVec phi;
    phi.weights.assign(card_x, 0.0);

    // The remainder entry is set to 1 minus the running sum so the norm is
    // exactly one.
    if (2 * n <= card_x) {
        const double w = (1.0 + root) / (2.0 * n);
        double partial = 0.0;
        for (int i = 0; i < 2 * n - 1; ++i) {
            phi.weights[i] = w;
            partial += w;
        }
        phi.weights[2 * n - 1] = 1.0 - partial;
    } else if (card_x % 2 == 0) {
        const double w = (1.0 + root) / card_x;
        double partial = 0.0;
        for (int i = 0; i < card_x - 1; ++i) {
            phi.weights[i] = w;
            partial += w;
        }
        phi.weights[card_x - 1] = 1.0 - partial;
    } else {
        const double w = 1.0 / card_x;
        double partial = 0.0;
        for (int i = 0; i < card_x - 1; ++i) {
            phi.weights[i] = w;
            partial += w;
        }
        phi.weights[card_x - 1] = 1.0 - partial;
    }

    for (double w : phi.weights)
        if (w < 0.0)
            throw ValidationError("extremal_functional: construction produced a negative weight");
    return phi;
}

}  // namespace dplab
