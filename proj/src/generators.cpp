#include "dplab/generators.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <string>

#include "dplab/bounds.hpp"
#include "dplab/calculus.hpp"
#include "dplab/functionals.hpp"

namespace dplab {

namespace {

int sgn(double t) { return t > 0.0 ? 1 : (t < 0.0 ? -1 : 0); }

std::string fmt(double v) { return format_g12(v); }

/// Point registry for generators that share endpoints between segments.
class PointSet {
public:
    int add(const std::string& name) {
        auto [it, inserted] = index_.try_emplace(name, static_cast<int>(points_.size()));
        if (inserted) points_.push_back(name);
        return it->second;
    }
    int at(const std::string& name) const { return index_.at(name); }
    std::vector<std::string> take() { return std::move(points_); }

private:
    std::vector<std::string> points_;
    std::map<std::string, int> index_;
};

/// A chain of m point indices from `from` to `to` with m-2 fresh interior
/// points named after the pair.
std::vector<int> make_chain(PointSet& ps, const std::string& from, const std::string& to,
                            int m) {
    std::vector<int> chain;
    chain.push_back(ps.add(from));
    for (int i = 1; i + 1 < m; ++i)
        chain.push_back(ps.add(from + ">" + to + "[" + std::to_string(i) + "]"));
    if (m >= 2) chain.push_back(ps.add(to));
    return chain;
}

/// Same for Y: appends fresh vertices and path edges, reusing endpoints.
std::vector<int> make_y_chain(PointSet& ps, TopGraphY& graph, const std::string& from,
                              const std::string& to, int m) {
    auto chain = make_chain(ps, from, to, m);
    for (size_t i = 0; i + 1 < chain.size(); ++i)
        if (chain[i] != chain[i + 1]) graph.edges.emplace_back(chain[i], chain[i + 1]);
    return chain;
}

}  // namespace

InstanceBundle gen_recero(int n, double eps, int m) {
    if (n < 2) throw ValidationError("gen_recero: n must be at least 2");
    if (m < 2) throw ValidationError("gen_recero: path length must be at least 2");
    if (!(eps > 0.0 && eps < 0.25))
        throw ValidationError("gen_recero: eps must lie in (0, 1/4)");

    double peak;
    double expected_eps;
    if (n % 2 == 1) {
        peak = std::min(2.0 * n * std::sqrt(eps) / std::sqrt(n * n - 1.0), 1.0);
        expected_eps = std::min(eps, omega(n));
    } else {
        peak = 2.0 * std::sqrt(eps);
        expected_eps = eps;
    }

    InstanceBundle bundle;
    for (int i = 0; i < n; ++i) bundle.op.space.points.push_back("x" + std::to_string(i + 1));
    bundle.op.graph = make_path_y(m);
    bundle.op.rows.assign(m, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i) bundle.op.rows[0][i] = peak / n;
    bundle.op.rows[m - 1][0] = 1.0;

    bundle.expected_eps = expected_eps;
    bundle.expected_dist = o_prime_X(eps, n);
    bundle.provenance =
        "recero(n=" + std::to_string(n) + ",eps=" + fmt(eps) + ",m=" + std::to_string(m) + ")";
    validate(bundle.op);
    return bundle;
}

InstanceBundle gen_interval(double eps, int m) {
    if (!(eps > 0.0 && eps < 0.25))
        throw ValidationError("gen_interval: eps must lie in (0, 1/4)");
    if (m < 3 || m % 2 == 0)
        throw ValidationError("gen_interval: mesh size must be odd and at least 3");

    const double two_sqrt_eps = 2.0 * std::sqrt(eps);
    const double beta_top = 1.0 / std::sqrt(1.0 - 4.0 * eps);

    InstanceBundle bundle;
    bundle.op.space.points = {"A", "B"};
    bundle.op.graph = make_path_y(m);
    bundle.op.rows.assign(m, std::vector<double>(2, 0.0));
    for (int j = 0; j < m; ++j) {
        const double t = 2.0 * j / (m - 1) - 1.0;
        const double at = std::abs(t);
        const double alpha = two_sqrt_eps + (1.0 - two_sqrt_eps) * at;
        const double beta = 1.0 + (beta_top - 1.0) * at;
        double swing = beta * std::sqrt(std::max(alpha * alpha - 4.0 * eps, 0.0));
        if (swing > alpha * (1.0 + 1e-9))
            throw ValidationError("gen_interval: profile violates beta*sqrt(alpha^2-4eps) <= alpha");
        swing = at == 1.0 ? alpha : std::min(swing, alpha);
        bundle.op.rows[j][0] = (alpha + sgn(t) * swing) / 2.0;
        bundle.op.rows[j][1] = (alpha - sgn(t) * swing) / 2.0;
    }

    bundle.expected_eps = eps;
    bundle.expected_dist = two_sqrt_eps;
    bundle.provenance = "interval(eps=" + fmt(eps) + ",m=" + std::to_string(m) + ")";
    validate(bundle.op);
    return bundle;
}

namespace {

InstanceBundle build_tripod(int n, int m, bool weighted) {
    if (n < 1) throw ValidationError("gen_tripod: n must be positive");
    if (m < 2) throw ValidationError("gen_tripod: mesh size must be at least 2");

    const std::string ns = std::to_string(n);
    const std::array<std::string, 3> letters{"A", "B", "C"};
    const double rho_low = 3.0 / std::sqrt(17.0);

    // Domain: three interlocked tripods sharing the base leaves, plus the
    // outer legs carried over from the codomain and the displaced legs.
    PointSet xs;
    // center of tripod w and its leaf for letter e: tripod 0 holds the
    // displaced A-leaf, tripod 1 the displaced B-leaf, tripod 2 the C one.
    auto leaf = [&](int w, int e) {
        return e == w ? letters[e] + ns : letters[e] + "0";
    };
    std::array<std::array<std::vector<int>, 3>, 3> tripod_leg;
    for (int w = 0; w < 3; ++w)
        for (int e = 0; e < 3; ++e)
            tripod_leg[w][e] = make_chain(xs, "D" + std::to_string(w), leaf(w, e), m);
    std::array<std::vector<int>, 3> x_outer1, x_outer2, x_displaced;
    for (int e = 0; e < 3; ++e) {
        x_outer1[e] = make_chain(xs, letters[e] + "0", letters[e] + "0'", m);
        x_outer2[e] = make_chain(xs, letters[e] + "0'", letters[e] + "0''", m);
        x_displaced[e] = make_chain(xs, letters[e] + ns, letters[e] + ns + "'", m);
    }

    // Codomain: the central tripod with its three outer legs.
    PointSet ys;
    TopGraphY graph;
    std::array<std::vector<int>, 3> y_leg, y_outer1, y_outer2;
    for (int e = 0; e < 3; ++e) y_leg[e] = make_y_chain(ys, graph, "D0", letters[e] + "0", m);
    for (int e = 0; e < 3; ++e) {
        y_outer1[e] = make_y_chain(ys, graph, letters[e] + "0", letters[e] + "0'", m);
        y_outer2[e] = make_y_chain(ys, graph, letters[e] + "0'", letters[e] + "0''", m);
    }
    graph.vertices = ys.take();

    InstanceBundle bundle;
    bundle.op.space.points = xs.take();
    bundle.op.graph = graph;
    bundle.op.rows.assign(graph.size(), std::vector<double>(bundle.op.space.points.size(), 0.0));

    // Averaging rows along the central legs; the shared center row is
    // written by the first leg only.
    for (int e = 0; e < 3; ++e) {
        for (int i = (e == 0 ? 0 : 1); i < m; ++i) {
            auto& row = bundle.op.rows[y_leg[e][i]];
            const double w = weighted ? rho_low / 3.0 : 1.0 / 3.0;
            for (int t = 0; t < 3; ++t) row[tripod_leg[t][e][i]] += w;
        }
    }
    // Interpolation rows on the first outer segment: zeta at the carried
    // point, 1 - zeta at the displaced leg.
    for (int e = 0; e < 3; ++e) {
        for (int i = 1; i < m; ++i) {
            const double t = static_cast<double>(i) / (m - 1);
            const double zeta = (2.0 + t) / 3.0;
            const double rho = weighted ? rho_low : 1.0;
            auto& row = bundle.op.rows[y_outer1[e][i]];
            row[x_outer1[e][i]] = rho * zeta;
            row[x_displaced[e][i]] = rho * (1.0 - zeta);
        }
    }
    // Coordinate rows on the second outer segment; the weight profile
    // climbs linearly from 3/sqrt(17) to 1 there.
    for (int e = 0; e < 3; ++e) {
        for (int i = 1; i < m; ++i) {
            const double t = static_cast<double>(i) / (m - 1);
            const double rho = weighted ? rho_low + t * (1.0 - rho_low) : 1.0;
            bundle.op.rows[y_outer2[e][i]][x_outer2[e][i]] = rho;
        }
    }

    bundle.expected_eps = weighted ? 2.0 / 17.0 : 2.0 / 9.0;
    bundle.provenance = std::string(weighted ? "tripod-weighted" : "tripod") + "(n=" + ns +
                        ",m=" + std::to_string(m) + ")";
    validate(bundle.op);
    return bundle;
}

}  // namespace

InstanceBundle gen_tripod(int n, int m) { return build_tripod(n, m, false); }

InstanceBundle gen_tripod_weighted(int n, int m) { return build_tripod(n, m, true); }

InstanceBundle gen_circles(int circles, int m, std::optional<double> eps) {
    if (circles < 1) throw ValidationError("gen_circles: need at least one circle");
    if (m < 4 || m % 2 != 0)
        throw ValidationError("gen_circles: mesh per circle must be even and at least 4");

    const double half_sqrt2 = std::sqrt(2.0) / 2.0;
    const double pi0 = 0.5 - std::sqrt(2.0) / 4.0;
    const int n_points = 2 * circles + 1;
    const int inf_index = 2 * circles;

    InstanceBundle bundle;
    for (int j = 1; j <= 2 * circles; ++j)
        bundle.op.space.points.push_back(std::to_string(j));
    bundle.op.space.points.push_back("inf");

    PointSet ys;
    TopGraphY graph;
    std::vector<std::vector<double>> rows;
    auto add_vertex = [&](const std::string& name, std::vector<double> row) {
        ys.add(name);
        rows.push_back(std::move(row));
        return static_cast<int>(rows.size()) - 1;
    };

    const int q = m / 2;  // edges per joining segment
    for (int c = 1; c <= circles; ++c) {
        const int even_idx = 2 * c - 1;  // point "2c"
        const int odd_idx = 2 * c - 2;   // point "2c-1"
        int first = -1, prev = -1;
        for (int j = 0; j < m; ++j) {
            const double u = static_cast<double>(j) / m;
            const double alpha = pi0 * (1.0 - std::abs(2.0 * u - 1.0));
            std::vector<double> row(n_points, 0.0);
            row[even_idx] = alpha + half_sqrt2;
            row[odd_idx] = -alpha;
            const int v = add_vertex("C" + std::to_string(c) + "[" + std::to_string(j) + "]",
                                     std::move(row));
            if (j == 0) first = v;
            if (prev >= 0) graph.edges.emplace_back(prev, v);
            prev = v;
        }
        graph.edges.emplace_back(prev, first);
    }
    // Joining path: from each circle's attachment vertex toward the next
    // circle, then toward the terminal vertex.
    for (int c = 1; c <= circles; ++c) {
        const int from_idx = 2 * c - 1;                                    // point "2c"
        const int to_idx = c < circles ? 2 * c + 1 : inf_index;            // "2c+2" or "inf"
        int prev = ys.at("C" + std::to_string(c) + "[0]");
        for (int i = 1; i < q; ++i) {
            const double t = 1.0 - static_cast<double>(i) / q;
            std::vector<double> row(n_points, 0.0);
            row[from_idx] = half_sqrt2 * t;
            row[to_idx] = half_sqrt2 * (1.0 - t);
            const int v = add_vertex("P" + std::to_string(c) + "[" + std::to_string(i) + "]",
                                     std::move(row));
            graph.edges.emplace_back(prev, v);
            prev = v;
        }
        int next;
        if (c < circles) {
            next = ys.at("C" + std::to_string(c + 1) + "[0]");
        } else {
            std::vector<double> row(n_points, 0.0);
            row[inf_index] = half_sqrt2;
            next = add_vertex("O", std::move(row));
        }
        graph.edges.emplace_back(prev, next);
    }

    graph.vertices = ys.take();
    bundle.op.graph = graph;
    bundle.op.rows = std::move(rows);
    bundle.expected_eps = 0.125;
    bundle.provenance =
        "circles(N=" + std::to_string(circles) + ",m=" + std::to_string(m) + ")";
    validate(bundle.op);

    if (eps) {
        if (!(*eps > 0.0 && *eps < 0.125))
            throw ValidationError("gen_circles: scaled eps must lie in (0, 1/8)");
        InstanceBundle scaled = gen_scaled(bundle, *eps);
        scaled.provenance = "circles(N=" + std::to_string(circles) +
                            ",m=" + std::to_string(m) + ",eps=" + fmt(*eps) + ")";
        return scaled;
    }
    return bundle;
}

InstanceBundle gen_scaled(const InstanceBundle& base, double eps_target) {
    validate(base.op);
    const double eps_base =
        base.expected_eps ? *base.expected_eps : epsilon_exact(base.op).eps;
    if (!(eps_base > 0.0))
        throw ValidationError("gen_scaled: base instance must have a positive defect");
    if (!(eps_target > 0.0) || eps_target > eps_base)
        throw ValidationError("gen_scaled: target eps must lie in (0, eps_base]");
    const double gamma = std::sqrt(eps_target / eps_base);

    InstanceBundle bundle;
    bundle.op.space = base.op.space;
    std::string star = "*";
    while (std::count(bundle.op.space.points.begin(), bundle.op.space.points.end(), star))
        star += "*";
    bundle.op.space.points.push_back(star);
    bundle.op.graph = base.op.graph;
    bundle.op.graph.vertices.push_back(star);

    const int k = base.op.domain_size();
    for (const auto& row : base.op.rows) {
        std::vector<double> scaled(k + 1, 0.0);
        for (int i = 0; i < k; ++i) scaled[i] = gamma * row[i];
        bundle.op.rows.push_back(std::move(scaled));
    }
    std::vector<double> identity(k + 1, 0.0);
    identity[k] = 1.0;
    bundle.op.rows.push_back(std::move(identity));

    bundle.expected_eps = eps_target;
    if (base.expected_dist) bundle.expected_dist = gamma * *base.expected_dist;
    bundle.provenance = "scaled(" + base.provenance + ",eps=" + fmt(eps_target) + ")";
    validate(bundle.op);
    return bundle;
}

InstanceBundle functional_instance(const FunctionalVec& phi,
                                   std::optional<double> expected_dist,
                                   const std::string& provenance) {
    InstanceBundle bundle;
    bundle.op = as_singleton_operator(phi);
    bundle.expected_dist = expected_dist;
    bundle.provenance = provenance;
    return bundle;
}

std::vector<InstanceBundle> standard_catalog() {
    std::vector<InstanceBundle> catalog;

    for (int n : {2, 3, 4, 5})
        for (double eps : {0.04, 0.1, 0.23})
            catalog.push_back(gen_recero(n, eps, 3));

    for (double eps : {0.01, 0.04, 0.09, 0.16, 0.2})
        catalog.push_back(gen_interval(eps, 41));

    catalog.push_back(gen_tripod(1, 4));
    catalog.push_back(gen_tripod(2, 8));
    catalog.push_back(gen_tripod_weighted(1, 4));
    catalog.push_back(gen_tripod_weighted(2, 8));

    catalog.push_back(gen_circles(1, 16));
    catalog.push_back(gen_circles(2, 16));
    catalog.push_back(gen_circles(1, 16, 0.05));

    for (int k : {2, 3, 4, 5})
        for (double eps : {0.05, 0.2}) {
            const auto phi = extremal_functional(k, eps);
            catalog.push_back(functional_instance(
                phi, o_X(eps, CardX::of(k)),
                "extremal-functional(k=" + std::to_string(k) + ",eps=" + fmt(eps) + ")"));
        }

    catalog.push_back(gen_scaled(gen_tripod(1, 4), 0.1));
    catalog.push_back(gen_scaled(gen_tripod_weighted(1, 4), 0.1));
    catalog.push_back(gen_scaled(gen_tripod_weighted(2, 8), 0.05));
    catalog.push_back(gen_scaled(gen_circles(1, 16), 0.1));
    catalog.push_back(gen_scaled(
        functional_instance(extremal_functional(3, 0.23), o_X(0.23, CardX::of(3)),
                            "extremal-functional(k=3,eps=0.23)"),
        0.1));

    return catalog;
}

}  // namespace dplab
