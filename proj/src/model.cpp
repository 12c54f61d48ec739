#include "dplab/model.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>

namespace dplab {

std::vector<std::vector<int>> TopGraphY::adjacency() const {
    std::vector<std::vector<int>> adj(vertices.size());
    for (const auto& [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return adj;
}

TopGraphY make_discrete_y(int n) {
    TopGraphY g;
    g.vertices.reserve(n);
    for (int i = 0; i < n; ++i) g.vertices.push_back("v" + std::to_string(i));
    return g;
}

TopGraphY make_path_y(int n) {
    TopGraphY g = make_discrete_y(n);
    for (int i = 0; i + 1 < n; ++i) g.edges.emplace_back(i, i + 1);
    return g;
}

std::vector<int> induced_components(const TopGraphY& graph,
                                    const std::vector<char>& keep) {
    const int n = graph.size();
    std::vector<int> comp(n, -1);
    const auto adj = graph.adjacency();
    int next_id = 0;
    for (int root = 0; root < n; ++root) {
        if (!keep[root] || comp[root] >= 0) continue;
        comp[root] = next_id;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop_front();
            for (int v : adj[u]) {
                if (keep[v] && comp[v] < 0) {
                    comp[v] = next_id;
                    queue.push_back(v);
                }
            }
        }
        ++next_id;
    }
    return comp;
}

double OperatorMatrix::row_norm(int y) const {
    double s = 0.0;
    for (double a : rows[y]) s += std::abs(a);
    return s;
}

void validate(const SpaceX& space) {
    if (space.points.empty()) throw ValidationError("SpaceX: needs at least one point");
    std::set<std::string> seen(space.points.begin(), space.points.end());
    if (seen.size() != space.points.size())
        throw ValidationError("SpaceX: point identifiers must be distinct");
}

void validate(const TopGraphY& graph) {
    if (graph.vertices.empty()) throw ValidationError("TopGraphY: needs at least one vertex");
    std::set<std::string> seen(graph.vertices.begin(), graph.vertices.end());
    if (seen.size() != graph.vertices.size())
        throw ValidationError("TopGraphY: vertex identifiers must be distinct");
    std::set<std::pair<int, int>> edge_set;
    for (const auto& [u, v] : graph.edges) {
        if (u < 0 || v < 0 || u >= graph.size() || v >= graph.size())
            throw ValidationError("TopGraphY: edge endpoint out of range");
        if (u == v) throw ValidationError("TopGraphY: loops are not allowed");
        auto e = std::minmax(u, v);
        if (!edge_set.insert({e.first, e.second}).second)
            throw ValidationError("TopGraphY: duplicate edge");
    }
}

void validate(const OperatorMatrix& op) {
    validate(op.space);
    validate(op.graph);
    if (static_cast<int>(op.rows.size()) != op.codomain_size())
        throw ValidationError("OperatorMatrix: expected one row per Y-vertex");
    for (const auto& row : op.rows) {
        if (static_cast<int>(row.size()) != op.domain_size())
            throw ValidationError("OperatorMatrix: row length must match card X");
        for (double a : row)
            if (!std::isfinite(a))
                throw ValidationError("OperatorMatrix: entries must be finite");
    }
}

double FunctionalVec::norm() const {
    double s = 0.0;
    for (double w : weights) s += std::abs(w);
    return s;
}

FunctionalVec delta(int k, int x) {
    FunctionalVec d;
    d.weights.assign(k, 0.0);
    d.weights.at(x) = 1.0;
    return d;
}

std::vector<int> WCMapModel::cozero_set() const {
    std::vector<int> c;
    for (int v = 0; v < static_cast<int>(a.size()); ++v)
        if (a[v] != 0.0) c.push_back(v);
    return c;
}

void validate(const WCMapModel& wcm, const SpaceX& space, const TopGraphY& graph) {
    validate(space);
    validate(graph);
    if (wcm.a.size() != wcm.h.size() ||
        static_cast<int>(wcm.a.size()) != graph.size())
        throw ValidationError("WCMapModel: a and h must have one entry per Y-vertex");
    std::vector<char> keep(graph.size(), 0);
    for (int v = 0; v < graph.size(); ++v) {
        if (!std::isfinite(wcm.a[v]))
            throw ValidationError("WCMapModel: weights must be finite");
        if (wcm.a[v] != 0.0) {
            if (wcm.h[v] < 0 || wcm.h[v] >= space.size())
                throw ValidationError("WCMapModel: h must label every cozero vertex");
            keep[v] = 1;
        } else if (wcm.h[v] != WCMapModel::kUnlabeled) {
            throw ValidationError("WCMapModel: h must be undefined outside the cozero set");
        }
    }
    const auto comp = induced_components(graph, keep);
    std::vector<int> comp_label;
    for (int v = 0; v < graph.size(); ++v) {
        if (comp[v] < 0) continue;
        if (comp[v] >= static_cast<int>(comp_label.size()))
            comp_label.resize(comp[v] + 1, -1);
        if (comp_label[comp[v]] == -1) {
            comp_label[comp[v]] = wcm.h[v];
        } else if (comp_label[comp[v]] != wcm.h[v]) {
            throw ValidationError(
                "WCMapModel: h must be constant on each component of the cozero set");
        }
    }
}

std::vector<double> wcm_apply(const WCMapModel& wcm, std::span<const double> f) {
    std::vector<double> out(wcm.a.size(), 0.0);
    for (size_t v = 0; v < wcm.a.size(); ++v) {
        if (wcm.a[v] == 0.0) continue;
        if (wcm.h[v] < 0 || wcm.h[v] >= static_cast<int>(f.size()))
            throw ValidationError("wcm_apply: f dimension does not match labels");
        out[v] = wcm.a[v] * f[wcm.h[v]];
    }
    return out;
}

OperatorMatrix wcm_as_matrix(const WCMapModel& wcm, const SpaceX& space,
                             const TopGraphY& graph) {
    validate(wcm, space, graph);
    OperatorMatrix op;
    op.space = space;
    op.graph = graph;
    op.rows.assign(graph.size(), std::vector<double>(space.size(), 0.0));
    for (int v = 0; v < graph.size(); ++v)
        if (wcm.a[v] != 0.0) op.rows[v][wcm.h[v]] = wcm.a[v];
    return op;
}

Certificate Certificate::check(std::string source, double claimed, double achieved,
                               double tolerance) {
    Certificate c;
    c.claim_source = std::move(source);
    c.claimed_bound = claimed;
    c.achieved_value = achieved;
    c.tolerance = tolerance;
    c.status = achieved <= claimed + tolerance ? CertStatus::pass : CertStatus::fail;
    return c;
}

Certificate Certificate::inapplicable(std::string source) {
    Certificate c;
    c.claim_source = std::move(source);
    c.status = CertStatus::not_applicable;
    return c;
}

const char* to_string(CertStatus s) {
    switch (s) {
        case CertStatus::pass: return "pass";
        case CertStatus::fail: return "fail";
        case CertStatus::not_applicable: return "not-applicable";
    }
    return "?";
}

}  // namespace dplab
