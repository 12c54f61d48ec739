#include "dplab/calculus.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

namespace dplab {

double op_norm(const OperatorMatrix& op) {
    double best = 0.0;
    for (int y = 0; y < op.codomain_size(); ++y) best = std::max(best, op.row_norm(y));
    return best;
}

namespace {

struct HalfSum {
    double sum;
    std::uint32_t mask;
};

std::vector<HalfSum> enumerate_sums(std::span<const double> values) {
    const std::uint32_t count = 1u << values.size();
    std::vector<HalfSum> out;
    out.reserve(count);
    for (std::uint32_t mask = 0; mask < count; ++mask) {
        double s = 0.0;
        for (size_t j = 0; j < values.size(); ++j)
            if (mask & (1u << j)) s += values[j];
        out.push_back({s, mask});
    }
    std::sort(out.begin(), out.end(), [](const HalfSum& a, const HalfSum& b) {
        return a.sum != b.sum ? a.sum < b.sum : a.mask < b.mask;
    });
    return out;
}

struct SplitCandidate {
    double dist = std::numeric_limits<double>::infinity();
    double sum = 0.0;
    std::uint32_t left_mask = 0;
    std::uint32_t right_mask = 0;

    bool better_than(const SplitCandidate& other) const {
        if (dist != other.dist) return dist < other.dist;
        if (sum != other.sum) return sum < other.sum;
        if (left_mask != other.left_mask) return left_mask < other.left_mask;
        return right_mask < other.right_mask;
    }
};

}  // namespace

std::pair<double, RowPartitionWitness> row_max_disjoint_product(std::span<const double> w) {
    std::vector<int> support;
    double total = 0.0;
    for (size_t i = 0; i < w.size(); ++i) {
        if (!(w[i] >= 0.0))
            throw ValidationError("row_max_disjoint_product: entries must be nonnegative");
        if (w[i] > 0.0) {
            support.push_back(static_cast<int>(i));
            total += w[i];
        }
    }
    if (static_cast<int>(support.size()) > kMaxEnumSupport)
        throw SupportTooLargeError("row support exceeds enumeration threshold (" +
                                   std::to_string(kMaxEnumSupport) + ")");

    RowPartitionWitness witness;
    if (support.size() < 2) return {0.0, witness};

    // The optimum covers the whole support, so it is determined by the
    // achievable subset sum closest to total/2.
    const size_t half = support.size() / 2;
    std::vector<double> left_vals, right_vals;
    for (size_t j = 0; j < support.size(); ++j)
        (j < half ? left_vals : right_vals).push_back(w[support[j]]);

    const auto right = enumerate_sums(right_vals);
    const double target_total = total / 2.0;

    SplitCandidate best;
    const std::uint32_t left_count = 1u << left_vals.size();
    for (std::uint32_t lmask = 0; lmask < left_count; ++lmask) {
        double ls = 0.0;
        for (size_t j = 0; j < left_vals.size(); ++j)
            if (lmask & (1u << j)) ls += left_vals[j];
        const double want = target_total - ls;
        auto it = std::lower_bound(right.begin(), right.end(), want,
                                   [](const HalfSum& h, double v) { return h.sum < v; });
        for (auto probe : {it, it == right.begin() ? right.end() : std::prev(it)}) {
            if (probe == right.end()) continue;
            const double s = ls + probe->sum;
            SplitCandidate cand{std::abs(s - target_total), s, lmask, probe->mask};
            if (cand.better_than(best)) best = cand;
        }
    }

    for (size_t j = 0; j < support.size(); ++j) {
        const bool in_a = j < half ? (best.left_mask >> j) & 1u
                                   : (best.right_mask >> (j - half)) & 1u;
        (in_a ? witness.subset_a : witness.subset_b).push_back(support[j]);
    }
    // Lowest index goes to subset A; the product is symmetric.
    if (witness.subset_a.empty() ||
        (!witness.subset_b.empty() && witness.subset_b.front() < witness.subset_a.front()))
        std::swap(witness.subset_a, witness.subset_b);
    double sum_a = 0.0, sum_b = 0.0;
    for (int i : witness.subset_a) sum_a += w[i];
    for (int i : witness.subset_b) sum_b += w[i];
    witness.product = sum_a * sum_b;
    return {witness.product, witness};
}

EpsilonResult epsilon_exact(const OperatorMatrix& op) {
    validate(op);
    EpsilonResult result;
    result.vertex = 0;
    bool first = true;
    std::vector<double> abs_row;
    for (int y = 0; y < op.codomain_size(); ++y) {
        abs_row.assign(op.rows[y].begin(), op.rows[y].end());
        for (double& a : abs_row) a = std::abs(a);
        auto [p, witness] = row_max_disjoint_product(abs_row);
        if (first || p > result.eps) {
            result.eps = p;
            result.vertex = y;
            result.witness = std::move(witness);
            first = false;
        }
    }
    return result;
}

double epsilon_exact(const FunctionalVec& phi) {
    std::vector<double> abs_row(phi.weights.size());
    for (size_t i = 0; i < abs_row.size(); ++i) abs_row[i] = std::abs(phi.weights[i]);
    return row_max_disjoint_product(abs_row).first;
}

double row_cost(std::span<const double> w, int x) {
    if (x < 0 || x >= static_cast<int>(w.size()))
        throw ValidationError("row_cost: point index out of range");
    double s = 0.0;
    for (size_t i = 0; i < w.size(); ++i)
        if (static_cast<int>(i) != x) s += std::abs(w[i]);
    return s;
}

namespace {

// Max cost of the assembled solution and the vertex attaining it.
void fill_achieved(const OperatorMatrix& op, DistanceWitness& wit) {
    double achieved = 0.0;
    int binding = 0;
    for (int y = 0; y < op.codomain_size(); ++y) {
        const double cost = wit.labels[y] == WCMapModel::kUnlabeled
                                ? op.row_norm(y)
                                : row_cost(op.rows[y], wit.labels[y]);
        if (cost > achieved) {
            achieved = cost;
            binding = y;
        }
    }
    wit.tau = achieved;
    wit.binding_vertex = binding;
}

}  // namespace

std::optional<DistanceWitness> wcm_feasible(const OperatorMatrix& op, double tau) {
    const int ny = op.codomain_size();
    const int k = op.domain_size();
    std::vector<char> mandatory(ny, 0);
    for (int y = 0; y < ny; ++y) mandatory[y] = op.row_norm(y) > tau ? 1 : 0;
    const auto comp = induced_components(op.graph, mandatory);
    const int ncomp = 1 + *std::max_element(comp.begin(), comp.end());

    DistanceWitness wit;
    wit.labels.assign(ny, WCMapModel::kUnlabeled);
    std::vector<std::vector<int>> members(std::max(ncomp, 0));
    for (int y = 0; y < ny; ++y) {
        if (comp[y] >= 0)
            members[comp[y]].push_back(y);
        else
            wit.zero_set.push_back(y);
    }
    for (const auto& component : members) {
        int chosen = -1;
        for (int x = 0; x < k && chosen < 0; ++x) {
            bool ok = true;
            for (int y : component) {
                if (row_cost(op.rows[y], x) > tau) {
                    ok = false;
                    break;
                }
            }
            if (ok) chosen = x;
        }
        if (chosen < 0) return std::nullopt;
        for (int y : component) wit.labels[y] = chosen;
    }
    fill_achieved(op, wit);
    return wit;
}

DistanceResult dist_to_wcm(const OperatorMatrix& op) {
    validate(op);
    std::vector<double> candidates{0.0};
    for (int y = 0; y < op.codomain_size(); ++y) {
        candidates.push_back(op.row_norm(y));
        for (int x = 0; x < op.domain_size(); ++x)
            candidates.push_back(row_cost(op.rows[y], x));
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    // Feasibility is monotone in tau: shrinking the mandatory set only
    // splits components and relaxes costs.
    size_t lo = 0, hi = candidates.size() - 1;
    while (lo < hi) {
        const size_t mid = lo + (hi - lo) / 2;
        if (wcm_feasible(op, candidates[mid]))
            hi = mid;
        else
            lo = mid + 1;
    }
    auto wit = wcm_feasible(op, candidates[lo]);
    if (!wit)
        throw ValidationError("dist_to_wcm: no feasible tau found");  // unreachable
    return {wit->tau, *wit};
}

WCMapModel nearest_wcm(const OperatorMatrix& op) {
    const auto result = dist_to_wcm(op);
    WCMapModel wcm;
    const int ny = op.codomain_size();
    wcm.a.assign(ny, 0.0);
    wcm.h.assign(ny, WCMapModel::kUnlabeled);
    for (int y = 0; y < ny; ++y) {
        const int x = result.witness.labels[y];
        if (x == WCMapModel::kUnlabeled) continue;
        // A zero weight at the label costs the same as zeroing the vertex.
        if (op.rows[y][x] != 0.0) {
            wcm.a[y] = op.rows[y][x];
            wcm.h[y] = x;
        }
    }
    validate(wcm, op.space, op.graph);
    return wcm;
}

OperatorMatrix as_singleton_operator(const FunctionalVec& phi) {
    OperatorMatrix op;
    for (int i = 0; i < phi.size(); ++i) op.space.points.push_back("x" + std::to_string(i + 1));
    op.graph = make_discrete_y(1);
    op.rows = {phi.weights};
    validate(op);
    return op;
}

}  // namespace dplab
