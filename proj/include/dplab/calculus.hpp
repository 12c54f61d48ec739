#pragma once

#include <optional>
#include <span>
#include <vector>

#include "dplab/model.hpp"

namespace dplab {

/// Largest row support handled by the exact disjoint-product maximization.
inline constexpr int kMaxEnumSupport = 24;

/// Witness for the best split of a row into two disjoint index sets.
struct RowPartitionWitness {
    std::vector<int> subset_a;
    std::vector<int> subset_b;
    double product = 0.0;  // (sum over A of |a_i|) * (sum over B of |a_j|)
};

struct EpsilonResult {
    double eps = 0.0;
    int vertex = 0;  // row attaining the defect (lowest index on ties)
    RowPartitionWitness witness;
};

/// Witness for a minimax labeling: the achieved value tau, which vertices
/// are zeroed, the label chosen for each remaining vertex, and a vertex
/// whose cost attains tau.
struct DistanceWitness {
    double tau = 0.0;
    std::vector<int> zero_set;
    std::vector<int> labels;  // per Y-vertex X-index, kUnlabeled where zeroed
    int binding_vertex = -1;
};

struct DistanceResult {
    double dist = 0.0;
    DistanceWitness witness;
};

/// Operator norm: max over rows of the total-variation row norm.
double op_norm(const OperatorMatrix& op);

/// Exact maximum of (sum over A)(sum over B) over disjoint index sets A, B,
/// for a nonnegative row. Meet-in-the-middle over subset sums; supports up
/// to kMaxEnumSupport nonzero entries.
std::pair<double, RowPartitionWitness> row_max_disjoint_product(std::span<const double> w);

/// The disjointness defect: the smallest eps such that the operator is
/// eps-disjointness preserving, with the attaining row and partition.
EpsilonResult epsilon_exact(const OperatorMatrix& op);

/// Defect of a functional (the Y-singleton case).
double epsilon_exact(const FunctionalVec& phi);

/// Cost of collapsing row w onto the single point x: sum of |w_i| over i != x.
double row_cost(std::span<const double> w, int x);

/// Decides whether some weighted composition map lies within tau of the
/// operator. Every vertex with row norm > tau must be labeled; labels must
/// be constant per component of the induced subgraph and each labeled
/// vertex must have row_cost <= tau. All other vertices are zeroed.
std::optional<DistanceWitness> wcm_feasible(const OperatorMatrix& op, double tau);

/// Exact distance from the operator to the set of weighted composition
/// maps, as the minimum feasible tau over the finite candidate set
/// {0} ∪ {row norms} ∪ {row costs}.
DistanceResult dist_to_wcm(const OperatorMatrix& op);

/// Materializes an optimal witness as a weighted composition map S with
/// ||T - S|| equal to dist_to_wcm(T).
WCMapModel nearest_wcm(const OperatorMatrix& op);

/// Wraps a functional as an operator with singleton Y.
OperatorMatrix as_singleton_operator(const FunctionalVec& phi);

}  // namespace dplab
