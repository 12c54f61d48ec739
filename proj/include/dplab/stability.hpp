#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dplab/model.hpp"

namespace dplab {

/// Per-vertex dominant atoms above a row-norm threshold, plus a constancy
/// check per component of the induced subgraph.
struct DominantAtomReport {
    struct Component {
        std::vector<int> vertices;
        int atom = -1;  // common atom when consistent, else atom of the lowest vertex
        bool consistent = true;
    };

    double threshold = 0.0;
    std::vector<std::optional<std::pair<int, double>>> atoms;  // (index, |weight|)
    std::vector<Component> components;

    bool all_consistent() const;
};

/// Dominant atom of each row with norm strictly above the threshold. The
/// atom is unique with more than half the row mass once the threshold is at
/// least sqrt(9 eps / 2). Requires eps >= defect and threshold > 2 sqrt(eps).
DominantAtomReport dominant_atoms(const OperatorMatrix& op, double eps, double threshold);

/// A constructed near-map with its certificate and audit trail.
struct ConstructionResult {
    WCMapModel wcm;
    Certificate certificate;
    DominantAtomReport atoms;
    std::vector<std::string> audit;
};

/// Finite-domain stability construction: scales each dominant atom above
/// the 2 sqrt(eps) level by sqrt((||T_y|| - 2 sqrt(eps)) / (||T_y|| + 2 sqrt(eps)))
/// and certifies ||T - S|| <= 2 sqrt(eps). Component inconsistency is a
/// reported failure, not an exception.
ConstructionResult construct_finite_x(const OperatorMatrix& op, double eps);

/// Discrete-codomain construction: keeps the largest atom of every row and
/// certifies ||T - S|| <= o_prime_X(eps, card X). Requires edgeless Y.
ConstructionResult construct_discrete_y(const OperatorMatrix& op, double eps);

/// General stability construction for eps < 2/17: keeps a(y) = row sum at
/// the dominant atom wherever the row norm exceeds sqrt(17 eps / 2), zeroes
/// the rest, and certifies ||T - S|| <= sqrt(17 eps / 2).
ConstructionResult construct_rz(const OperatorMatrix& op, double eps);

}  // namespace dplab
