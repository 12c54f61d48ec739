#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dplab/model.hpp"

namespace dplab {

struct SearchParams {
    int card_x = 2;
    TopGraphY graph;
    double eps = 0.1;
    long budget = 1000;  // total candidate evaluations
    std::uint64_t seed = 0;
};

struct TracePoint {
    int restart;
    long evaluation;
    double dist;
    double eps;
};

struct SearchResult {
    OperatorMatrix best;
    double best_dist = 0.0;
    std::vector<TracePoint> trace;
};

/// Random-restart coordinate hill climbing over nonnegative rows: after
/// each single-entry move the matrix is rescaled to operator norm one and
/// the move is rejected unless the defect stays within eps and the distance
/// to the weighted composition maps improves. Deterministic given the seed;
/// each restart owns a derived seed and the best restart wins (lowest
/// restart index on ties).
SearchResult search_extremal(const SearchParams& params);

/// CSV trace: header "restart,evaluation,dist,eps".
std::string trace_csv(const SearchResult& result);

}  // namespace dplab
