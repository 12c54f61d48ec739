#include "dplab/search.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "dplab/bounds.hpp"
#include "dplab/calculus.hpp"

namespace dplab {

namespace {

constexpr int kRestarts = 16;
constexpr double kInitialStep = 0.25;
constexpr double kMinStep = 1e-9;
constexpr int kInitTries = 32;

void rescale_to_norm_one(OperatorMatrix& op) {
    const double norm = op_norm(op);
    if (norm <= 0.0) return;
    for (auto& row : op.rows)
        for (double& a : row) a /= norm;
}

OperatorMatrix simplex_rows(const SpaceX& space, const TopGraphY& graph,
                            std::mt19937_64& rng) {
    OperatorMatrix op;
    op.space = space;
    op.graph = graph;
    std::exponential_distribution<double> exp1(1.0);
    op.rows.assign(graph.vertices.size(), {});
    for (auto& row : op.rows) {
        row.resize(space.points.size());
        double total = 0.0;
        for (double& a : row) {
            a = exp1(rng);
            total += a;
        }
        for (double& a : row) a /= total;
    }
    rescale_to_norm_one(op);
    return op;
}

OperatorMatrix random_wcm(const SpaceX& space, const TopGraphY& graph,
                          std::mt19937_64& rng) {
    OperatorMatrix op;
    op.space = space;
    op.graph = graph;
    std::uniform_int_distribution<int> pick_x(0, static_cast<int>(space.points.size()) - 1);
    std::uniform_real_distribution<double> weight(0.5, 1.0);
    op.rows.assign(graph.vertices.size(), std::vector<double>(space.points.size(), 0.0));
    // One common label per run keeps the map valid for any topology.
    const int label = pick_x(rng);
    for (auto& row : op.rows) row[label] = weight(rng);
    rescale_to_norm_one(op);
    return op;
}

}  // namespace

SearchResult search_extremal(const SearchParams& params) {
    if (params.card_x < 2)
        throw ValidationError("search_extremal: card X must be at least 2");
    if (!(params.eps > 0.0 && params.eps < 0.25))
        throw ValidationError("search_extremal: eps must lie in (0, 1/4)");
    if (params.budget < 1) throw ValidationError("search_extremal: budget must be positive");
    validate(params.graph);

    SpaceX space;
    for (int i = 0; i < params.card_x; ++i) space.points.push_back("x" + std::to_string(i + 1));

    SearchResult result;
    bool have_best = false;
    long evals = 0;

    for (int restart = 0; restart < kRestarts && evals < params.budget; ++restart) {
        const long share = params.budget / kRestarts + (restart < params.budget % kRestarts);
        long remaining = std::min(share > 0 ? share : 1, params.budget - evals);
        if (remaining <= 0) continue;
        std::mt19937_64 rng(params.seed + 0x9E3779B97F4A7C15ull * (restart + 1));

        OperatorMatrix current;
        double current_eps = 0.0;
        double current_dist = -1.0;
        for (int attempt = 0; attempt < kInitTries && remaining > 0; ++attempt) {
            // A weighted composition start is always feasible; fall back to
            // it when rejection sampling runs out of tries or budget.
            const bool last_chance = attempt + 1 == kInitTries || remaining == 1;
            OperatorMatrix candidate = last_chance ? random_wcm(space, params.graph, rng)
                                                   : simplex_rows(space, params.graph, rng);
            ++evals;
            --remaining;
            const double cand_eps = epsilon_exact(candidate).eps;
            if (cand_eps <= params.eps) {
                current_eps = cand_eps;
                current_dist = dist_to_wcm(candidate).dist;
                current = std::move(candidate);
                break;
            }
        }
        if (current_dist < 0.0) continue;
        result.trace.push_back({restart, evals, current_dist, current_eps});

        std::uniform_int_distribution<int> pick_row(0, params.graph.size() - 1);
        std::uniform_int_distribution<int> pick_col(0, params.card_x - 1);
        std::uniform_int_distribution<int> pick_sign(0, 1);
        double step = kInitialStep;
        while (remaining > 0) {
            OperatorMatrix candidate = current;
            double& entry = candidate.rows[pick_row(rng)][pick_col(rng)];
            entry = std::max(0.0, entry + (pick_sign(rng) ? step : -step));
            rescale_to_norm_one(candidate);
            ++evals;
            --remaining;
            bool rejected = true;
            if (op_norm(candidate) > 0.0) {
                const double cand_eps = epsilon_exact(candidate).eps;
                if (cand_eps <= params.eps) {
                    const double dist = dist_to_wcm(candidate).dist;
                    if (dist > current_dist) {
                        current = std::move(candidate);
                        current_eps = cand_eps;
                        current_dist = dist;
                        result.trace.push_back({restart, evals, current_dist, current_eps});
                        rejected = false;
                    } else if (dist == current_dist) {
                        // Sideways move: walking the plateau lets mass shift
                        // between entries whose minimax cost ties.
                        current = std::move(candidate);
                        current_eps = cand_eps;
                        rejected = false;
                    }
                }
            }
            if (rejected) {
                step *= 0.5;
                if (step < kMinStep) step = kInitialStep;
            }
        }

        if (!have_best || current_dist > result.best_dist) {
            result.best = current;
            result.best_dist = current_dist;
            have_best = true;
        }
    }

    if (!have_best)
        throw ValidationError("search_extremal: budget too small to seed a feasible point");
    return result;
}

std::string trace_csv(const SearchResult& result) {
    std::string out = "restart,evaluation,dist,eps\n";
    for (const auto& p : result.trace) {
        out += std::to_string(p.restart);
        out += ',';
        out += std::to_string(p.evaluation);
        out += ',';
        out += format_g12(p.dist);
        out += ',';
        out += format_g12(p.eps);
        out += '\n';
    }
    return out;
}

}  // namespace dplab
