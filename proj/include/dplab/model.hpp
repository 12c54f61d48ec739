#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dplab {

/// Thrown on malformed inputs: bad dimensions, duplicate identifiers,
/// invalid parameter ranges, unreadable instance files.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thrown when a row's support exceeds the exact-enumeration threshold.
class SupportTooLargeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Default tolerance for certificate checks and expectation matching.
inline constexpr double kCertTolerance = 1e-12;

/// The domain space: a finite ordered list of opaque point identifiers.
struct SpaceX {
    std::vector<std::string> points;

    int size() const { return static_cast<int>(points.size()); }
};

/// The codomain space: a finite simple undirected graph. Edges encode the
/// topology; an edgeless graph models a discrete space.
struct TopGraphY {
    std::vector<std::string> vertices;
    std::vector<std::pair<int, int>> edges;  // unordered vertex index pairs

    int size() const { return static_cast<int>(vertices.size()); }
    bool edgeless() const { return edges.empty(); }

    std::vector<std::vector<int>> adjacency() const;
};

/// Builds an edgeless graph with `n` vertices named v0..v{n-1}.
TopGraphY make_discrete_y(int n);
/// Builds a path graph v0-v1-...-v{n-1}.
TopGraphY make_path_y(int n);

/// Connected components of the subgraph induced by the vertices with
/// keep[v] != 0. Returns a component id per vertex (-1 for dropped
/// vertices); ids are assigned in order of the lowest vertex they contain.
std::vector<int> induced_components(const TopGraphY& graph,
                                    const std::vector<char>& keep);

/// A linear operator as one real weight row per Y-vertex over the X-points.
struct OperatorMatrix {
    SpaceX space;
    TopGraphY graph;
    std::vector<std::vector<double>> rows;  // rows[y][i], |rows| == |Y|

    int domain_size() const { return space.size(); }
    int codomain_size() const { return graph.size(); }
    /// Total-variation norm of row y: sum of |entries|.
    double row_norm(int y) const;
};

void validate(const SpaceX& space);
void validate(const TopGraphY& graph);
void validate(const OperatorMatrix& op);

/// A continuous linear functional: one weight per X-point (the Y-singleton
/// special case of OperatorMatrix).
struct FunctionalVec {
    std::vector<double> weights;

    int size() const { return static_cast<int>(weights.size()); }
    double norm() const;
};

/// Unit coordinate functional at point x.
FunctionalVec delta(int k, int x);

/// A weighted composition map: per-vertex weight a and a partial label map
/// h into the X-points. h[v] is a valid index exactly where a[v] != 0 and
/// equals kUnlabeled elsewhere; labels must be constant on every connected
/// component of the subgraph induced by the cozero set of a.
struct WCMapModel {
    static constexpr int kUnlabeled = -1;

    std::vector<double> a;
    std::vector<int> h;

    std::vector<int> cozero_set() const;
};

void validate(const WCMapModel& wcm, const SpaceX& space, const TopGraphY& graph);

/// Evaluates (Sf)(y) = a(y) * f(h(y)) on the cozero set, 0 elsewhere.
std::vector<double> wcm_apply(const WCMapModel& wcm, std::span<const double> f);

/// Embeds a weighted composition map into the matrix space: row y is
/// a(y) times the unit coordinate row at h(y).
OperatorMatrix wcm_as_matrix(const WCMapModel& wcm, const SpaceX& space,
                             const TopGraphY& graph);

enum class CertStatus { pass, fail, not_applicable };

/// A checked claim: an upper bound asserted by some theorem or operation,
/// the value actually achieved, and the verdict.
struct Certificate {
    std::string claim_source;
    double claimed_bound = 0.0;
    double achieved_value = 0.0;
    CertStatus status = CertStatus::not_applicable;
    double tolerance = kCertTolerance;

    bool passed() const { return status == CertStatus::pass; }

    /// pass iff achieved <= claimed + tolerance.
    static Certificate check(std::string source, double claimed, double achieved,
                             double tolerance = kCertTolerance);
    static Certificate inapplicable(std::string source);
};

const char* to_string(CertStatus s);

/// A generated or loaded problem instance together with its known facts.
struct InstanceBundle {
    OperatorMatrix op;
    std::optional<double> expected_eps;
    std::optional<double> expected_dist;
    std::string provenance;
};

}  // namespace dplab
