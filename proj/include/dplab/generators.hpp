#pragma once

#include <optional>
#include <vector>

#include "dplab/model.hpp"

namespace dplab {

/// Instability pair for a discrete codomain: a uniform bump row scaled to
/// the cased peak value on the first path vertex, a coordinate row on the
/// last, zeros between. Distance to the weighted composition maps is
/// exactly o_prime_X(eps, n).
InstanceBundle gen_recero(int n, double eps, int m);

/// Two-point domain over a path meshing [-1, 1]; defect exactly eps
/// (attained at the midpoint) and distance exactly 2 sqrt(eps). m must be
/// odd so the mesh contains the midpoint.
InstanceBundle gen_interval(double eps, int m);

/// Averaging operator over three interlocked tripods: norm one and defect
/// exactly 2/9. m is the number of mesh vertices per segment (m >= 2).
InstanceBundle gen_tripod(int n, int m);

/// The tripod operator scaled by a weight profile that is 3/sqrt(17) on the
/// averaging region and climbs to 1 on the outer legs; defect exactly 2/17.
InstanceBundle gen_tripod_weighted(int n, int m);

/// Alternating rows around meshed circles joined by a path toward a
/// terminal vertex; defect exactly 1/8. m (even, >= 4) vertices per circle.
/// With eps given (eps < 1/8), rescales via the isolated-point trick so the
/// defect is exactly eps.
InstanceBundle gen_circles(int circles, int m, std::optional<double> eps = std::nullopt);

/// Isolated-point rescaling: appends a fresh point and vertex carrying an
/// identity row and scales the base rows so the defect becomes eps_target.
InstanceBundle gen_scaled(const InstanceBundle& base, double eps_target);

/// Wraps a functional as a singleton-codomain instance; expected distance
/// o_X is embedded when provided.
InstanceBundle functional_instance(const FunctionalVec& phi,
                                   std::optional<double> expected_dist,
                                   const std::string& provenance);

/// The curated instance list used by `verify --all-generators` and the
/// acceptance suite.
std::vector<InstanceBundle> standard_catalog();

}  // namespace dplab
