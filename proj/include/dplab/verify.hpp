#pragma once

#include <string>
#include <vector>

#include "dplab/model.hpp"

namespace dplab {

struct VerifyReport {
    std::string instance_name;
    std::vector<Certificate> certificates;

    bool all_passed() const;
};

/// Runs every applicable check on one instance: defect and distance against
/// embedded expectations, the quarter-norm and zero-map bounds, atom lemmas
/// for norm-one functionals, and the stability constructions on their
/// guaranteed domains (finite-X and discrete-Y on edgeless topologies; the
/// general construction whenever the defect is below 2/17).
VerifyReport verify_instance(const InstanceBundle& bundle);

/// Reports for the whole generator catalog.
std::vector<VerifyReport> verify_all_generators();

}  // namespace dplab
