#include "dplab/verify.hpp"

#include <algorithm>
#include <cmath>

#include "dplab/bounds.hpp"
#include "dplab/calculus.hpp"
#include "dplab/functionals.hpp"
#include "dplab/generators.hpp"
#include "dplab/stability.hpp"

namespace dplab {

bool VerifyReport::all_passed() const {
    return std::none_of(certificates.begin(), certificates.end(),
                        [](const Certificate& c) { return c.status == CertStatus::fail; });
}

VerifyReport verify_instance(const InstanceBundle& bundle) {
    validate(bundle.op);
    VerifyReport report;
    report.instance_name = bundle.provenance.empty() ? "instance" : bundle.provenance;
    auto& certs = report.certificates;

    const double norm = op_norm(bundle.op);
    const bool norm_one = std::abs(norm - 1.0) <= kCertTolerance;
    const auto eps_result = epsilon_exact(bundle.op);
    const double eps = eps_result.eps;

    certs.push_back(Certificate::check("defect within ||T||^2 / 4", norm * norm / 4.0, eps));
    if (bundle.expected_eps)
        certs.push_back(Certificate::check("defect matches expected value", 0.0,
                                           std::abs(eps - *bundle.expected_eps)));

    const auto dist = dist_to_wcm(bundle.op);
    certs.push_back(Certificate::check("distance within ||T|| (zero map)", norm, dist.dist));
    if (bundle.expected_dist)
        certs.push_back(Certificate::check("distance matches expected value", 0.0,
                                           std::abs(dist.dist - *bundle.expected_dist)));

    if (bundle.op.codomain_size() == 1 && norm_one && eps > 0.0 && eps < 0.25) {
        FunctionalVec phi{bundle.op.rows[0]};
        for (auto& c : check_atom_lemmas(phi, eps)) certs.push_back(std::move(c));
    }

    if (norm_one && eps < 0.25) {
        if (bundle.op.graph.edgeless()) {
            auto finite = construct_finite_x(bundle.op, eps);
            certs.push_back(std::move(finite.certificate));
            certs.push_back(Certificate::check("distance within the finite-X radius",
                                               2.0 * std::sqrt(eps), dist.dist));
            if (bundle.op.domain_size() >= 2 && eps > 0.0) {
                auto discrete = construct_discrete_y(bundle.op, eps);
                certs.push_back(std::move(discrete.certificate));
            }
        } else {
            // On a nontrivial topology the label map of the construction is
            // only guaranteed when the dominant atoms are component-wise
            // constant; otherwise the check is inconclusive, not failed.
            auto finite = construct_finite_x(bundle.op, eps);
            if (!finite.atoms.all_consistent()) {
                auto cert = Certificate::inapplicable(
                    finite.certificate.claim_source + " (atoms inconsistent on this topology)");
                certs.push_back(std::move(cert));
            } else {
                certs.push_back(std::move(finite.certificate));
            }
        }
        if (eps > 0.0 && eps < BoundParams::kTwoSeventeenths) {
            auto rz = construct_rz(bundle.op, eps);
            certs.push_back(std::move(rz.certificate));
        }
    }

    return report;
}

std::vector<VerifyReport> verify_all_generators() {
    std::vector<VerifyReport> reports;
    for (const auto& bundle : standard_catalog()) reports.push_back(verify_instance(bundle));
    return reports;
}

}  // namespace dplab
