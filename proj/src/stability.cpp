#include "dplab/stability.hpp"

#include <algorithm>
#include <cmath>

#include "dplab/bounds.hpp"
#include "dplab/calculus.hpp"

namespace dplab {

bool DominantAtomReport::all_consistent() const {
    return std::all_of(components.begin(), components.end(),
                       [](const Component& c) { return c.consistent; });
}

namespace {

std::pair<int, double> row_max_entry(const std::vector<double>& row) {
    int best = 0;
    double best_val = std::abs(row[0]);
    for (int i = 1; i < static_cast<int>(row.size()); ++i) {
        const double v = std::abs(row[i]);
        if (v > best_val) {
            best = i;
            best_val = v;
        }
    }
    return {best, best_val};
}

DominantAtomReport make_report(const OperatorMatrix& op, double threshold) {
    const int ny = op.codomain_size();
    DominantAtomReport report;
    report.threshold = threshold;
    report.atoms.assign(ny, std::nullopt);
    std::vector<char> keep(ny, 0);
    for (int y = 0; y < ny; ++y) {
        if (op.row_norm(y) > threshold) {
            keep[y] = 1;
            report.atoms[y] = row_max_entry(op.rows[y]);
        }
    }
    const auto comp = induced_components(op.graph, keep);
    const int ncomp =
        comp.empty() ? 0 : 1 + *std::max_element(comp.begin(), comp.end());
    report.components.resize(std::max(ncomp, 0));
    for (int y = 0; y < ny; ++y) {
        if (comp[y] < 0) continue;
        auto& c = report.components[comp[y]];
        c.vertices.push_back(y);
        if (c.atom == -1)
            c.atom = report.atoms[y]->first;
        else if (c.atom != report.atoms[y]->first)
            c.consistent = false;
    }
    return report;
}

void require_norm_one(const OperatorMatrix& op, const char* who) {
    if (std::abs(op_norm(op) - 1.0) > kCertTolerance)
        throw ValidationError(std::string(who) + ": operator norm must be 1");
}

double require_defect_at_most(const OperatorMatrix& op, double eps, const char* who) {
    const double actual = epsilon_exact(op).eps;
    if (actual > eps + kCertTolerance)
        throw ValidationError(std::string(who) + ": eps must dominate the defect of T");
    return actual;
}

/// max_y || T_y - a(y) delta_{h(y)} ||_1, without requiring a valid label map.
double distance_to_rowmap(const OperatorMatrix& op, const WCMapModel& wcm) {
    double worst = 0.0;
    for (int y = 0; y < op.codomain_size(); ++y) {
        double cost = 0.0;
        for (int i = 0; i < op.domain_size(); ++i) {
            const double s = (wcm.a[y] != 0.0 && wcm.h[y] == i) ? wcm.a[y] : 0.0;
            cost += std::abs(op.rows[y][i] - s);
        }
        worst = std::max(worst, cost);
    }
    return worst;
}

std::string row_tag(const OperatorMatrix& op, int y) {
    return op.graph.vertices[y];
}

}  // namespace

DominantAtomReport dominant_atoms(const OperatorMatrix& op, double eps, double threshold) {
    validate(op);
    if (!(eps > 0.0 && eps < 0.25))
        throw ValidationError("dominant_atoms: eps must lie in (0, 1/4)");
    require_defect_at_most(op, eps, "dominant_atoms");
    if (!(threshold > 2.0 * std::sqrt(eps)))
        throw ValidationError("dominant_atoms: threshold must exceed 2 sqrt(eps)");
    return make_report(op, threshold);
}

ConstructionResult construct_finite_x(const OperatorMatrix& op, double eps) {
    validate(op);
    if (!(eps >= 0.0 && eps < 0.25))
        throw ValidationError("construct_finite_x: eps must lie in [0, 1/4)");
    require_norm_one(op, "construct_finite_x");
    require_defect_at_most(op, eps, "construct_finite_x");

    const double radius = 2.0 * std::sqrt(eps);
    const int ny = op.codomain_size();

    ConstructionResult result;
    result.atoms = make_report(op, radius);
    result.wcm.a.assign(ny, 0.0);
    result.wcm.h.assign(ny, WCMapModel::kUnlabeled);
    for (int y = 0; y < ny; ++y) {
        const double norm = op.row_norm(y);
        if (!result.atoms.atoms[y]) {
            result.audit.push_back(row_tag(op, y) + ": zeroed, cost " +
                                   format_g12(norm) + " <= 2 sqrt(eps)");
            continue;
        }
        const int atom = result.atoms.atoms[y]->first;
        const double alpha = std::sqrt((norm - radius) / (norm + radius));
        result.wcm.a[y] = alpha * op.rows[y][atom];
        result.wcm.h[y] = atom;
        result.audit.push_back(row_tag(op, y) + ": atom " + op.space.points[atom] +
                               ", alpha " + format_g12(alpha) + ", cost " +
                               format_g12(norm - alpha * std::abs(op.rows[y][atom])));
    }

    const double achieved = distance_to_rowmap(op, result.wcm);
    result.certificate =
        Certificate::check("finite-X stability: ||T-S|| <= 2 sqrt(eps)", radius, achieved);
    if (!result.atoms.all_consistent()) {
        result.certificate.status = CertStatus::fail;
        result.audit.push_back("dominant atoms are not constant on every component; "
                               "the label map is invalid for this topology");
    }
    return result;
}

ConstructionResult construct_discrete_y(const OperatorMatrix& op, double eps) {
    validate(op);
    if (!op.graph.edgeless())
        throw ValidationError("construct_discrete_y: Y must be edgeless");
    if (!(eps > 0.0 && eps < 0.25))
        throw ValidationError("construct_discrete_y: eps must lie in (0, 1/4)");
    if (op.domain_size() < 2)
        throw ValidationError("construct_discrete_y: card X must be at least 2");
    require_norm_one(op, "construct_discrete_y");
    require_defect_at_most(op, eps, "construct_discrete_y");

    const int ny = op.codomain_size();
    ConstructionResult result;
    result.atoms = make_report(op, 0.0);
    result.wcm.a.assign(ny, 0.0);
    result.wcm.h.assign(ny, WCMapModel::kUnlabeled);
    for (int y = 0; y < ny; ++y) {
        if (!result.atoms.atoms[y]) continue;  // zero row
        const int atom = result.atoms.atoms[y]->first;
        result.wcm.a[y] = op.rows[y][atom];
        result.wcm.h[y] = atom;
    }

    const double bound = o_prime_X(eps, op.domain_size());
    const double achieved = distance_to_rowmap(op, result.wcm);
    result.certificate =
        Certificate::check("discrete-Y stability: ||T-S|| <= o'_X(eps)", bound, achieved);
    result.audit.push_back("per-row largest atom kept; bound o'_X(" + format_g12(eps) +
                           ", " + std::to_string(op.domain_size()) + ") = " +
                           format_g12(bound));
    return result;
}

ConstructionResult construct_rz(const OperatorMatrix& op, double eps) {
    validate(op);
    if (!(eps > 0.0 && eps < BoundParams::kTwoSeventeenths))
        throw ValidationError("construct_rz: eps must lie in (0, 2/17)");
    require_norm_one(op, "construct_rz");
    require_defect_at_most(op, eps, "construct_rz");

    const BoundParams params(eps);
    const int ny = op.codomain_size();

    // Finite adaptation: every row at or below the target radius may simply
    // be zeroed, which keeps the label map constant on the surviving
    // components wherever the theorem applies. Rows above the radius carry
    // a dominant atom with more than half the mass, and the t = 1 row
    // estimate bounds their cost by 2 sqrt(eps).
    ConstructionResult result;
    result.atoms = make_report(op, params.r17);
    result.wcm.a.assign(ny, 0.0);
    result.wcm.h.assign(ny, WCMapModel::kUnlabeled);
    for (int y = 0; y < ny; ++y) {
        const double norm = op.row_norm(y);
        if (!result.atoms.atoms[y]) {
            result.audit.push_back(row_tag(op, y) + ": zeroed, cost " + format_g12(norm) +
                                   " <= sqrt(17 eps / 2)");
            continue;
        }
        double row_sum = 0.0;
        for (double a : op.rows[y]) row_sum += a;
        const int atom = result.atoms.atoms[y]->first;
        result.wcm.a[y] = row_sum;
        result.wcm.h[y] = atom;
        result.audit.push_back(row_tag(op, y) + ": atom " + op.space.points[atom] +
                               ", weight (T1)(y) = " + format_g12(row_sum) +
                               ", row estimate <= 2 sqrt(eps)");
    }

    const double achieved = distance_to_rowmap(op, result.wcm);
    result.certificate = Certificate::check("general stability: ||T-S|| <= sqrt(17 eps / 2)",
                                            params.r17, achieved);
    if (!result.atoms.all_consistent()) {
        result.certificate.status = CertStatus::fail;
        result.audit.push_back("dominant atoms are not constant on every component; "
                               "the label map is invalid for this topology");
    }
    return result;
}

}  // namespace dplab
