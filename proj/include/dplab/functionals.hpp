#pragma once

#include <utility>
#include <vector>

#include "dplab/model.hpp"

namespace dplab {

/// Entrywise absolute value; preserves the norm and the defect.
FunctionalVec abs_functional(const FunctionalVec& phi);

/// Point of maximal |weight| (lowest index on ties) and that absolute value.
std::pair<int, double> max_atom(const FunctionalVec& phi);

/// Checks the atom and gap lemmas for a norm-one functional phi with defect
/// at most eps: dominant-atom mass, uniqueness below 2/9, the even-card and
/// band-index mass bounds, and the subset-sum gap. Precondition violations
/// yield not-applicable certificates.
std::vector<Certificate> check_atom_lemmas(const FunctionalVec& phi, double eps);

/// A norm-one nonnegative functional with defect <= eps whose distance to
/// the weighted evaluation functionals is exactly o_X(eps, card_x).
FunctionalVec extremal_functional(int card_x, double eps);

}  // namespace dplab
