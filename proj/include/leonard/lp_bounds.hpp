#pragma once

#include <optional>

#include "leonard/ekr_basis.hpp"
#include "leonard/families.hpp"
#include "leonard/hypergeometric.hpp"

namespace leonard {

/// Q with E_j v* = (⟨v,v*⟩/||v||²) Σ_i Q_ij E*_i v. Column 0 is all ones.
Mat second_eigenmatrix(const Realization& r);

/// (fQᵀ)_i = Σ_j f_j Q_ij
Vec f_times_Q_transpose(const Vec& f, const Mat& Q);

struct DualVector {
  int t = 0;
  Vec f;          ///< f_0..f_d
  Vec fQt;        ///< (fQᵀ)_0..(fQᵀ)_d
  bool feasible = false;  ///< f_{t+1..d} ≥ 0
  Rational bound;         ///< (fQᵀ)_0
  Rational bound_from_array;  ///< η*_d(θ*_0)η_{d−t}(θ_0)/(ϕ_1…ϕ_{d−t}η*_t(θ*_0))
};

/// f read off the dual-standard expansion of w_t. Every defining condition
/// and the agreement of the two bound expressions is checked; a failure
/// raises consistency_error.
DualVector dual_vector(const EkrSystem& sys, int t);

/// η*_d(θ*_0)η_{d−t}(θ_0)/(ϕ_1…ϕ_{d−t}η*_t(θ*_0))
Rational bound_from_array(const ParameterArray& p, int t);

/// Dimension of the solution space of {f_0 = 1, f_1..f_t = 0,
/// (fQᵀ)_1..(fQᵀ)_{d−t} = 0}, counted as the nullity of its coefficient
/// matrix (0 means exactly one solution).
Index lp_dual_nullity(const Mat& Q, int t);

/// The solution of the system above, when unique.
std::optional<Vec> lp_dual_solve(const Mat& Q, int t);

/// Family closed form for f_j, t+1 ≤ j ≤ d.
Rational f_closed_form(const FamilyParams& family, int t, int j);

/// (1, 0, …, 0, f_{t+1}, …, f_d) from the family closed form.
Vec f_closed_form_vector(const FamilyParams& family, int t);

/// Family closed form for the bound (fQᵀ)_0.
Rational bound_closed_form(const FamilyParams& family, int t);

}  // namespace leonard
