#pragma once

#include <vector>

#include "leonard/realization.hpp"

namespace leonard {

/// Bases the EKR basis is related to in closed form.
enum class TargetBasis {
  split_down,     ///< τ_ℓ(A) v*↓
  dual_standard,  ///< E_j v*
  standard,       ///< E*_i v
};

const char* to_string(TargetBasis basis);

/// Columns are the vectors of `basis`, in split coordinates.
Mat basis_matrix(const Realization& r, TargetBasis basis);

// ---------------------------------------------------------------------------
// Oracle side: subspace algebra only, no closed formulas.

/// W_t = (E_0*V + Σ_{i>d−t} E_i*V) ∩ (E_0V + Σ_{j>t} E_jV). Defined for every
/// valid array, admissible or not.
RationalSubspace wt_subspace_oracle(const Realization& r, int t);

/// The same construction with the roles of (E_i) and (E*_i) exchanged, so that
/// it yields the subspaces attached to the dual system.
RationalSubspace wt_subspace_oracle_dual(const Realization& r, int t);

/// The vector of W_t with E_0 w = E_0 v*, in split coordinates.
/// Throws consistency_error when W_t is not a line or E_0 W_t = 0.
Vec ekr_vector_oracle(const Realization& r, int t);

/// Dual-system EKR vector: the vector of W*_t with E*_0 w = E*_0 v.
Vec ekr_vector_oracle_dual(const Realization& r, int t);

// ---------------------------------------------------------------------------
// Closed forms. All require ekr_admissible(p); otherwise inadmissible_error.

/// Coefficients of w_t in the requested basis.
Vec ekr_vector_closed(const Realization& r, int t, TargetBasis basis);

/// Matrix whose column t holds the coefficients of w_t in `basis`.
Mat transition_to_ekr(const Realization& r, TargetBasis basis);

/// Matrix whose column ℓ holds the coefficients of the ℓ-th vector of `basis`
/// in the EKR basis.
Mat transition_from_ekr(const Realization& r, TargetBasis basis);

enum class Operator { A, A_star };

/// Matrix of A (or A*) in the EKR basis from the closed formulas.
Mat action_on_ekr_closed(const Realization& r, Operator op);

/// Δ_s from its defining expression, 1 ≤ s ≤ d−1.
Rational delta(const ParameterArray& p, int s);
/// Δ_s via the floor-indexed product form.
Rational delta_product_form(const ParameterArray& p, int s);
/// Δ*_s from its displayed expression in terms of the original array.
Rational delta_star(const ParameterArray& p, int s);

/// (θ_{d−s+1} − θ_0) ϑ_{s+1} − (θ_{d−s} − θ_0) ϑ_s
Rational theta_combination(const ParameterArray& p, int s);
/// (θ_{d−⌊s/2⌋} − θ_{⌊s/2⌋})(θ_{d−⌊(s−1)/2⌋} − θ_{⌊(s+1)/2⌋}) / (θ_d − θ_0)
Rational theta_combination_product_form(const ParameterArray& p, int s);

/// Everything attached to the EKR basis of one realization. The vectors w_t
/// come from the oracle; the transition matrices come from the closed forms.
class EkrSystem {
 public:
  /// Throws inadmissible_error when q = −1 and d is odd.
  explicit EkrSystem(Realization r);

  const Realization& realization() const { return r_; }
  const ParameterArray& params() const { return r_.params(); }
  int d() const { return r_.d(); }

  const std::vector<RationalSubspace>& W() const { return W_; }
  const Vec& w(int t) const { return w_.at(static_cast<std::size_t>(t)); }
  /// Columns w_0..w_d in split coordinates.
  const Mat& w_matrix() const { return w_matrix_; }
  /// Δ_1..Δ_{d−1} (index s−1).
  const std::vector<Rational>& deltas() const { return delta_; }

  const Mat& to_ekr(TargetBasis b) const { return to_ekr_[static_cast<std::size_t>(b)]; }
  const Mat& from_ekr(TargetBasis b) const { return from_ekr_[static_cast<std::size_t>(b)]; }

 private:
  Realization r_;
  std::vector<RationalSubspace> W_;
  std::vector<Vec> w_;
  Mat w_matrix_;
  std::vector<Rational> delta_;
  std::vector<Mat> to_ekr_;
  std::vector<Mat> from_ekr_;
};

/// Matrix of A (or A*) in the EKR basis by conjugating the realized operator.
Mat action_by_conjugation(const EkrSystem& sys, Operator op);

/// Projection onto W_t along the other W_s.
Mat ekr_projection(const EkrSystem& sys, int t);

/// Closed-form vs oracle agreement, inverse pairs, zero patterns, vanishing of
/// the W-projections, the filtration identities, operator actions and Δ.
CheckReport verify_ekr(const EkrSystem& sys);

/// Compares the dual system's EKR basis with the rescaled reversed EKR basis.
CheckReport star_ekr_relation(const EkrSystem& sys);

struct DegeneracyReport {
  bool degenerate = false;        ///< q = −1 and d odd
  bool direct_sum = false;        ///< V = ⊕ W_t
  bool ekr_refused = false;       ///< construction raised inadmissible_error
  bool paired_equal = false;      ///< W_{2s−1} = W_{2s} for 1 ≤ s ≤ ⌊d/2⌋
  std::vector<Index> w_dims;
  std::string summary;
};

/// Uses only the oracle subspaces.
DegeneracyReport degenerate_check(const Realization& r);

}  // namespace leonard
