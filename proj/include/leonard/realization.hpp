#pragma once

#include <vector>

#include "leonard/exact_linalg.hpp"
#include "leonard/parameter_array.hpp"
#include "leonard/report.hpp"

namespace leonard {

/// Rescalings applied on top of the default base-vector normalization.
/// Every identity checked by the library is covariant under these, which the
/// property tests exercise.
struct RealizeOptions {
  Rational v_star_scale = 1;
  Rational v_scale = 1;
  Rational v_star_down_scale = 1;
};

/// A Leonard system with the given parameter array, written in split
/// coordinates: coordinate vector e_ℓ is τ_ℓ(A)·e_0, so A is lower bidiagonal
/// (diagonal θ, unit subdiagonal) and A* is upper bidiagonal (diagonal θ*,
/// superdiagonal φ).
///
/// Base vectors: v* = c·e_0, v = E_0 v*, v*↓ = E*_d v, the latter two scaled
/// so their first nonzero coordinate equals one (times the optional scale).
/// The bilinear form is the symmetric solution of G A = Aᵀ G, G A* = A*ᵀ G,
/// normalized by ⟨v*, v*⟩ = 1.
class Realization {
 public:
  const ParameterArray& params() const { return p_; }
  int d() const { return p_.d; }
  Index dim() const { return p_.d + 1; }

  const Mat& A() const { return A_; }
  const Mat& A_star() const { return A_star_; }
  const Mat& E(int i) const { return E_.at(static_cast<std::size_t>(i)); }
  const Mat& E_star(int i) const { return E_star_.at(static_cast<std::size_t>(i)); }
  const std::vector<Mat>& E_all() const { return E_; }
  const std::vector<Mat>& E_star_all() const { return E_star_; }
  const Mat& gram() const { return gram_; }
  const Vec& v() const { return v_; }
  const Vec& v_star() const { return v_star_; }
  const Vec& v_star_down() const { return v_star_down_; }

  /// Dimension of the solution space of the intertwining system for the form.
  Index gram_solution_dim() const { return gram_solution_dim_; }

  Rational form(const Vec& x, const Vec& y) const { return (x.transpose() * gram_ * y)(0, 0); }
  Rational norm2(const Vec& x) const { return form(x, x); }

  /// τ_ℓ(A) v*
  Vec split_vector(int l) const;
  /// τ_ℓ(A) v*↓
  Vec split_down_vector(int l) const;

  // Bases as column matrices.
  Mat split_basis() const;          // τ_ℓ(A) v*
  Mat split_down_basis() const;     // τ_ℓ(A) v*↓
  Mat standard_basis() const;       // E*_i v
  Mat dual_standard_basis() const;  // E_j v*

  friend Realization realize(const ParameterArray& p, const RealizeOptions& options);

 private:
  Realization() = default;

  ParameterArray p_;
  Mat A_, A_star_, gram_;
  std::vector<Mat> E_, E_star_;
  Vec v_, v_star_, v_star_down_;
  Index gram_solution_dim_ = 0;
};

/// Builds the realization; throws invalid_array_error for arrays that fail
/// validation or admit no unique form, consistency_error if any structural
/// invariant fails.
Realization realize(const ParameterArray& p, const RealizeOptions& options = {});

/// Primitive idempotents of a matrix with the given distinct eigenvalues,
/// by Lagrange interpolation.
std::vector<Mat> primitive_idempotents(const Mat& X, const std::vector<Rational>& eigenvalues);

/// Idempotent algebra, tridiagonality, the bilinear form and the base vectors.
CheckReport check_invariants(const Realization& r);

/// {E*_i v}
std::vector<Vec> standard_basis(const Realization& r);

/// ||E*_i v||² from the parameter array and ||v||².
Rational squared_norm_Ei_star_v(const Realization& r, int i);

enum class SplitVariant { plain, down };

/// U_ℓ = (Σ_{i≤ℓ} E*_i V) ∩ (Σ_{j≥ℓ} E_j V) for the plain variant;
/// the down variant uses Σ_{i≥d−ℓ} E*_i V in place of the first sum.
std::vector<RationalSubspace> split_decomposition(const Realization& r, SplitVariant variant);

/// Σ_{i ∈ indices} image(idempotents[i]).
RationalSubspace idempotent_image_sum(const std::vector<Mat>& idempotents, const std::vector<int>& indices);

/// Projection onto span(basis.col(k)) along the span of the other columns.
Mat projection_along(const Mat& basis, Index k);

/// Split/standard transition identities, the E*_0 E_i E*_0 identity, the
/// squared-norm formula and the split-decomposition structure.
CheckReport verify_section2(const Realization& r);

}  // namespace leonard
