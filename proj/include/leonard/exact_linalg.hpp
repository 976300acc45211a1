#pragma once

// Dense linear algebra over an exact field. Everything here is templated on
// the scalar type and only needs +, -, *, / and exact == 0; no pivoting
// heuristics or tolerances are involved.

#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "leonard/errors.hpp"
#include "leonard/scalar.hpp"

namespace leonard {

using Index = Eigen::Index;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Mat = MatrixX<Rational>;
using Vec = VectorX<Rational>;

template <typename Scalar>
struct Rref {
  MatrixX<Scalar> reduced;
  std::vector<Index> pivots;  // strictly increasing column indices
};

template <typename Derived>
Rref<typename Derived::Scalar> rref(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  MatrixX<Scalar> r = m;
  std::vector<Index> pivots;
  Index row = 0;
  for (Index col = 0; col < r.cols() && row < r.rows(); ++col) {
    Index sel = row;
    while (sel < r.rows() && r(sel, col) == 0) ++sel;
    if (sel == r.rows()) continue;
    if (sel != row) r.row(sel).swap(r.row(row));
    const Scalar inv = Scalar(1) / r(row, col);
    for (Index c = col; c < r.cols(); ++c) r(row, c) *= inv;
    for (Index i = 0; i < r.rows(); ++i) {
      if (i == row || r(i, col) == 0) continue;
      const Scalar f = r(i, col);
      for (Index c = col; c < r.cols(); ++c) r(i, c) -= f * r(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(r), std::move(pivots)};
}

template <typename Derived>
Index rank(const Eigen::MatrixBase<Derived>& m) {
  return static_cast<Index>(rref(m).pivots.size());
}

template <typename Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (m(i, j) != 0) return false;
  return true;
}

template <typename DerivedA, typename DerivedB>
bool exactly_equal(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index j = 0; j < a.cols(); ++j)
    for (Index i = 0; i < a.rows(); ++i)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

/// A linear subspace of Scalar^n held in canonical form: the basis vectors
/// are the nonzero rows of a reduced row-echelon matrix, so two subspaces
/// are equal exactly when their stored bases are equal.
template <typename Scalar>
class Subspace {
 public:
  explicit Subspace(Index ambient_dim = 0) : ambient_dim_(ambient_dim), basis_(0, ambient_dim) {}

  /// Span of the columns of `generators`.
  template <typename Derived>
  static Subspace span(const Eigen::MatrixBase<Derived>& generators) {
    Subspace s(generators.rows());
    if (generators.cols() == 0) return s;
    auto r = rref(MatrixX<Scalar>(generators.transpose()));
    s.basis_ = r.reduced.topRows(static_cast<Index>(r.pivots.size()));
    return s;
  }

  static Subspace full(Index n) { return span(MatrixX<Scalar>::Identity(n, n)); }

  Index ambient_dim() const { return ambient_dim_; }
  Index dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }

  /// Canonical basis, one vector per row.
  const MatrixX<Scalar>& basis() const { return basis_; }
  VectorX<Scalar> vector(Index k) const { return basis_.row(k).transpose(); }

  /// Basis vectors as columns, convenient for products.
  MatrixX<Scalar> generators() const { return basis_.transpose(); }

  bool contains(const VectorX<Scalar>& x) const {
    if (x.size() != ambient_dim_) throw dimension_error("Subspace::contains: ambient dimension mismatch");
    MatrixX<Scalar> stacked(dim() + 1, ambient_dim_);
    stacked.topRows(dim()) = basis_;
    stacked.row(dim()) = x.transpose();
    return rank(stacked) == dim();
  }

  bool contains(const Subspace& other) const {
    if (other.ambient_dim_ != ambient_dim_) throw dimension_error("Subspace::contains: ambient dimension mismatch");
    for (Index k = 0; k < other.dim(); ++k)
      if (!contains(other.vector(k))) return false;
    return true;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_dim_ == b.ambient_dim_ && exactly_equal(a.basis_, b.basis_);
  }

 private:
  Index ambient_dim_;
  MatrixX<Scalar> basis_;
};

using RationalSubspace = Subspace<Rational>;

/// Right null space of m.
template <typename Derived>
Subspace<typename Derived::Scalar> kernel(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const auto r = rref(m);
  const Index n = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (Index p : r.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  MatrixX<Scalar> gens(n, n - static_cast<Index>(r.pivots.size()));
  gens.setZero();
  Index k = 0;
  for (Index f = 0; f < n; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    gens(f, k) = 1;
    for (std::size_t row = 0; row < r.pivots.size(); ++row)
      gens(r.pivots[row], k) = -r.reduced(static_cast<Index>(row), f);
    ++k;
  }
  return Subspace<Scalar>::span(gens);
}

template <typename Scalar>
Subspace<Scalar> sum(const Subspace<Scalar>& a, const Subspace<Scalar>& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw dimension_error("sum: ambient dimension mismatch");
  MatrixX<Scalar> gens(a.ambient_dim(), a.dim() + b.dim());
  gens << a.generators(), b.generators();
  return Subspace<Scalar>::span(gens);
}

template <typename Scalar>
Subspace<Scalar> intersect(const Subspace<Scalar>& a, const Subspace<Scalar>& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw dimension_error("intersect: ambient dimension mismatch");
  if (a.is_zero() || b.is_zero()) return Subspace<Scalar>(a.ambient_dim());
  // x in a ∩ b  <=>  x = Ga·y = Gb·z  <=>  [Ga | -Gb]·(y; z) = 0
  MatrixX<Scalar> joint(a.ambient_dim(), a.dim() + b.dim());
  joint << a.generators(), -b.generators();
  const auto coeffs = kernel(joint);
  if (coeffs.is_zero()) return Subspace<Scalar>(a.ambient_dim());
  const MatrixX<Scalar> y = coeffs.generators().topRows(a.dim());
  return Subspace<Scalar>::span(MatrixX<Scalar>(a.generators() * y));
}

/// Column space of m.
template <typename Derived>
Subspace<typename Derived::Scalar> image(const Eigen::MatrixBase<Derived>& m) {
  return Subspace<typename Derived::Scalar>::span(m);
}

/// Exact solution of m·x = rhs, or nullopt when the system is inconsistent.
/// Free variables are set to zero.
template <typename Derived, typename DerivedRhs>
std::optional<VectorX<typename Derived::Scalar>> solve_linear(const Eigen::MatrixBase<Derived>& m,
                                                              const Eigen::MatrixBase<DerivedRhs>& rhs) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != rhs.rows()) throw dimension_error("solve_linear: rhs length differs from row count");
  MatrixX<Scalar> aug(m.rows(), m.cols() + 1);
  aug << m, rhs;
  const auto r = rref(aug);
  if (!r.pivots.empty() && r.pivots.back() == m.cols()) return std::nullopt;
  VectorX<Scalar> x = VectorX<Scalar>::Zero(m.cols());
  for (std::size_t row = 0; row < r.pivots.size(); ++row)
    x(r.pivots[row]) = r.reduced(static_cast<Index>(row), m.cols());
  return x;
}

/// Exact inverse; throws consistency_error when m is singular.
template <typename Derived>
MatrixX<typename Derived::Scalar> inverse(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) throw dimension_error("inverse: matrix is not square");
  const Index n = m.rows();
  MatrixX<Scalar> aug(n, 2 * n);
  aug << m, MatrixX<Scalar>::Identity(n, n);
  const auto r = rref(aug);
  if (static_cast<Index>(r.pivots.size()) < n || (n > 0 && r.pivots[static_cast<std::size_t>(n - 1)] != n - 1))
    throw consistency_error("inverse: matrix is singular");
  return r.reduced.rightCols(n);
}

template <typename Derived>
bool is_invertible(const Eigen::MatrixBase<Derived>& m) {
  return m.rows() == m.cols() && rank(m) == m.rows();
}

}  // namespace leonard
