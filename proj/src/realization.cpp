#include "leonard/realization.hpp"

#include <numeric>

#include "leonard/errors.hpp"

namespace leonard {

namespace {

Vec scaled_to_leading_one(const Vec& x) {
  for (Index k = 0; k < x.size(); ++k) {
    if (x(k) != 0) return x / x(k);
  }
  throw consistency_error("realize: base vector is zero");
}

// Solution space of {G·X = Xᵀ·G for X in ops, G = Gᵀ} in vec(G) coordinates.
RationalSubspace intertwining_forms(const std::vector<const Mat*>& ops, Index n) {
  const Index unknowns = n * n;
  const auto idx = [n](Index a, Index b) { return a + n * b; };
  Mat system = Mat::Zero(static_cast<Index>(ops.size()) * n * n + n * (n - 1) / 2, unknowns);
  Index row = 0;
  for (const Mat* X : ops) {
    for (Index a = 0; a < n; ++a) {
      for (Index b = 0; b < n; ++b, ++row) {
        for (Index k = 0; k < n; ++k) {
          system(row, idx(a, k)) += (*X)(k, b);  // (G X)_{ab}
          system(row, idx(k, b)) -= (*X)(k, a);  // (Xᵀ G)_{ab}
        }
      }
    }
  }
  for (Index a = 0; a < n; ++a) {
    for (Index b = a + 1; b < n; ++b, ++row) {
      system(row, idx(a, b)) = 1;
      system(row, idx(b, a)) = -1;
    }
  }
  return kernel(system);
}

std::vector<int> range_indices(int from, int to) {
  std::vector<int> out;
  for (int i = from; i <= to; ++i) out.push_back(i);
  return out;
}

}  // namespace

std::vector<Mat> primitive_idempotents(const Mat& X, const std::vector<Rational>& eigenvalues) {
  const Index n = X.rows();
  const Mat I = Mat::Identity(n, n);
  std::vector<Mat> out;
  out.reserve(eigenvalues.size());
  for (std::size_t i = 0; i < eigenvalues.size(); ++i) {
    Mat E = I;
    for (std::size_t h = 0; h < eigenvalues.size(); ++h) {
      if (h == i) continue;
      E = (E * (X - eigenvalues[h] * I)).eval() / (eigenvalues[i] - eigenvalues[h]);
    }
    out.push_back(std::move(E));
  }
  return out;
}

Realization realize(const ParameterArray& p, const RealizeOptions& options) {
  require_valid(p);
  if (options.v_star_scale == 0 || options.v_scale == 0 || options.v_star_down_scale == 0)
    throw std::invalid_argument("realize: base-vector scales must be nonzero");

  Realization r;
  r.p_ = p;
  const Index n = p.d + 1;

  r.A_ = Mat::Zero(n, n);
  r.A_star_ = Mat::Zero(n, n);
  for (Index l = 0; l < n; ++l) {
    r.A_(l, l) = p.theta[static_cast<std::size_t>(l)];
    r.A_star_(l, l) = p.theta_star[static_cast<std::size_t>(l)];
    if (l + 1 < n) {
      r.A_(l + 1, l) = 1;
      r.A_star_(l, l + 1) = p.varphi[static_cast<std::size_t>(l)];
    }
  }
  r.E_ = primitive_idempotents(r.A_, p.theta);
  r.E_star_ = primitive_idempotents(r.A_star_, p.theta_star);

  r.v_star_ = Vec::Zero(n);
  r.v_star_(0) = options.v_star_scale;

  const auto forms = intertwining_forms({&r.A_, &r.A_star_}, n);
  r.gram_solution_dim_ = forms.dim();
  if (forms.dim() != 1)
    throw invalid_array_error("realize: the invariant bilinear form is not unique (solution space dimension " +
                              std::to_string(forms.dim()) + ")");
  Mat G(n, n);
  const Vec g = forms.vector(0);
  for (Index b = 0; b < n; ++b)
    for (Index a = 0; a < n; ++a) G(a, b) = g(a + n * b);
  const Rational vs_norm = (r.v_star_.transpose() * G * r.v_star_)(0, 0);
  if (vs_norm == 0) throw consistency_error("realize: <v*, v*> vanishes");
  r.gram_ = G / vs_norm;

  r.v_ = scaled_to_leading_one(r.E_[0] * r.v_star_) * options.v_scale;
  r.v_star_down_ = scaled_to_leading_one(r.E_star_[static_cast<std::size_t>(p.d)] * r.v_) * options.v_star_down_scale;

  const auto report = check_invariants(r);
  if (!report.all_passed()) throw consistency_error("realize: invariant failed: " + report.first_failure());
  return r;
}

Vec Realization::split_vector(int l) const {
  Vec x = v_star_;
  for (int h = 0; h < l; ++h) x = (A_ * x - p_.th(h) * x).eval();
  return x;
}

Vec Realization::split_down_vector(int l) const {
  Vec x = v_star_down_;
  for (int h = 0; h < l; ++h) x = (A_ * x - p_.th(h) * x).eval();
  return x;
}

Mat Realization::split_basis() const {
  Mat B(dim(), dim());
  for (int l = 0; l <= d(); ++l) B.col(l) = split_vector(l);
  return B;
}

Mat Realization::split_down_basis() const {
  Mat B(dim(), dim());
  for (int l = 0; l <= d(); ++l) B.col(l) = split_down_vector(l);
  return B;
}

Mat Realization::standard_basis() const {
  Mat B(dim(), dim());
  for (int i = 0; i <= d(); ++i) B.col(i) = E_star(i) * v_;
  return B;
}

Mat Realization::dual_standard_basis() const {
  Mat B(dim(), dim());
  for (int j = 0; j <= d(); ++j) B.col(j) = E(j) * v_star_;
  return B;
}

CheckReport check_invariants(const Realization& r) {
  CheckReport report;
  const int d = r.d();
  const Index n = r.dim();
  const Mat I = Mat::Identity(n, n);
  const auto& p = r.params();

  const auto idempotent_algebra = [&](const std::vector<Mat>& E, const Mat& X, const std::vector<Rational>& th,
                                      const std::string& tag) {
    bool orthogonal = true;
    bool rank_one = true;
    bool eigen = true;
    Mat total = Mat::Zero(n, n);
    Mat spectral = Mat::Zero(n, n);
    for (int i = 0; i <= d; ++i) {
      const auto& Ei = E[static_cast<std::size_t>(i)];
      total += Ei;
      spectral += th[static_cast<std::size_t>(i)] * Ei;
      if (rank(Ei) != 1) rank_one = false;
      if (!exactly_equal(X * Ei, th[static_cast<std::size_t>(i)] * Ei)) eigen = false;
      for (int j = 0; j <= d; ++j) {
        const Mat prod = Ei * E[static_cast<std::size_t>(j)];
        if (i == j ? !exactly_equal(prod, Ei) : !is_zero(prod)) orthogonal = false;
      }
    }
    report.add(tag + " idempotents orthogonal", orthogonal);
    report.add(tag + " idempotents sum to identity", exactly_equal(total, I));
    report.add(tag + " spectral decomposition", exactly_equal(spectral, X));
    report.add(tag + " eigen-relations", eigen);
    report.add(tag + " idempotents have rank one", rank_one);
  };
  idempotent_algebra(r.E_all(), r.A(), p.theta, "E");
  idempotent_algebra(r.E_star_all(), r.A_star(), p.theta_star, "E*");

  const auto tridiagonal = [&](const std::vector<Mat>& F, const Mat& X, const std::string& tag) {
    bool ok = true;
    for (int i = 0; i <= d; ++i) {
      for (int j = 0; j <= d; ++j) {
        const int gap = std::abs(i - j);
        if (gap <= 0) continue;
        const bool zero = is_zero(F[static_cast<std::size_t>(i)] * X * F[static_cast<std::size_t>(j)]);
        if ((gap > 1 && !zero) || (gap == 1 && zero)) ok = false;
      }
    }
    report.add(tag, ok);
  };
  tridiagonal(r.E_star_all(), r.A(), "E*_i A E*_j tridiagonal");
  tridiagonal(r.E_all(), r.A_star(), "E_i A* E_j tridiagonal");

  const Mat& G = r.gram();
  report.add("form solution space has dimension 1", r.gram_solution_dim() == 1);
  report.add("form symmetric", exactly_equal(G, G.transpose()));
  report.add("form nondegenerate", is_invertible(G));
  report.add("form intertwines A", exactly_equal(G * r.A(), r.A().transpose() * G));
  report.add("form intertwines A*", exactly_equal(G * r.A_star(), r.A_star().transpose() * G));

  report.add("v in E_0 V, nonzero", !is_zero(r.v()) && exactly_equal(r.E(0) * r.v(), r.v()));
  report.add("v* in E*_0 V, nonzero", !is_zero(r.v_star()) && exactly_equal(r.E_star(0) * r.v_star(), r.v_star()));
  report.add("v*down in E*_d V, nonzero",
             !is_zero(r.v_star_down()) && exactly_equal(r.E_star(d) * r.v_star_down(), r.v_star_down()));
  report.add("<v, v*> nonzero", r.form(r.v(), r.v_star()) != 0);
  report.add("<v, v*down> nonzero", r.form(r.v(), r.v_star_down()) != 0);
  report.add("||v||^2 nonzero", r.norm2(r.v()) != 0);
  return report;
}

std::vector<Vec> standard_basis(const Realization& r) {
  std::vector<Vec> out;
  for (int i = 0; i <= r.d(); ++i) out.push_back(r.E_star(i) * r.v());
  return out;
}

Rational squared_norm_Ei_star_v(const Realization& r, int i) {
  const auto& p = r.params();
  if (i < 0 || i > p.d) throw std::out_of_range("squared_norm_Ei_star_v: index out of range");
  const Rational num = varphi_product(p, 1, i) * phi_product(p, i + 1, p.d);
  const Rational den = eta(p, p.d, p.th(0)) * tau_star(p, i, p.th_star(i)) * eta_star(p, p.d - i, p.th_star(i));
  return num / den * r.norm2(r.v());
}

RationalSubspace idempotent_image_sum(const std::vector<Mat>& idempotents, const std::vector<int>& indices) {
  const Index n = idempotents.front().rows();
  RationalSubspace s(n);
  for (int i : indices) s = sum(s, image(idempotents.at(static_cast<std::size_t>(i))));
  return s;
}

std::vector<RationalSubspace> split_decomposition(const Realization& r, SplitVariant variant) {
  const int d = r.d();
  std::vector<RationalSubspace> out;
  for (int l = 0; l <= d; ++l) {
    const auto lower = variant == SplitVariant::plain ? idempotent_image_sum(r.E_star_all(), range_indices(0, l))
                                                      : idempotent_image_sum(r.E_star_all(), range_indices(d - l, d));
    const auto upper = idempotent_image_sum(r.E_all(), range_indices(l, d));
    out.push_back(intersect(lower, upper));
  }
  return out;
}

Mat projection_along(const Mat& basis, Index k) {
  const Mat inv = inverse(basis);
  return basis.col(k) * inv.row(k);
}

CheckReport verify_section2(const Realization& r) {
  CheckReport report;
  const auto& p = r.params();
  const int d = p.d;
  const Index n = r.dim();
  const Vec& v = r.v();
  const Vec& vs = r.v_star();
  const Rational v_vs = r.form(v, vs);
  const Rational v_vsd = r.form(v, r.v_star_down());
  const auto Esv = standard_basis(r);
  std::vector<Rational> norms;
  for (const auto& x : Esv) norms.push_back(r.norm2(x));

  {
    bool ok = true;
    for (int i = 0; i <= d; ++i) {
      Vec rhs = Vec::Zero(n);
      for (int l = 0; l <= i; ++l)
        rhs += tau_star(p, l, p.th_star(i)) / varphi_product(p, 1, l) * r.split_vector(l);
      rhs *= norms[static_cast<std::size_t>(i)] / v_vs;
      if (!exactly_equal(Esv[static_cast<std::size_t>(i)], rhs)) ok = false;
    }
    report.add("standard vectors in the split basis", ok);
  }
  {
    bool ok = true;
    for (int l = 0; l <= d; ++l) {
      Vec rhs = Vec::Zero(n);
      for (int i = 0; i <= l; ++i) {
        const Rational& th = p.th_star(i);
        rhs += eta_star(p, d - l, th) / (tau_star(p, i, th) * eta_star(p, d - i, th)) /
               norms[static_cast<std::size_t>(i)] * Esv[static_cast<std::size_t>(i)];
      }
      rhs *= v_vs * varphi_product(p, 1, l);
      if (!exactly_equal(r.split_vector(l), rhs)) ok = false;
    }
    report.add("split vectors in the standard basis", ok);
  }
  {
    bool ok = true;
    for (int j = 0; j <= d; ++j) {
      Vec rhs = Vec::Zero(n);
      const Rational& th = p.th(j);
      for (int l = j; l <= d; ++l)
        rhs += eta(p, d - l, th) / (tau(p, j, th) * eta(p, d - j, th)) * r.split_vector(l);
      if (!exactly_equal(r.E(j) * vs, rhs)) ok = false;
    }
    report.add("dual standard vectors in the split basis", ok);
  }
  {
    bool ok = true;
    for (int l = 0; l <= d; ++l) {
      Vec rhs = Vec::Zero(n);
      for (int j = l; j <= d; ++j) rhs += tau(p, l, p.th(j)) * (r.E(j) * vs);
      if (!exactly_equal(r.split_vector(l), rhs)) ok = false;
    }
    report.add("split vectors in the dual standard basis", ok);
  }
  {
    bool ok = true;
    for (int j = 0; j <= d; ++j) {
      const Vec rhs = v_vsd / v_vs * phi_product(p, d - j + 1, d) / varphi_product(p, 1, j) * (r.E(j) * vs);
      if (!exactly_equal(r.E(j) * r.v_star_down(), rhs)) ok = false;
    }
    report.add("E_j v*down against E_j v*", ok);
  }
  {
    bool ok = true;
    const Mat& Es0 = r.E_star(0);
    for (int i = 0; i <= d; ++i) {
      const Rational c = varphi_product(p, 1, i) * phi_product(p, 1, d - i) /
                         (eta_star(p, d, p.th_star(0)) * tau(p, i, p.th(i)) * eta(p, d - i, p.th(i)));
      if (!exactly_equal(Es0 * r.E(i) * Es0, c * Es0)) ok = false;
    }
    report.add("E*_0 E_i E*_0 is a multiple of E*_0", ok);
  }
  {
    bool ok = true;
    for (int i = 0; i <= d; ++i)
      if (squared_norm_Ei_star_v(r, i) != norms[static_cast<std::size_t>(i)]) ok = false;
    report.add("squared norms of E*_i v", ok);
  }

  // Split decompositions computed purely from idempotent images.
  for (const auto variant : {SplitVariant::plain, SplitVariant::down}) {
    const std::string tag = variant == SplitVariant::plain ? "split" : "split-down";
    const auto U = split_decomposition(r, variant);
    bool one_dim = true;
    bool spanned = true;
    Mat basis(n, n);
    for (int l = 0; l <= d; ++l) {
      const auto& Ul = U[static_cast<std::size_t>(l)];
      if (Ul.dim() != 1) {
        one_dim = false;
        continue;
      }
      const Vec expected = variant == SplitVariant::plain ? r.split_vector(l) : r.split_down_vector(l);
      if (!(Ul == RationalSubspace::span(expected))) spanned = false;
      basis.col(l) = Ul.vector(0);
    }
    report.add(tag + " components are one-dimensional", one_dim);
    report.add(tag + " components spanned by tau_l(A) applied to the base vector", spanned);
    if (!one_dim) continue;
    const bool direct = is_invertible(basis);
    report.add(tag + " decomposition is direct", direct);
    if (variant == SplitVariant::plain) {
      report.add("U_0 = E*_0 V", U.front() == image(r.E_star(0)));
      report.add("U_d = E_d V", U.back() == image(r.E(d)));
    }
    if (!direct) continue;
    // F_ℓ E*_i = 0 for ℓ > i (reading E* through the relative) and F_ℓ E_j = 0 for ℓ < j.
    bool vanish = true;
    for (int l = 0; l <= d; ++l) {
      const Mat F = projection_along(basis, l);
      for (int i = 0; i <= d; ++i) {
        const Mat& Es = variant == SplitVariant::plain ? r.E_star(i) : r.E_star(d - i);
        if (l > i && !is_zero(F * Es)) vanish = false;
        if (l < i && !is_zero(F * r.E(i))) vanish = false;
      }
    }
    report.add(tag + " projections vanish on the expected idempotents", vanish);
  }
  return report;
}

}  // namespace leonard
