#include "leonard/lp_bounds.hpp"

#include "leonard/errors.hpp"

namespace leonard {

namespace {

void require_t(int d, int t) {
  if (t < 0 || t > d) throw std::out_of_range("t must satisfy 0 <= t <= d");
}

int family_d(const FamilyParams& family) {
  return std::visit([](const auto& c) { return c.d; }, family);
}

Rational nonzero(const Rational& x, const char* what) {
  if (x == 0) throw degenerate_parameters(std::string("closed form: denominator vanishes (") + what + ")");
  return x;
}

Rational dual_hahn_f(const DualHahnParams& c, int t, int j) {
  const Rational& r = c.r;
  const Rational& s = c.s;
  const Rational sign = (j - 1) % 2 == 0 ? 1 : -1;
  const Rational num = pochhammer(1 - j, t) * pochhammer(j + s + 2, t) * pochhammer(s - r + 1, j) * sign;
  const Rational den = nonzero(t - r + s + 1, "t - r + s + 1") * nonzero(pochhammer(s + 2, t), "(s+2)_t") *
                       pochhammer(1, t) * nonzero(pochhammer(r + 2, j - 1), "(r+2)_{j-1}");
  HypergeomSpec F;
  F.numerator = {Rational(t - j + 1), t + j + s + 2, 1};
  F.denominator = {Rational(t + 1), t - r + s + 2};
  F.z = 1;
  return num / den * hypergeom_terminating(F);
}

Rational krawtchouk_f(const KrawtchoukParams& c, int t, int j) {
  const Rational ss = c.s * c.s_star;
  HypergeomSpec F;
  F.numerator = {Rational(t - j + 1), 1};
  F.denominator = {Rational(t + 1)};
  F.z = ss / nonzero(ss - c.r, "s s* - r");
  return pochhammer(1 - j, t) / pochhammer(1, t) * ipow((c.r - ss) / c.r, j - 1) * hypergeom_terminating(F);
}

Rational q_racah_f(const QRacahParams& c, int t, int j) {
  const Rational& q = c.q;
  const Rational& s = c.s;
  const Rational& ss = c.s_star;
  const int d = c.d;
  const Rational num = ipow(ss, j - 1) * ipow(q, (d + 1) * (j - 1) + t) * q_pochhammer(ipow(q, 1 - j), q, t) *
                       q_pochhammer(s * ipow(q, j + 2), q, t) * q_pochhammer(s * q / c.r1, q, j) *
                       q_pochhammer(s * q / c.r2, q, j);
  const Rational den = nonzero(1 - s * ipow(q, t + 1) / c.r1, "1 - s q^(t+1)/r1") *
                       nonzero(1 - s * ipow(q, t + 1) / c.r2, "1 - s q^(t+1)/r2") *
                       nonzero(q_pochhammer(q, q, t), "(q;q)_t") * nonzero(q_pochhammer(s * q * q, q, t), "(s q^2;q)_t") *
                       nonzero(q_pochhammer(c.r1 * q * q, q, j - 1), "(r1 q^2;q)_{j-1}") *
                       nonzero(q_pochhammer(c.r2 * q * q, q, j - 1), "(r2 q^2;q)_{j-1}");
  HypergeomSpec F;
  F.kind = SeriesKind::basic;
  F.q = q;
  F.numerator = {ipow(q, t - j + 1), s * ipow(q, t + j + 2), ipow(q, t - d - 1) / ss, q};
  F.denominator = {ipow(q, t + 1), s * ipow(q, t + 2) / c.r1, s * ipow(q, t + 2) / c.r2};
  F.z = q;
  return num / den * hypergeom_terminating(F);
}

}  // namespace

Mat second_eigenmatrix(const Realization& r) {
  const Rational K = r.form(r.v(), r.v_star()) / r.norm2(r.v());
  return Mat(inverse(r.standard_basis()) * r.dual_standard_basis() / K);
}

Vec f_times_Q_transpose(const Vec& f, const Mat& Q) { return Q * f; }

Rational bound_from_array(const ParameterArray& p, int t) {
  require_t(p.d, t);
  const int d = p.d;
  return eta_star(p, d, p.th_star(0)) * eta(p, d - t, p.th(0)) /
         (phi_product(p, 1, d - t) * eta_star(p, t, p.th_star(0)));
}

DualVector dual_vector(const EkrSystem& sys, int t) {
  const auto& r = sys.realization();
  const int d = sys.d();
  require_t(d, t);
  DualVector out;
  out.t = t;
  out.f = inverse(r.dual_standard_basis()) * sys.w(t);
  const Mat Q = second_eigenmatrix(r);
  out.fQt = f_times_Q_transpose(out.f, Q);

  if (out.f(0) != 1) throw consistency_error("dual vector: f_0 != 1");
  for (int j = 1; j <= t; ++j)
    if (out.f(j) != 0) throw consistency_error("dual vector: f_" + std::to_string(j) + " != 0");
  for (int i = 1; i <= d - t; ++i)
    if (out.fQt(i) != 0) throw consistency_error("dual vector: (fQ^T)_" + std::to_string(i) + " != 0");

  out.feasible = true;
  for (int j = t + 1; j <= d; ++j)
    if (out.f(j) < 0) out.feasible = false;
  out.bound = out.fQt(0);
  out.bound_from_array = bound_from_array(sys.params(), t);
  if (out.bound != out.bound_from_array) throw consistency_error("dual vector: (fQ^T)_0 disagrees with the closed bound");
  return out;
}

namespace {

// Rows: f_0 = 1, f_j = 0 (1 ≤ j ≤ t), (fQᵀ)_i = 0 (1 ≤ i ≤ d−t).
std::pair<Mat, Vec> lp_dual_system(const Mat& Q, int t) {
  const Index n = Q.rows();
  const int d = static_cast<int>(n) - 1;
  require_t(d, t);
  Mat M = Mat::Zero(n, n);
  Vec rhs = Vec::Zero(n);
  M(0, 0) = 1;
  rhs(0) = 1;
  for (int j = 1; j <= t; ++j) M(j, j) = 1;
  for (int i = 1; i <= d - t; ++i) M.row(t + i) = Q.row(i);
  return {M, rhs};
}

}  // namespace

Index lp_dual_nullity(const Mat& Q, int t) {
  const auto [M, rhs] = lp_dual_system(Q, t);
  (void)rhs;
  return kernel(M).dim();
}

std::optional<Vec> lp_dual_solve(const Mat& Q, int t) {
  const auto [M, rhs] = lp_dual_system(Q, t);
  if (kernel(M).dim() != 0) return std::nullopt;
  return solve_linear(M, rhs);
}

Rational f_closed_form(const FamilyParams& family, int t, int j) {
  const int d = family_d(family);
  require_t(d, t);
  if (j < t + 1 || j > d) throw std::out_of_range("f_closed_form: j must satisfy t+1 <= j <= d");
  return std::visit(
      [&](const auto& c) -> Rational {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, DualHahnParams>) return dual_hahn_f(c, t, j);
        else if constexpr (std::is_same_v<T, KrawtchoukParams>) return krawtchouk_f(c, t, j);
        else return q_racah_f(c, t, j);
      },
      family);
}

Vec f_closed_form_vector(const FamilyParams& family, int t) {
  const int d = family_d(family);
  Vec f = Vec::Zero(d + 1);
  f(0) = 1;
  for (int j = t + 1; j <= d; ++j) f(j) = f_closed_form(family, t, j);
  return f;
}

Rational bound_closed_form(const FamilyParams& family, int t) {
  const int d = family_d(family);
  require_t(d, t);
  const int m = d - t;
  return std::visit(
      [&](const auto& c) -> Rational {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, DualHahnParams>) {
          return pochhammer(-d - c.s - 1, m) / nonzero(pochhammer(c.r - c.s - d, m), "(r-s-d)_{d-t}");
        } else if constexpr (std::is_same_v<T, KrawtchoukParams>) {
          const Rational ss = c.s * c.s_star;
          return ipow(ss / nonzero(ss - c.r, "s s* - r"), m);
        } else {
          const Rational& q = c.q;
          const Rational num = q_pochhammer(c.s * ipow(q, t + 2), q, m) * q_pochhammer(c.s_star * q * q, q, m);
          const Rational den = ipow(c.r1, m) * ipow(q, m) * q_pochhammer(c.s * ipow(q, t + 1) / c.r1, q, m) *
                               q_pochhammer(c.s_star * q / c.r1, q, m);
          return num / nonzero(den, "q-racah bound denominator");
        }
      },
      family);
}

}  // namespace leonard
