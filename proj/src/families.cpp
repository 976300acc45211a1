#include "leonard/families.hpp"

#include "leonard/errors.hpp"

namespace leonard {

namespace {

void require_d(int d) {
  if (d < 1) throw degenerate_parameters("family: diameter d must be at least 1");
}

ParameterArray finish(ParameterArray p, const char* family) {
  const auto report = validate(p);
  if (report.valid()) return p;
  std::string msg = std::string(family) + ": degenerate parameters:";
  for (const auto& f : report.failures) msg += " " + f + ";";
  throw degenerate_parameters(msg);
}

}  // namespace

ParameterArray dual_hahn(const DualHahnParams& c) {
  require_d(c.d);
  if (c.h == 0 || c.s_star == 0) throw degenerate_parameters("dual-hahn: h and s* must be nonzero");
  ParameterArray p;
  p.d = c.d;
  for (int i = 0; i <= c.d; ++i) {
    p.theta.push_back(c.theta0 + c.h * i * (i + 1 + c.s));
    p.theta_star.push_back(c.theta0_star + c.s_star * i);
  }
  for (int i = 1; i <= c.d; ++i) {
    const Rational common = c.h * c.s_star * i * (i - c.d - 1);
    p.varphi.push_back(common * (i + c.r));
    p.phi.push_back(common * (i + c.r - c.s - c.d - 1));
  }
  return finish(std::move(p), "dual-hahn");
}

ParameterArray krawtchouk(const KrawtchoukParams& c) {
  require_d(c.d);
  if (c.r == 0 || c.s == 0 || c.s_star == 0) throw degenerate_parameters("krawtchouk: r, s, s* must be nonzero");
  if (c.r == c.s * c.s_star) throw degenerate_parameters("krawtchouk: r = s*s_star makes every phi[i] zero");
  ParameterArray p;
  p.d = c.d;
  for (int i = 0; i <= c.d; ++i) {
    p.theta.push_back(c.theta0 + c.s * i);
    p.theta_star.push_back(c.theta0_star + c.s_star * i);
  }
  for (int i = 1; i <= c.d; ++i) {
    p.varphi.push_back(c.r * i * (i - c.d - 1));
    p.phi.push_back((c.r - c.s * c.s_star) * i * (i - c.d - 1));
  }
  return finish(std::move(p), "krawtchouk");
}

ParameterArray q_racah(const QRacahParams& c) {
  require_d(c.d);
  for (const Rational* x : {&c.h, &c.h_star, &c.r1, &c.r2, &c.s, &c.s_star, &c.q}) {
    if (*x == 0) throw degenerate_parameters("q-racah: h, h*, r1, r2, s, s*, q must be nonzero");
  }
  if (c.q == 1 || c.q == -1) throw degenerate_parameters("q-racah: q must differ from 1 and -1");
  if (c.r1 * c.r2 != c.s * c.s_star * ipow(c.q, c.d + 1))
    throw degenerate_parameters("q-racah: constraint violated: r1*r2 != s*s_star*q^(d+1)");

  // θ_i − θ_j = h (q^{-i} − q^{-j})(1 − s q^{i+j+1}), so the eigenvalues
  // collide exactly when s q^{i+j+1} = 1 for some i ≠ j.
  for (int k = 2; k <= 2 * c.d; ++k) {
    if (c.s * ipow(c.q, k) == 1) throw degenerate_parameters("q-racah: theta collision (s*q^" + std::to_string(k) + " = 1)");
    if (c.s_star * ipow(c.q, k) == 1)
      throw degenerate_parameters("q-racah: theta_star collision (s_star*q^" + std::to_string(k) + " = 1)");
  }

  ParameterArray p;
  p.d = c.d;
  for (int i = 0; i <= c.d; ++i) {
    const Rational qi = ipow(c.q, i);
    p.theta.push_back(c.theta0 + c.h * (1 - qi) * (1 - c.s * qi * c.q) / qi);
    p.theta_star.push_back(c.theta0_star + c.h_star * (1 - qi) * (1 - c.s_star * qi * c.q) / qi);
  }
  for (int i = 1; i <= c.d; ++i) {
    const Rational qi = ipow(c.q, i);
    const Rational common = c.h * c.h_star * ipow(c.q, 1 - 2 * i) * (1 - qi) * (1 - ipow(c.q, i - c.d - 1));
    p.varphi.push_back(common * (1 - c.r1 * qi) * (1 - c.r2 * qi));
    p.phi.push_back(common * (c.r1 - c.s_star * qi) * (c.r2 - c.s_star * qi) / c.s_star);
  }
  return finish(std::move(p), "q-racah");
}

ParameterArray make_array(const FamilyParams& params) {
  return std::visit(
      [](const auto& c) -> ParameterArray {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, DualHahnParams>) return dual_hahn(c);
        else if constexpr (std::is_same_v<T, KrawtchoukParams>) return krawtchouk(c);
        else return q_racah(c);
      },
      params);
}

std::string family_name(const FamilyParams& params) {
  switch (params.index()) {
    case 0: return "dual-hahn";
    case 1: return "krawtchouk";
    default: return "q-racah";
  }
}

DualHahnParams johnson_preset(int v, int d) {
  if (d < 1) throw degenerate_parameters("johnson: d must be at least 1");
  if (v <= 2 * d) throw degenerate_parameters("johnson: requires v > 2d");
  DualHahnParams c;
  c.d = d;
  c.h = 1;
  c.r = d - v - 1;
  c.s = -v - 2;
  c.s_star = Rational(-v * (v - 1), d * (v - d));
  return c;
}

KrawtchoukParams hamming_preset(int n, int d) {
  if (d < 1) throw degenerate_parameters("hamming: d must be at least 1");
  if (n < 2) throw degenerate_parameters("hamming: requires n >= 2");
  KrawtchoukParams c;
  c.d = d;
  c.r = n * (n - 1);
  c.s = -n;
  c.s_star = -n;
  return c;
}

}  // namespace leonard
