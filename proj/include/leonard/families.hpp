#pragma once

#include <string>
#include <variant>

#include "leonard/parameter_array.hpp"

namespace leonard {

/// θ_i = θ_0 + h·i(i+1+s),  θ*_i = θ*_0 + s*·i,
/// φ_i = h s* i(i−d−1)(i+r),  ϕ_i = h s* i(i−d−1)(i+r−s−d−1).
struct DualHahnParams {
  int d = 1;
  Rational h = 1;
  Rational s = 0;
  Rational s_star = 1;
  Rational r = 0;
  Rational theta0 = 0;
  Rational theta0_star = 0;
};

/// θ_i = θ_0 + s·i,  θ*_i = θ*_0 + s*·i,  φ_i = r i(i−d−1),  ϕ_i = (r − s s*) i(i−d−1).
struct KrawtchoukParams {
  int d = 1;
  Rational r = 1;
  Rational s = 1;
  Rational s_star = 1;
  Rational theta0 = 0;
  Rational theta0_star = 0;
};

/// Most general q-Racah type; requires r1·r2 = s·s*·q^{d+1}.
struct QRacahParams {
  int d = 1;
  Rational h = 1;
  Rational h_star = 1;
  Rational r1 = 1;
  Rational r2 = 1;
  Rational s = 1;
  Rational s_star = 1;
  Rational q = 2;
  Rational theta0 = 0;
  Rational theta0_star = 0;
};

using FamilyParams = std::variant<DualHahnParams, KrawtchoukParams, QRacahParams>;

// Each constructor throws degenerate_parameters when the formulas produce a
// zero split parameter, a repeated eigenvalue, or otherwise fail validation.
ParameterArray dual_hahn(const DualHahnParams& params);
ParameterArray krawtchouk(const KrawtchoukParams& params);
ParameterArray q_racah(const QRacahParams& params);
ParameterArray make_array(const FamilyParams& params);

std::string family_name(const FamilyParams& params);

/// Johnson graph J(v, d): r = d−v−1, s = −v−2, s* = −v(v−1)/(d(v−d)), h = 1,
/// θ_0 = θ*_0 = 0. Requires v > 2d.
DualHahnParams johnson_preset(int v, int d);

/// Hamming graph H(d, n): r = n(n−1), s = s* = −n, θ_0 = θ*_0 = 0. Requires n ≥ 2.
KrawtchoukParams hamming_preset(int n, int d);

}  // namespace leonard
