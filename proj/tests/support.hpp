#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "leonard/lp_bounds.hpp"

namespace leonard::testing {

struct NamedFamily {
  std::string name;
  FamilyParams params;
};

/// Johnson (7,3), (9,4), (12,5); Hamming (2,2), (3,4), (4,3); three q-Racah
/// instances with d = 3, 4, 5 at rational q.
std::vector<NamedFamily> test_families();

/// q-Racah parameters with r2 chosen to satisfy r1 r2 = s s* q^{d+1}.
QRacahParams q_racah_instance(int d, const Rational& q, const Rational& s, const Rational& s_star,
                              const Rational& r1);

/// Array with β = −2 built from θ_i = (−1)^i(2i+1), θ*_i = 1 + (−1)^i(3i+2)
/// and the smallest positive integer φ_1 for which the completion through the
/// two φ/ϕ relations is valid.
ParameterArray bannai_ito(int d);

/// C(n, k) over the integers, 0 outside 0 ≤ k ≤ n.
Integer binomial(int n, int k);

/// LEONARD_EKR_SEED if set, otherwise a fixed default.
std::uint64_t seed();

/// Nonzero rational with small numerator and denominator.
Rational random_nonzero(std::mt19937_64& rng);

/// A valid random dual Hahn, Krawtchouk or q-Racah instance with
/// d in [d_min, d_max].
NamedFamily random_family(std::mt19937_64& rng, int d_min, int d_max);

// Properties exercised by the randomized suite.
bool d4_relations_hold(const ParameterArray& p);
bool vartheta_symmetric(const ParameterArray& p);
bool idempotent_algebra_holds(const Realization& r);
/// Solution space of the LP-dual system is a single point equal to the
/// dual-standard expansion of w_t.
bool lp_dual_unique(const EkrSystem& sys, int t);
/// Rescaling v*, v, v*↓ rescales each w_t by the v* factor, keeps f and the
/// bound, and every closed-form identity still holds.
bool normalization_covariant(const ParameterArray& p, const RealizeOptions& options);

}  // namespace leonard::testing
