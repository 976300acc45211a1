#include "support.hpp"

#include <cstdlib>

#include "leonard/errors.hpp"

namespace leonard::testing {

QRacahParams q_racah_instance(int d, const Rational& q, const Rational& s, const Rational& s_star,
                              const Rational& r1) {
  QRacahParams c;
  c.d = d;
  c.q = q;
  c.s = s;
  c.s_star = s_star;
  c.r1 = r1;
  c.r2 = s * s_star * ipow(q, d + 1) / r1;
  return c;
}

std::vector<NamedFamily> test_families() {
  std::vector<NamedFamily> out;
  for (const auto& [v, d] : std::vector<std::pair<int, int>>{{7, 3}, {9, 4}, {12, 5}})
    out.push_back({"johnson(" + std::to_string(v) + "," + std::to_string(d) + ")", johnson_preset(v, d)});
  for (const auto& [n, d] : std::vector<std::pair<int, int>>{{2, 2}, {3, 4}, {4, 3}})
    out.push_back({"hamming(" + std::to_string(n) + "," + std::to_string(d) + ")", hamming_preset(n, d)});

  auto a = q_racah_instance(3, 2, 3, 5, 7);
  out.push_back({"q-racah(d=3,q=2)", a});
  auto b = q_racah_instance(4, -2, 3, 5, 7);
  b.h = 2;
  b.h_star = Rational(1, 3);
  b.theta0 = 1;
  out.push_back({"q-racah(d=4,q=-2)", b});
  auto c = q_racah_instance(5, Rational(1, 3), 3, 5, 7);
  c.theta0_star = -2;
  out.push_back({"q-racah(d=5,q=1/3)", c});
  return out;
}

ParameterArray bannai_ito(int d) {
  for (int f = 1; f < 1000; ++f) {
    ParameterArray p;
    p.d = d;
    for (int i = 0; i <= d; ++i) {
      const int sign = i % 2 == 0 ? 1 : -1;
      p.theta.push_back(Rational(sign * (2 * i + 1)));
      p.theta_star.push_back(Rational(1 + sign * (3 * i + 2)));
    }
    const auto partial = [&](int i) {
      Rational s = 0;
      for (int h = 0; h < i; ++h) s += (p.theta[h] - p.theta[d - h]) / (p.theta[0] - p.theta[d]);
      return s;
    };
    const Rational phi1 = f;
    const Rational varphi1 = phi1 + (p.theta_star[1] - p.theta_star[0]) * (p.theta[d] - p.theta[0]);
    for (int i = 1; i <= d; ++i) {
      p.varphi.push_back(varphi1 * partial(i) + (p.theta_star[i] - p.theta_star[0]) * (p.theta[i - 1] - p.theta[d]));
      p.phi.push_back(phi1 * partial(i) + (p.theta_star[i] - p.theta_star[0]) * (p.theta[d - i + 1] - p.theta[0]));
    }
    if (validate(p).valid()) return p;
  }
  throw std::runtime_error("bannai_ito: no valid completion found");
}

Integer binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Integer out = 1;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

std::uint64_t seed() {
  if (const char* s = std::getenv("LEONARD_EKR_SEED")) return std::strtoull(s, nullptr, 10);
  return 20240917;
}

Rational random_nonzero(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(1, 9);
  std::uniform_int_distribution<int> den(1, 4);
  std::bernoulli_distribution neg(0.5);
  const int n = num(rng);
  return Rational(neg(rng) ? -n : n, den(rng));
}

NamedFamily random_family(std::mt19937_64& rng, int d_min, int d_max) {
  std::uniform_int_distribution<int> pick(0, 2);
  std::uniform_int_distribution<int> dd(d_min, d_max);
  std::uniform_int_distribution<int> shift(-3, 3);
  static const std::vector<Rational> bases = {2, -2, 3, Rational(1, 2), Rational(-1, 3), Rational(3, 2)};
  std::uniform_int_distribution<std::size_t> base(0, bases.size() - 1);
  for (;;) {
    const int d = dd(rng);
    try {
      switch (pick(rng)) {
        case 0: {
          DualHahnParams c;
          c.d = d;
          c.h = random_nonzero(rng);
          c.s = random_nonzero(rng);
          c.s_star = random_nonzero(rng);
          c.r = random_nonzero(rng);
          c.theta0 = shift(rng);
          c.theta0_star = shift(rng);
          dual_hahn(c);
          return {"dual-hahn", c};
        }
        case 1: {
          KrawtchoukParams c;
          c.d = d;
          c.r = random_nonzero(rng);
          c.s = random_nonzero(rng);
          c.s_star = random_nonzero(rng);
          c.theta0 = shift(rng);
          c.theta0_star = shift(rng);
          krawtchouk(c);
          return {"krawtchouk", c};
        }
        default: {
          auto c = q_racah_instance(d, bases[base(rng)], random_nonzero(rng), random_nonzero(rng), random_nonzero(rng));
          c.h = random_nonzero(rng);
          c.h_star = random_nonzero(rng);
          c.theta0 = shift(rng);
          c.theta0_star = shift(rng);
          q_racah(c);
          return {"q-racah", c};
        }
      }
    } catch (const degenerate_parameters&) {
      // draw again
    }
  }
}

bool d4_relations_hold(const ParameterArray& p) {
  const auto s = D4Element::star();
  const auto dn = D4Element::down();
  const auto dd = D4Element::ddown();
  const auto walk = [&](std::initializer_list<D4Element> gens) {
    ParameterArray x = p;
    for (const auto& g : gens) x = apply_d4(x, g);
    return x;
  };
  if (!(walk({s, s}) == p && walk({dn, dn}) == p && walk({dd, dd}) == p)) return false;
  if (!(walk({dd, s}) == walk({s, dn}) && walk({dn, s}) == walk({s, dd}) && walk({dn, dd}) == walk({dd, dn})))
    return false;
  // The one-shot action of every element agrees with its generator word, and
  // every image is valid.
  std::vector<ParameterArray> images;
  for (const auto& g : D4Element::all()) {
    ParameterArray x = p;
    for (const auto& gen : g.generators()) x = apply_d4(x, gen);
    if (!(x == apply_d4(p, g))) return false;
    if (!validate(x).valid()) return false;
    images.push_back(x);
  }
  return images.size() == 8;
}

bool vartheta_symmetric(const ParameterArray& p) {
  const auto ps = apply_d4(p, D4Element::star());
  for (int i = 1; i <= p.d; ++i) {
    if (vartheta(p, i) != vartheta(p, p.d - i + 1)) return false;
    if (vartheta(ps, i) != vartheta(p, i)) return false;
  }
  return vartheta(p, 1) == 1 && vartheta(p, p.d) == 1;
}

bool idempotent_algebra_holds(const Realization& r) {
  const Index n = r.dim();
  const auto check = [&](const std::vector<Mat>& E, const Mat& X, const std::vector<Rational>& th) {
    Mat total = Mat::Zero(n, n);
    for (std::size_t i = 0; i < E.size(); ++i) {
      total += E[i];
      if (rank(E[i]) != 1) return false;
      if (!exactly_equal(X * E[i], th[i] * E[i])) return false;
      for (std::size_t j = 0; j < E.size(); ++j) {
        const Mat prod = E[i] * E[j];
        if (i == j ? !exactly_equal(prod, E[i]) : !is_zero(prod)) return false;
      }
    }
    return exactly_equal(total, Mat::Identity(n, n));
  };
  return check(r.E_all(), r.A(), r.params().theta) && check(r.E_star_all(), r.A_star(), r.params().theta_star);
}

bool lp_dual_unique(const EkrSystem& sys, int t) {
  const Mat Q = second_eigenmatrix(sys.realization());
  if (lp_dual_nullity(Q, t) != 0) return false;
  const auto sol = lp_dual_solve(Q, t);
  if (!sol) return false;
  const Vec f = inverse(sys.realization().dual_standard_basis()) * sys.w(t);
  return exactly_equal(*sol, f);
}

bool normalization_covariant(const ParameterArray& p, const RealizeOptions& options) {
  const EkrSystem base(realize(p));
  const EkrSystem scaled(realize(p, options));
  if (!verify_ekr(scaled).all_passed()) return false;
  for (int t = 0; t <= p.d; ++t) {
    if (!exactly_equal(scaled.w(t), Vec(options.v_star_scale * base.w(t)))) return false;
    const auto a = dual_vector(base, t);
    const auto b = dual_vector(scaled, t);
    if (!exactly_equal(a.f, b.f) || a.bound != b.bound) return false;
  }
  return exactly_equal(second_eigenmatrix(base.realization()), second_eigenmatrix(scaled.realization()));
}

}  // namespace leonard::testing
