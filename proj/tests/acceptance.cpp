// Runs each acceptance criterion and prints one PASS/FAIL line per criterion.

#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "leonard/cli.hpp"
#include "leonard/errors.hpp"
#include "leonard/json_io.hpp"
#include "support.hpp"

using namespace leonard;

namespace {

// Collects the first failure inside one criterion.
class Criterion {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failure_.empty()) failure_ = what;
  }
  bool passed() const { return failure_.empty(); }
  const std::string& failure() const { return failure_; }
  int checks() const { return checks_; }

 private:
  std::string failure_;
  int checks_ = 0;
};

json cli_json(const std::vector<std::string>& args, int& status) {
  std::ostringstream out, err;
  status = cli::main(args, out, err);
  return out.str().empty() ? json() : json::parse(out.str());
}

Rational as_rational(const Integer& n) { return Rational(n); }

std::vector<ParameterArray> test_arrays() {
  std::vector<ParameterArray> out;
  for (const auto& f : testing::test_families()) out.push_back(make_array(f.params));
  return out;
}

void johnson_bound(Criterion& c) {
  for (const auto [v, d] : {std::pair{7, 3}, {9, 4}, {12, 5}}) {
    const auto family = johnson_preset(v, d);
    const auto sys = EkrSystem(realize(make_array(family)));
    for (int t = 1; t < d; ++t) {
      const std::string tag = "J(" + std::to_string(v) + "," + std::to_string(d) + ") t=" + std::to_string(t);
      const Rational expected = as_rational(testing::binomial(v - t, d - t));
      int status = -1;
      const json out = cli_json({"bound", "--preset", "johnson", "--v", std::to_string(v), "--d", std::to_string(d),
                                 "--t", std::to_string(t)},
                                status);
      c.expect(status == cli::ok, tag + ": bound exit status");
      c.expect(out.value("bound", std::string()) == to_string(expected), tag + ": bound command value");
      c.expect(out.value("match", false), tag + ": bound command closed form");
      const auto dv = dual_vector(sys, t);
      c.expect(dv.bound == expected, tag + ": matrix pipeline");
      c.expect(bound_closed_form(family, t) == expected, tag + ": closed form");
      c.expect(exactly_equal(f_closed_form_vector(family, t), dv.f), tag + ": closed-form f");
    }
  }
}

void hamming_bound(Criterion& c) {
  for (const auto [n, d] : {std::pair{2, 2}, {3, 4}, {4, 3}}) {
    const auto family = hamming_preset(n, d);
    const auto sys = EkrSystem(realize(make_array(family)));
    for (int t = 1; t < d; ++t) {
      const std::string tag = "H(" + std::to_string(d) + "," + std::to_string(n) + ") t=" + std::to_string(t);
      const Rational expected = ipow(Rational(n), d - t);
      int status = -1;
      const json out = cli_json({"bound", "--preset", "hamming", "--n", std::to_string(n), "--d", std::to_string(d),
                                 "--t", std::to_string(t)},
                                status);
      c.expect(status == cli::ok, tag + ": bound exit status");
      c.expect(out.value("bound", std::string()) == to_string(expected), tag + ": bound command value");
      const auto dv = dual_vector(sys, t);
      c.expect(dv.bound == expected, tag + ": matrix pipeline");
      c.expect(bound_closed_form(family, t) == expected, tag + ": closed form");
      bool nonneg = true;
      for (Index j = 0; j < dv.f.size(); ++j) nonneg = nonneg && dv.f(j) >= 0;
      c.expect(nonneg && dv.feasible, tag + ": f nonnegative");
    }
  }
  const auto dv = dual_vector(EkrSystem(realize(make_array(hamming_preset(2, 2)))), 1);
  c.expect(dv.f(0) == 1 && dv.f(1) == 0 && dv.f(2) == 1, "H(2,2) t=1: f = (1,0,1)");
}

const TargetBasis kBases[] = {TargetBasis::split_down, TargetBasis::dual_standard, TargetBasis::standard};

void closed_vs_oracle(Criterion& c) {
  int q_racah = 0;
  for (const auto& f : testing::test_families()) {
    if (std::holds_alternative<QRacahParams>(f.params)) ++q_racah;
    const auto r = realize(make_array(f.params));
    for (int t = 0; t <= r.d(); ++t) {
      const Vec w = ekr_vector_oracle(r, t);
      for (const auto b : kBases)
        c.expect(exactly_equal(Vec(basis_matrix(r, b) * ekr_vector_closed(r, t, b)), w),
                 f.name + " t=" + std::to_string(t) + " " + to_string(b));
    }
  }
  c.expect(q_racah >= 3, "at least three q-Racah instances");
}

void inverse_pairs(Criterion& c) {
  for (const auto& p : test_arrays()) {
    const auto r = realize(p);
    const Mat I = Mat::Identity(r.dim(), r.dim());
    for (const auto b : kBases) {
      const Mat to = transition_to_ekr(r, b);
      const Mat from = transition_from_ekr(r, b);
      const std::string tag = "d=" + std::to_string(p.d) + " " + to_string(b);
      c.expect(exactly_equal(Mat(to * from), I), tag + ": to * from");
      c.expect(exactly_equal(Mat(from * to), I), tag + ": from * to");
    }
  }
}

void operator_actions(Criterion& c) {
  for (const auto& f : testing::test_families()) {
    const auto sys = EkrSystem(realize(make_array(f.params)));
    for (const auto op : {Operator::A, Operator::A_star})
      c.expect(exactly_equal(action_on_ekr_closed(sys.realization(), op), action_by_conjugation(sys, op)),
               f.name + (op == Operator::A ? ": A" : ": A*"));
  }
}

void split_standard_suite(Criterion& c) {
  for (const auto& f : testing::test_families()) {
    const auto r = realize(make_array(f.params));
    const auto report = verify_section2(r);
    c.expect(report.all_passed(), f.name + ": " + report.first_failure());
    c.expect(r.gram_solution_dim() == 1, f.name + ": form solution space dimension");
  }
}

void delta_identities(Criterion& c) {
  for (const auto& f : testing::test_families()) {
    const auto p = make_array(f.params);
    for (int s = 1; s <= p.d - 1; ++s) {
      const std::string tag = f.name + " s=" + std::to_string(s);
      c.expect(delta(p, s) == delta_product_form(p, s), tag + ": Delta product form");
      c.expect(theta_combination(p, s) == theta_combination_product_form(p, s), tag + ": theta combination");
    }
  }
}

void degeneracy(Criterion& c) {
  for (int d : {3, 5, 7}) {
    const auto p = testing::bannai_ito(d);
    const std::string tag = "Bannai/Ito d=" + std::to_string(d);
    const auto bc = base_class(p);
    c.expect(bc.beta && *bc.beta == -2, tag + ": beta = -2");
    const auto r = realize(p);
    bool refused = false;
    try {
      EkrSystem sys(r);
    } catch (const inadmissible_error& e) {
      refused = std::string(e.what()).find("q = -1") != std::string::npos;
    }
    c.expect(refused, tag + ": EKR construction refused");
    const auto report = degenerate_check(r);
    c.expect(report.paired_equal, tag + ": W_{2s-1} = W_{2s}");
    c.expect(!report.direct_sum, tag + ": not a direct sum");
  }
}

void property_suite(Criterion& c) {
  constexpr int trials = 100;
  const auto base = testing::seed();
  {
    std::mt19937_64 rng(base);
    for (int k = 0; k < trials; ++k)
      c.expect(testing::d4_relations_hold(make_array(testing::random_family(rng, 1, 6).params)),
               "D4 relations, trial " + std::to_string(k));
  }
  {
    std::mt19937_64 rng(base + 1);
    for (int k = 0; k < trials; ++k)
      c.expect(testing::vartheta_symmetric(make_array(testing::random_family(rng, 1, 8).params)),
               "vartheta symmetry, trial " + std::to_string(k));
  }
  {
    std::mt19937_64 rng(base + 2);
    for (int k = 0; k < trials; ++k)
      c.expect(testing::idempotent_algebra_holds(realize(make_array(testing::random_family(rng, 1, 4).params))),
               "idempotent algebra, trial " + std::to_string(k));
  }
  {
    std::mt19937_64 rng(base + 3);
    for (int k = 0; k < trials; ++k) {
      const auto sys = EkrSystem(realize(make_array(testing::random_family(rng, 1, 4).params)));
      std::uniform_int_distribution<int> pick(0, sys.d());
      c.expect(testing::lp_dual_unique(sys, pick(rng)), "LP dual uniqueness, trial " + std::to_string(k));
    }
  }
  {
    std::mt19937_64 rng(base + 4);
    for (int k = 0; k < trials; ++k) {
      const auto f = testing::random_family(rng, 1, 4);
      RealizeOptions o;
      o.v_star_scale = testing::random_nonzero(rng);
      o.v_scale = testing::random_nonzero(rng);
      o.v_star_down_scale = testing::random_nonzero(rng);
      c.expect(testing::normalization_covariant(make_array(f.params), o),
               "normalization covariance, trial " + std::to_string(k));
    }
  }
}

}  // namespace

int main() {
  struct Entry {
    const char* description;
    std::function<void(Criterion&)> run;
  };
  const Entry entries[] = {
      {"Johnson bound equals C(v-t, d-t); closed form and matrix pipeline agree", johnson_bound},
      {"Hamming bound equals n^(d-t); f nonnegative; H(2,2) t=1 gives f = (1,0,1)", hamming_bound},
      {"closed-form EKR coordinates in all three bases equal the subspace oracle", closed_vs_oracle},
      {"transition matrices to and from the EKR basis are mutual inverses", inverse_pairs},
      {"closed-form A and A* actions equal conjugation by the EKR basis", operator_actions},
      {"split/standard transition suite; form solution space has dimension 1", split_standard_suite},
      {"Delta and theta-combination product forms", delta_identities},
      {"beta = -2 with odd d refused; oracle shows W_{2s-1} = W_{2s}", degeneracy},
      {"randomized property suite, 100 trials each", property_suite},
  };

  std::cout << "seed " << testing::seed() << "\n";
  int failed = 0;
  int n = 0;
  for (const auto& e : entries) {
    ++n;
    Criterion c;
    try {
      e.run(c);
    } catch (const std::exception& ex) {
      c.expect(false, std::string("exception: ") + ex.what());
    }
    std::cout << (c.passed() ? "[PASS] " : "[FAIL] ") << "AC" << n << " " << e.description << " (" << c.checks()
              << " checks)";
    if (!c.passed()) {
      std::cout << ": " << c.failure();
      ++failed;
    }
    std::cout << "\n";
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
  return failed == 0 ? 0 : 1;
}
