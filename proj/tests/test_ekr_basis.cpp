#include "catch_amalgamated.hpp"
#include "leonard/errors.hpp"
#include "support.hpp"

using namespace leonard;

namespace {

EkrSystem system_for(const FamilyParams& f) { return EkrSystem(realize(make_array(f))); }

const TargetBasis kBases[] = {TargetBasis::split_down, TargetBasis::dual_standard, TargetBasis::standard};

}  // namespace

TEST_CASE("W_0 and W_d from the oracle", "[oracle]") {
  for (const auto& f : testing::test_families()) {
    INFO(f.name);
    const auto r = realize(make_array(f.params));
    const int d = r.d();
    CHECK(wt_subspace_oracle(r, 0) == RationalSubspace::span(r.v_star()));
    CHECK(wt_subspace_oracle(r, d) == image(r.E(0)));
    for (int t = 0; t <= d; ++t) CHECK(wt_subspace_oracle(r, t).dim() == 1);
    CHECK(exactly_equal(ekr_vector_oracle(r, 0), r.v_star()));
    CHECK(exactly_equal(ekr_vector_oracle(r, d), Vec(r.E(0) * r.v_star())));
  }
}

TEST_CASE("EKR vectors are normalized by their first-eigenspace projection", "[oracle]") {
  const auto sys = system_for(johnson_preset(9, 4));
  const auto& r = sys.realization();
  for (int t = 0; t <= sys.d(); ++t) {
    CHECK(exactly_equal(Vec(r.E(0) * sys.w(t)), Vec(r.E(0) * r.v_star())));
    CHECK(sys.W()[static_cast<std::size_t>(t)].contains(sys.w(t)));
  }
  CHECK(is_invertible(sys.w_matrix()));
}

TEST_CASE("closed-form coordinates agree with the oracle", "[closed]") {
  for (const auto& f : testing::test_families()) {
    INFO(f.name);
    const auto sys = EkrSystem(realize(make_array(f.params)));
    const auto& r = sys.realization();
    for (const auto b : kBases) {
      INFO(to_string(b));
      const Mat B = basis_matrix(r, b);
      for (int t = 0; t <= sys.d(); ++t)
        CHECK(exactly_equal(Vec(B * ekr_vector_closed(r, t, b)), sys.w(t)));
      // column ℓ of from_ekr expands the ℓ-th basis vector over w_0..w_d
      CHECK(exactly_equal(Mat(sys.w_matrix() * sys.from_ekr(b)), B));
      CHECK(exactly_equal(Mat(sys.to_ekr(b) * sys.from_ekr(b)), Mat::Identity(r.dim(), r.dim())));
      CHECK(exactly_equal(Mat(sys.from_ekr(b) * sys.to_ekr(b)), Mat::Identity(r.dim(), r.dim())));
    }
  }
}

TEST_CASE("dual-standard coordinates: leading one, zeros through t", "[closed]") {
  const auto r = realize(make_array(hamming_preset(3, 4)));
  for (int t = 0; t <= 4; ++t) {
    const Vec c = ekr_vector_closed(r, t, TargetBasis::dual_standard);
    CHECK(c(0) == 1);
    for (int j = 1; j <= t; ++j) CHECK(c(j) == 0);
  }
  // w_d = E_0 v*
  const Vec last = ekr_vector_closed(r, 4, TargetBasis::dual_standard);
  CHECK(exactly_equal(last, Vec(Vec::Unit(5, 0))));
}

TEST_CASE("standard coordinates: zeros strictly between 0 and d-t+1", "[closed]") {
  const auto r = realize(make_array(johnson_preset(12, 5)));
  for (int t = 0; t <= 5; ++t) {
    const Vec c = ekr_vector_closed(r, t, TargetBasis::standard);
    for (int i = 1; i <= 5 - t; ++i) CHECK(c(i) == 0);
    CHECK(c(0) != 0);
  }
}

TEST_CASE("action of A in the EKR basis", "[action]") {
  for (const auto& f : testing::test_families()) {
    INFO(f.name);
    const auto sys = EkrSystem(realize(make_array(f.params)));
    const auto& p = sys.params();
    const int d = sys.d();
    const Mat closed = action_on_ekr_closed(sys.realization(), Operator::A);
    CHECK(exactly_equal(closed, action_by_conjugation(sys, Operator::A)));
    // A w_t lies in span{w_t, ..., w_d}
    for (int t = 0; t <= d; ++t)
      for (int s = 0; s < t; ++s) CHECK(closed(s, t) == 0);
    CHECK(closed(d, d) == p.th(0));
    CHECK(closed(d - 1, d - 1) == p.th(d));
    CHECK(closed(d, d - 1) == p.th(0) - p.th(d));
  }
}

TEST_CASE("action of A* in the EKR basis", "[action]") {
  for (const auto& f : testing::test_families()) {
    INFO(f.name);
    const auto sys = EkrSystem(realize(make_array(f.params)));
    const auto& p = sys.params();
    const int d = sys.d();
    const Mat closed = action_on_ekr_closed(sys.realization(), Operator::A_star);
    CHECK(exactly_equal(closed, action_by_conjugation(sys, Operator::A_star)));
    // A* w_t lies in span{w_0, ..., w_t}
    for (int t = 0; t <= d; ++t)
      for (int s = t + 1; s <= d; ++s) CHECK(closed(s, t) == 0);
    CHECK(closed(0, 0) == p.th_star(0));
    CHECK(closed(1, 1) == p.th_star(d));
  }
}

TEST_CASE("A* w_1 has w_0 coefficient -phi_d/(theta_1 - theta_0), not theta*_0 - theta*_d", "[action]") {
  for (const auto& f : testing::test_families()) {
    INFO(f.name);
    const auto sys = EkrSystem(realize(make_array(f.params)));
    const auto& p = sys.params();
    const int d = sys.d();
    const Mat actual = action_by_conjugation(sys, Operator::A_star);
    CHECK(actual(0, 1) == -p.phi_at(d) / (p.th(1) - p.th(0)));
    CHECK(actual(0, 1) != p.th_star(0) - p.th_star(d));
  }
  const auto h22 = EkrSystem(realize(make_array(hamming_preset(2, 2))));
  const Mat m = action_by_conjugation(h22, Operator::A_star);
  CHECK(m(0, 1) == 2);
  CHECK(h22.params().th_star(0) - h22.params().th_star(2) == 4);
}

TEST_CASE("Delta in both forms", "[delta]") {
  for (const auto& f : testing::test_families()) {
    INFO(f.name);
    const auto p = make_array(f.params);
    for (int s = 1; s <= p.d - 1; ++s) {
      CHECK(delta(p, s) == delta_product_form(p, s));
      CHECK(theta_combination(p, s) == theta_combination_product_form(p, s));
      CHECK(delta_star(p, s) == delta(apply_d4(p, D4Element::star()), s));
    }
    CHECK_THROWS(delta(p, 0));
    CHECK_THROWS(delta(p, p.d));
  }
  for (int d : {4, 6}) {
    const auto p = testing::bannai_ito(d);
    for (int s = 1; s <= d - 1; ++s) {
      CHECK(delta(p, s) == delta_product_form(p, s));
      CHECK(theta_combination(p, s) == theta_combination_product_form(p, s));
    }
  }
}

TEST_CASE("theta combination for evenly spaced eigenvalues", "[delta]") {
  KrawtchoukParams k;
  k.d = 3;
  k.r = 5;
  k.s = 1;
  k.s_star = 2;
  const auto p = krawtchouk(k);
  CHECK(vartheta(p, 2) == Rational(4, 3));
  // (θ_3 − θ_0)·4/3 − (θ_2 − θ_0)·1
  CHECK(theta_combination(p, 1) == p.th(3) - p.th(1));
  CHECK(theta_combination(p, 1) == 2);
}

TEST_CASE("projections onto W_t", "[oracle]") {
  const auto sys = system_for(johnson_preset(7, 3));
  const Index n = sys.realization().dim();
  Mat total = Mat::Zero(n, n);
  for (int t = 0; t <= sys.d(); ++t) {
    const Mat P = ekr_projection(sys, t);
    CHECK(exactly_equal(Mat(P * P), P));
    CHECK(exactly_equal(Vec(P * sys.w(t)), sys.w(t)));
    total += P;
  }
  CHECK(exactly_equal(total, Mat::Identity(n, n)));
}

TEST_CASE("the full verification passes", "[verify]") {
  for (const auto& f : testing::test_families()) {
    INFO(f.name);
    const auto sys = EkrSystem(realize(make_array(f.params)));
    const auto report = verify_ekr(sys);
    INFO(report.first_failure());
    CHECK(report.all_passed());
    const auto star = star_ekr_relation(sys);
    INFO(star.first_failure());
    CHECK(star.all_passed());
  }
  const auto bi = EkrSystem(realize(testing::bannai_ito(4)));
  const auto report = verify_ekr(bi);
  INFO(report.first_failure());
  CHECK(report.all_passed());
}

TEST_CASE("q = -1 with odd d is refused", "[degenerate]") {
  for (int d : {3, 5}) {
    INFO(d);
    const auto r = realize(testing::bannai_ito(d));
    CHECK_THROWS_AS(EkrSystem(r), inadmissible_error);
    CHECK_THROWS_AS(ekr_vector_closed(r, 1, TargetBasis::standard), inadmissible_error);
    CHECK_THROWS_AS(action_on_ekr_closed(r, Operator::A), inadmissible_error);
    const auto report = degenerate_check(r);
    CHECK(report.degenerate);
    CHECK(report.ekr_refused);
    CHECK_FALSE(report.direct_sum);
    CHECK(report.paired_equal);
  }
  const auto even = degenerate_check(realize(testing::bannai_ito(4)));
  CHECK_FALSE(even.degenerate);
  CHECK_FALSE(even.ekr_refused);
  CHECK(even.direct_sum);
  for (auto dim : even.w_dims) CHECK(dim == 1);
}

TEST_CASE("the refusal message states the admissibility condition", "[degenerate]") {
  const auto r = realize(testing::bannai_ito(5));
  CHECK_THROWS_WITH(EkrSystem(r), Catch::Matchers::ContainsSubstring("q = -1") &&
                                      Catch::Matchers::ContainsSubstring("odd d"));
}
