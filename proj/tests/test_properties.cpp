#include "catch_amalgamated.hpp"
#include "support.hpp"

using namespace leonard;

namespace {

constexpr int kTrials = 100;

}  // namespace

TEST_CASE("D4 relations on random arrays", "[property]") {
  std::mt19937_64 rng(testing::seed());
  for (int trial = 0; trial < kTrials; ++trial) {
    const auto f = testing::random_family(rng, 1, 6);
    INFO(f.name << " seed " << testing::seed() << " trial " << trial);
    CHECK(testing::d4_relations_hold(make_array(f.params)));
  }
}

TEST_CASE("vartheta symmetry on random arrays", "[property]") {
  std::mt19937_64 rng(testing::seed() + 1);
  for (int trial = 0; trial < kTrials; ++trial) {
    const auto f = testing::random_family(rng, 1, 8);
    INFO(f.name << " seed " << testing::seed() << " trial " << trial);
    CHECK(testing::vartheta_symmetric(make_array(f.params)));
  }
}

TEST_CASE("idempotent algebra on random realizations", "[property]") {
  std::mt19937_64 rng(testing::seed() + 2);
  for (int trial = 0; trial < kTrials; ++trial) {
    const auto f = testing::random_family(rng, 1, 4);
    INFO(f.name << " seed " << testing::seed() << " trial " << trial);
    CHECK(testing::idempotent_algebra_holds(realize(make_array(f.params))));
  }
}

TEST_CASE("LP dual system has a unique solution", "[property]") {
  std::mt19937_64 rng(testing::seed() + 3);
  for (int trial = 0; trial < kTrials; ++trial) {
    const auto f = testing::random_family(rng, 1, 4);
    INFO(f.name << " seed " << testing::seed() << " trial " << trial);
    const auto sys = EkrSystem(realize(make_array(f.params)));
    std::uniform_int_distribution<int> pick(0, sys.d());
    CHECK(testing::lp_dual_unique(sys, pick(rng)));
  }
}

TEST_CASE("normalization covariance", "[property]") {
  std::mt19937_64 rng(testing::seed() + 4);
  for (int trial = 0; trial < kTrials; ++trial) {
    const auto f = testing::random_family(rng, 1, 4);
    INFO(f.name << " seed " << testing::seed() << " trial " << trial);
    RealizeOptions o;
    o.v_star_scale = testing::random_nonzero(rng);
    o.v_scale = testing::random_nonzero(rng);
    o.v_star_down_scale = testing::random_nonzero(rng);
    CHECK(testing::normalization_covariant(make_array(f.params), o));
  }
}
