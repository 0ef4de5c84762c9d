#include <set>

#include "doctest.h"
#include "polarscope/error.hpp"
#include "polarscope/harness.hpp"
#include "polarscope/serialize.hpp"

using namespace polarscope;

TEST_SUITE("harness") {

TEST_CASE("random helpers") {
  std::mt19937_64 rng(4);
  std::vector<int> hist(7, 0);
  for (int i = 0; i < 7000; ++i) {
    const auto x = uniform_below(rng, 7);
    REQUIRE(x < 7);
    ++hist[x];
  }
  for (int h : hist) CHECK(h > 800);
  for (int t = 0; t < 50; ++t) {
    const auto s = random_subset(rng, 135, 30);
    CHECK(s.size() == 30);
    CHECK(std::is_sorted(s.begin(), s.end()));
    CHECK(std::adjacent_find(s.begin(), s.end()) == s.end());
    CHECK(s.back() < 135);
  }
  CHECK(random_subset(rng, 5, 5) == std::vector<std::uint32_t>{0, 1, 2, 3, 4});
}

TEST_CASE("hyperplane covectors") {
  auto f = Field::make(3, 1);
  const auto cv = hyperplane_covectors(*f, 3);
  CHECK(cv.size() == 40);
  CHECK(std::is_sorted(cv.begin(), cv.end()));
  CHECK(cv.front() == std::vector<Element>{0, 0, 0, 1});
  for (const auto& c : cv) {
    const auto lead = std::find_if(c.begin(), c.end(), [](Element x) { return x != 0; });
    CHECK(*lead == 1);
  }
}

TEST_CASE("Q(6,2) over every hyperplane") {
  const PolarSpace s(make_polar_space(Family::parabolic, 3, Field::make(2, 1)));
  HarnessOptions o;
  o.samples = 30;
  const HarnessSummary sum = equivalence_harness(s, o);
  CHECK(sum.hyperplanes_total == 127);
  CHECK(sum.hyperplanes_examined == 127);
  CHECK(sum.tangent == 63);
  CHECK(sum.same_rank == 36);
  CHECK(sum.rank_drop == 28);
  CHECK(sum.positives.size() == 36);
  for (const auto& p : sum.positives) {
    CHECK(p.passed);
    CHECK(p.size == 30);
    CHECK(p.embedded.rank == 3);
    CHECK(p.embedded.param_half == 0);
    CHECK(p.embedded.point_count == 35);
  }
  CHECK(sum.negatives.size() == 30);
  CHECK(sum.all_negative_fail());
  CHECK(sum.implication_violations == 0);
  CHECK(sum.passed());
}

TEST_CASE("harness output is deterministic and independent of the thread count") {
  const PolarSpace s(make_polar_space(Family::elliptic, 3, Field::make(2, 1)));
  HarnessOptions o;
  o.samples = 8;
  o.max_sections = 3;
  o.seed = 12345;
  o.threads = 1;
  const auto a = harness_to_json(equivalence_harness(s, o)).dump();
  o.threads = 4;
  const auto b = harness_to_json(equivalence_harness(s, o)).dump();
  CHECK(a == b);
  o.seed = 54321;
  const auto c = harness_to_json(equivalence_harness(s, o)).dump();
  CHECK(a != c);

  const HarnessSummary sum = equivalence_harness(s, o);
  CHECK(sum.passed());
  CHECK(sum.positives.size() == 3);
  for (const auto& p : sum.positives) {
    CHECK(p.embedded.param_half == 2);
    CHECK(p.embedded.point_count == 63);
  }
}

TEST_CASE("symplectic spaces use the hyperbolic quadric") {
  const PolarSpace w(make_polar_space(Family::symplectic, 3, Field::make(2, 1)));
  HarnessOptions o;
  o.samples = 10;
  const HarnessSummary sum = equivalence_harness(w, o);
  REQUIRE(sum.positives.size() == 1);
  CHECK(sum.positives[0].covector.empty());
  CHECK(sum.positives[0].embedded.param_half == 0);
  CHECK(sum.passed());
}

TEST_CASE("spaces outside the case table are refused") {
  const PolarSpace q5(make_polar_space(Family::hyperbolic, 3, Field::make(2, 1)));
  CHECK_THROWS_AS(equivalence_harness(q5), InvalidArgument);
  const PolarSpace w3(make_polar_space(Family::symplectic, 2, Field::make(3, 1)));
  CHECK_THROWS_AS(equivalence_harness(w3), InvalidArgument);
  const PolarSpace h5(make_polar_space(Family::hermitian_odd, 3, Field::make(2, 2)));
  CHECK_THROWS_AS(equivalence_harness(h5), InvalidArgument);
}

}
