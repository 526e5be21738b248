#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>
#include <numeric>

#include "gpath/dp.hpp"

using namespace gpath;

TEST_CASE("sampling probabilities match the closed form") {
  SUBCASE("two candidates, unit quality gap") {
    const std::array<double, 2> q{1.0, 0.0};
    auto p = exp_mechanism_probs(q, PrivacyBudget(2.0), 1.0);
    const double e = std::exp(1.0);
    CHECK(p[0] == doctest::Approx(e / (e + 1.0)).epsilon(1e-12));
    CHECK(p[1] == doctest::Approx(1.0 / (e + 1.0)).epsilon(1e-12));
  }
  SUBCASE("equal qualities give the uniform distribution") {
    const std::array<double, 4> q{3.0, 3.0, 3.0, 3.0};
    auto p = exp_mechanism_probs(q, PrivacyBudget(0.7), 2.0);
    for (double x : p) CHECK(x == doctest::Approx(0.25).epsilon(1e-12));
  }
  SUBCASE("a single candidate is certain") {
    const std::array<double, 1> q{5.0};
    auto p = exp_mechanism_probs(q, PrivacyBudget(1.0), 1.0);
    CHECK(p[0] == doctest::Approx(1.0));
    Rng rng(7);
    CHECK(exp_mechanism(q, PrivacyBudget(1.0), 1.0, rng) == 0);
  }
  SUBCASE("probabilities sum to one and preserve quality order") {
    const std::array<double, 5> q{0.0, 2.0, 1.0, 4.0, 3.0};
    auto p = exp_mechanism_probs(q, PrivacyBudget(0.9), 1.5);
    CHECK(std::accumulate(p.begin(), p.end(), 0.0) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(p[3] > p[4]);
    CHECK(p[4] > p[1]);
    CHECK(p[1] > p[2]);
    CHECK(p[2] > p[0]);
  }
  SUBCASE("pairwise ratios follow exp(eps*(qi-qj)/(2*sensitivity))") {
    const std::array<double, 3> q{1.0, 4.0, 2.5};
    const double eps = 1.3, sens = 0.8;
    auto p = exp_mechanism_probs(q, PrivacyBudget(eps), sens);
    for (std::size_t i = 0; i < q.size(); ++i)
      for (std::size_t j = 0; j < q.size(); ++j)
        CHECK(p[i] / p[j] ==
              doctest::Approx(std::exp(eps * (q[i] - q[j]) / (2.0 * sens)))
                  .epsilon(1e-10));
  }
}

TEST_CASE("sampling inputs are validated") {
  const std::array<double, 2> q{1.0, 0.0};
  CHECK_THROWS_AS(exp_mechanism_probs({}, PrivacyBudget(1.0), 1.0),
                  EmptyCandidates);
  CHECK_THROWS_AS(exp_mechanism_probs(q, PrivacyBudget(1.0), 0.0),
                  NonPositiveSensitivity);
  CHECK_THROWS_AS(exp_mechanism_probs(q, PrivacyBudget(1.0), -2.0),
                  NonPositiveSensitivity);
  const std::array<double, 2> bad{1.0, std::nan("")};
  CHECK_THROWS_AS(exp_mechanism_probs(bad, PrivacyBudget(1.0), 1.0),
                  DomainViolation);
  CHECK_THROWS_AS(PrivacyBudget(0.0), BadBudget);
  CHECK_THROWS_AS(PrivacyBudget(-1.0), BadBudget);
  CHECK_THROWS_AS(PrivacyBudget(std::numeric_limits<double>::infinity()),
                  BadBudget);
}

TEST_CASE("empirical draw frequencies match analytic probabilities") {
  const std::array<double, 3> q{0.0, 1.0, 2.0};
  auto p = exp_mechanism_probs(q, PrivacyBudget(1.0), 1.0);
  Rng rng(42);
  const int n = 100000;
  std::array<int, 3> counts{};
  for (int i = 0; i < n; ++i)
    ++counts[exp_mechanism(q, PrivacyBudget(1.0), 1.0, rng)];
  for (std::size_t i = 0; i < 3; ++i) {
    const double se = std::sqrt(p[i] * (1.0 - p[i]) / n);
    CHECK(std::abs(counts[i] / double(n) - p[i]) < 3.0 * se + 1e-9);
  }
}

TEST_CASE("vertex quality decreases in sub-count and degree") {
  CHECK(quality_vertex(1, 3, 2, 4) == doctest::Approx(4.0));
  CHECK(quality_vertex(3, 3, 4, 4) == doctest::Approx(0.0));
  CHECK(quality_vertex(0, 5, 0, 2) == doctest::Approx(7.0));
  CHECK(quality_vertex_sensitivity() == doctest::Approx(1.0));
  CHECK_THROWS_AS(quality_vertex(4, 3, 0, 4), DomainViolation);
  CHECK_THROWS_AS(quality_vertex(-1, 3, 0, 4), DomainViolation);
}

TEST_CASE("edge quality favors the branch value") {
  CHECK(quality_edge(2, 10) == doctest::Approx(0.9));
  CHECK(quality_edge(1, 10) == doctest::Approx(0.1));
  CHECK(quality_edge(2, 3) == doctest::Approx(2.0 / 3.0));
  CHECK(quality_edge_sensitivity(10) == doctest::Approx(0.8));
  CHECK(quality_edge(2, 10) - quality_edge(1, 10) ==
        doctest::Approx(quality_edge_sensitivity(10)));
  CHECK_THROWS_AS(quality_edge(3, 10), BadRelationValue);
  CHECK_THROWS_AS(quality_edge(2, 2), TooFewEdges);
  CHECK_THROWS_AS(quality_edge_sensitivity(2), TooFewEdges);
}

TEST_CASE("branch draw probability equals the two-point closed form") {
  // For a non-edge pair the mechanism chooses between x = 1 and x = 2 with
  // a quality gap equal to the sensitivity, so Pr[2] collapses to
  // exp(eps/2) / (1 + exp(eps/2)) independent of the edge count.
  for (double eps : {0.5, 1.0, 2.0}) {
    for (int m : {3, 7, 12}) {
      const std::array<double, 2> q{quality_edge(1, m), quality_edge(2, m)};
      auto p =
          exp_mechanism_probs(q, PrivacyBudget(eps), quality_edge_sensitivity(m));
      const double want = std::exp(eps / 2.0) / (1.0 + std::exp(eps / 2.0));
      CHECK(p[1] == doctest::Approx(want).epsilon(1e-12));
    }
  }
}

TEST_CASE("total budget composes the two steps plus the fixed edge term") {
  const double ln2 = std::log(2.0);
  CHECK(total_budget({PrivacyBudget(0.5), PrivacyBudget(0.5)}) ==
        doctest::Approx(1.0 + ln2));
  CHECK(total_budget({PrivacyBudget(1.0), PrivacyBudget(1.0)}) ==
        doctest::Approx(2.0 + ln2));
  CHECK(total_budget({PrivacyBudget(1.0), PrivacyBudget(0.5)}) ==
        doctest::Approx(1.5 + ln2));
}
