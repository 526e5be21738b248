#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "gpath/preprocess.hpp"
#include "support/instances.hpp"

using namespace gpath;
using testfix::b;

namespace {

int count_subs(const ProcessedNetwork& pn, std::int32_t base) {
  int c = 0;
  for (VertexId v : pn.network.vertices) c += (v.base == base);
  return c;
}

}  // namespace

TEST_CASE("without privacy noise every sub-count equals the appearances") {
  auto [n, p] = testfix::revisit_demo();
  Rng rng(5);
  ProcessedNetwork pn = preprocess_vertices(n, p, PrivacyBudget(0.5), rng, false);
  CHECK(count_subs(pn, 1) == 2);
  CHECK(count_subs(pn, 2) == 2);
  for (std::int32_t base : {0, 3, 4, 5}) CHECK(count_subs(pn, base) == 1);
  // No surplus vertices, so the relabeled path keeps the walk's length.
  CHECK(pn.path.seq.size() == p.seq.size());
}

TEST_CASE("revisits are relabeled as fresh sub-vertices in visit order") {
  auto [n, p] = testfix::revisit_demo();  // walk 0 1 2 3 4 1 2 5
  Rng rng(5);
  ProcessedNetwork pn = preprocess_vertices(n, p, PrivacyBudget(0.5), rng, false);
  const std::vector<VertexId> want = {b(0), b(1), b(2), b(3),
                                      b(4), b(1, 1), b(2, 1), b(5)};
  CHECK(pn.path.seq == want);
  // Sub-vertices inherit the base vertex's adjacency.
  CHECK(pn.network.has_edge(b(1, 1), b(2)));
  CHECK(pn.network.has_edge(b(1, 1), b(2, 1)));
  CHECK(pn.network.has_edge(b(1, 1), b(4)));
  // Duplicates of the same base are not adjacent (1-1 is not an edge).
  CHECK_FALSE(pn.network.has_edge(b(1), b(1, 1)));

  RelationMatrix r = relation_init(pn);
  // Consecutive on the relabeled path.
  CHECK(r.at(r.index_of(b(1)), r.index_of(b(2))) == 1);
  // Real edge between non-consecutive sub-vertices.
  CHECK(r.at(r.index_of(b(1)), r.index_of(b(2, 1))) == 2);
}

TEST_CASE("lineage distinguishes real repeats from injected duplicates") {
  auto [n, p] = testfix::revisit_demo();
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Rng rng(seed);
    ProcessedNetwork pn =
        preprocess_vertices(n, p, PrivacyBudget(1.0), rng, true);
    std::set<VertexId> on_path(pn.path.seq.begin(), pn.path.seq.end());
    for (const auto& [base, recs] : pn.lineage.table) {
      const int appear = (base == 1 || base == 2) ? 2 : 1;
      CHECK(static_cast<int>(recs.size()) == count_subs(pn, base));
      for (const SubRecord& rec : recs) {
        CHECK(rec.origin ==
              (rec.sub < appear ? Origin::RealRepeat : Origin::Injected));
        // Every sub-vertex, injected or not, appears on the path exactly once.
        CHECK(on_path.count({base, rec.sub}) == 1);
      }
    }
    // Injected duplicates are appended to the path, so the processed path
    // is duplicate-free and covers the processed network exactly.
    CHECK(on_path.size() == pn.path.seq.size());
    CHECK(on_path.size() == pn.network.vertices.size());
  }
}

TEST_CASE("noisy sub-counts cover the full sampling range over seeds") {
  // Simple 3-vertex path: each count lives in [1, 2], so the processed
  // vertex total ranges over [3, 6]; with enough seeds both extremes occur.
  auto [n, p] = testfix::three_chain();
  std::set<std::size_t> totals;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Rng rng(seed);
    ProcessedNetwork pn =
        preprocess_vertices(n, p, PrivacyBudget(0.5), rng, true);
    for (std::int32_t base : {0, 1, 2}) {
      const int c = count_subs(pn, base);
      CHECK(c >= 1);
      CHECK(c <= 2);
    }
    totals.insert(pn.network.vertices.size());
    CHECK(pn.path.seq.size() == pn.network.vertices.size());
  }
  CHECK(totals.count(3) == 1);
  CHECK(totals.count(6) == 1);
}

TEST_CASE("vertex pre-processing rejects invalid inputs") {
  Network n;
  n.vertices = {b(0), b(1), b(2)};
  n.add_edge(b(0), b(1));  // vertex 2 disconnected
  PathSeq p;
  p.seq = {b(0), b(1)};
  Rng rng(1);
  CHECK_THROWS_AS(preprocess_vertices(n, p, PrivacyBudget(0.5), rng),
                  InvalidInput);
}

TEST_CASE("relation tables come back fully randomized") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng gen(seed);
    auto [n, p] = generate_map(6, 8, gen);
    Rng rng(seed + 100);
    ProcessedNetwork pn =
        preprocess_vertices(n, p, PrivacyBudget(0.5), rng, true);
    for (bool dp : {true, false}) {
      Rng rng2(seed + 200);
      RelationMatrix r = preprocess_edges(pn, PrivacyBudget(0.5), rng2, dp);
      CHECK(r.fully_randomized());
      for (int i = 0; i < r.order(); ++i)
        for (int j = 0; j < r.order(); ++j) {
          if (i == j)
            CHECK(r.at(i, j) == -1);
          else
            CHECK((r.at(i, j) == 1 || r.at(i, j) == 2));
        }
      // Real relations are never resampled.
      RelationMatrix init = relation_init(pn);
      for (int i = 0; i < r.order(); ++i)
        for (int j = 0; j < r.order(); ++j)
          if (init.at(i, j) != 0) CHECK(r.at(i, j) == init.at(i, j));
    }
  }
}

TEST_CASE("a complete network leaves nothing to randomize") {
  Rng gen(3);
  auto [n, p] = generate_map(5, 10, gen);
  Rng rng(4);
  ProcessedNetwork pn = preprocess_vertices(n, p, PrivacyBudget(0.5), rng, false);
  RelationMatrix init = relation_init(pn);
  Rng rng2(5);
  RelationMatrix r = preprocess_edges(pn, PrivacyBudget(0.5), rng2, true);
  for (int i = 0; i < r.order(); ++i)
    for (int j = 0; j < r.order(); ++j) CHECK(r.at(i, j) == init.at(i, j));
}

TEST_CASE("edge pre-processing refuses a path with repeats") {
  auto [n, p] = testfix::revisit_demo();
  ProcessedNetwork pn{n, p, {}};  // not relabeled
  Rng rng(1);
  CHECK_THROWS_AS(preprocess_edges(pn, PrivacyBudget(0.5), rng), CyclicPath);
}

TEST_CASE("branch frequencies on non-edges match the closed form") {
  // One non-edge pair on a 4-vertex path network: Pr[2] = e^{eps/2} / (1 + e^{eps/2}).
  Network n;
  n.vertices = {b(0), b(1), b(2), b(3)};
  for (auto [u, v] :
       std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}, {0, 2}})
    n.add_edge(b(u), b(v));
  PathSeq p;
  p.seq = {b(0), b(1), b(2), b(3)};
  ProcessedNetwork pn{n, p, {}};
  const double eps = 1.0;
  const double want = std::exp(eps / 2.0) / (1.0 + std::exp(eps / 2.0));
  const int trials = 20000;
  int twos = 0;
  Rng rng(77);
  for (int t = 0; t < trials; ++t) {
    RelationMatrix r = preprocess_edges(pn, PrivacyBudget(eps), rng, true);
    twos += (r.at(r.index_of(b(0)), r.index_of(b(3))) == 2);
  }
  const double se = std::sqrt(want * (1.0 - want) / trials);
  CHECK(std::abs(twos / double(trials) - want) < 4.0 * se);
}

TEST_CASE("privacy audit: identical instances have ratio one") {
  Rng gen(9);
  auto [n, p] = generate_map(4, 4, gen);
  VertexStepInstance a{n, p};
  CHECK(vertex_step_max_ratio(a, a, PrivacyBudget(0.5)) ==
        doctest::Approx(1.0));
  std::set<Edge> pe;
  for (std::size_t i = 0; i + 1 < p.seq.size(); ++i)
    pe.insert(make_edge(p.seq[i], p.seq[i + 1]));
  EdgeStepInstance ea{n, pe};
  CHECK(edge_step_max_ratio(ea, ea, PrivacyBudget(0.5)) ==
        doctest::Approx(1.0));
}

TEST_CASE("privacy audit rejects oversized instances") {
  Rng gen(10);
  auto [n, p] = generate_map(6, 6, gen);
  VertexStepInstance a{n, p};
  CHECK_THROWS_AS(vertex_step_max_ratio(a, a, PrivacyBudget(0.5)),
                  InstanceTooLarge);
  EdgeStepInstance ea{n, {}};
  CHECK_THROWS_AS(edge_step_max_ratio(ea, ea, PrivacyBudget(0.5)),
                  InstanceTooLarge);
}
