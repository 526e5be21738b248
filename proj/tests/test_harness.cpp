#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "gpath/harness.hpp"
#include "gpath/io.hpp"
#include "support/instances.hpp"

using namespace gpath;
using testfix::b;

TEST_CASE("a single-trial cell produces sane fractions") {
  ExperimentConfig cfg;
  cfg.trials = 1;
  cfg.seed = 7;
  ResultRow row = run_cell(cfg, 5, 6, 0.5, 0.5);
  CHECK(row.vertices == 5);
  CHECK(row.edges == 6);
  CHECK(row.trials == 1);
  CHECK((row.usable_fraction == 0.0 || row.usable_fraction == 1.0));
  CHECK(row.overall_good_fraction ==
        doctest::Approx(row.usable_fraction * row.good_output_fraction));
}

TEST_CASE("cells are reproducible and independent of grid position") {
  ExperimentConfig cfg;
  cfg.trials = 50;
  cfg.seed = 11;
  ResultRow a = run_cell(cfg, 6, 8, 0.5, 1.0);
  ResultRow c = run_cell(cfg, 6, 8, 0.5, 1.0);
  CHECK(a.usable_fraction == c.usable_fraction);
  CHECK(a.good_output_fraction == c.good_output_fraction);
  CHECK(a.mode == c.mode);
}

TEST_CASE("the experiment grid enumerates vertices, edges and budgets") {
  ExperimentConfig cfg;
  cfg.v_min = 3;
  cfg.v_max = 4;
  cfg.edges_full = true;
  cfg.trials = 2;
  cfg.eps_v_grid = {0.5};
  cfg.eps_e_grid = {0.5, 1.0};
  auto rows = run_experiment(cfg);
  // |V|=3: |E| in {2, 3}; |V|=4: |E| in {3..6}. Six cells, two budgets each.
  CHECK(rows.size() == 12);
}

TEST_CASE("the results file is byte-stable for a fixed config") {
  ExperimentConfig cfg;
  cfg.v_min = 3;
  cfg.v_max = 3;
  cfg.trials = 20;
  cfg.seed = 4;
  cfg.eps_v_grid = {0.5};
  cfg.eps_e_grid = {0.5};
  std::ostringstream a, c;
  write_csv(a, run_experiment(cfg));
  write_csv(c, run_experiment(cfg));
  CHECK(a.str() == c.str());
  CHECK(a.str().rfind("# gpath-results v1 ", 0) == 0);
  CHECK(a.str().find("\nvertices,edges,eps_v,eps_e,mode,") !=
        std::string::npos);
}

TEST_CASE("configs parse from key-value text") {
  std::istringstream in(
      "# comment\n"
      "vertices 3 5\n"
      "edges 4 6\n"
      "trials 25\n"
      "eps_v 0.5 1\n"
      "eps_e 1\n"
      "dp_vertices 1\n"
      "dp_edges 0\n"
      "splitting 0\n"
      "seed 99\n"
      "cyclic 2\n"
      "measure_runtime 1\n");
  ExperimentConfig cfg = read_config(in);
  CHECK(cfg.v_min == 3);
  CHECK(cfg.v_max == 5);
  CHECK_FALSE(cfg.edges_full);
  CHECK(cfg.edge_list == std::vector<std::int64_t>{4, 6});
  CHECK(cfg.trials == 25);
  CHECK(cfg.eps_v_grid == std::vector<double>{0.5, 1.0});
  CHECK(cfg.eps_e_grid == std::vector<double>{1.0});
  CHECK(cfg.dp_vertices);
  CHECK_FALSE(cfg.dp_edges);
  CHECK_FALSE(cfg.splitting);
  CHECK(cfg.seed == 99);
  CHECK(cfg.cyclic_revisits == 2);
  CHECK(cfg.measure_runtime);
}

TEST_CASE("config validation rejects unusable grids") {
  std::istringstream empty_eps("vertices 3 4\neps_v\n");
  CHECK_THROWS_AS(read_config(empty_eps), ConfigError);
  std::istringstream bad_range("vertices 5 3\n");
  CHECK_THROWS_AS(read_config(bad_range), ConfigError);
  std::istringstream unknown("frobnicate 1\n");
  CHECK_THROWS_AS(read_config(unknown), ConfigError);
}

TEST_CASE("rank correlation handles perfect order and ties") {
  CHECK(spearman({1, 2, 3, 4, 5}, {2, 4, 6, 8, 10}).rho ==
        doctest::Approx(1.0));
  CHECK(spearman({1, 2, 3, 4, 5}, {10, 8, 6, 4, 2}).rho ==
        doctest::Approx(-1.0));
  auto r = spearman({1, 2, 3, 4}, {1, 1, 2, 2});
  CHECK(r.rho > 0.0);
  CHECK(r.rho < 1.0);
  // A strongly decreasing sample is significantly negative; an increasing
  // one is not.
  CHECK(spearman({1, 2, 3, 4, 5, 6, 7, 8}, {8, 7, 6, 5, 4, 3, 2, 1})
            .p_negative < 0.05);
  CHECK(spearman({1, 2, 3, 4, 5, 6, 7, 8}, {1, 2, 3, 4, 5, 6, 7, 8})
            .p_negative > 0.5);
}

TEST_CASE("seed mixing separates nearby grid coordinates") {
  const auto a = mix_seed(1, 2, 3, 4, 5, 6);
  CHECK(a == mix_seed(1, 2, 3, 4, 5, 6));
  CHECK(a != mix_seed(1, 2, 3, 4, 5, 7));
  CHECK(a != mix_seed(2, 2, 3, 4, 5, 6));
}

TEST_CASE("map files round-trip") {
  Rng gen(13);
  auto [n, p] = generate_map(6, 9, gen, 1);
  std::ostringstream out;
  write_map(out, n, p);
  std::istringstream in(out.str());
  auto [n2, p2] = read_map(in);
  CHECK(n2.vertices == n.vertices);
  CHECK(n2.edges == n.edges);
  CHECK(p2.seq == p.seq);
}

TEST_CASE("published graphs round-trip including lineage") {
  Rng gen(14);
  auto [n, p] = generate_map(6, 8, gen);
  Rng rng(15);
  PublishResult res = publish(n, p, {}, rng);
  REQUIRE(res.success);
  std::ostringstream out;
  write_published(out, res.graph);
  std::istringstream in(out.str());
  LayeredGraph g2 = read_published(in);
  CHECK(g2.layers == res.graph.layers);
  CHECK(g2.edges == res.graph.edges);
  std::ostringstream again;
  write_published(again, g2);
  CHECK(again.str() == out.str());
}

TEST_CASE("map parsing reports malformed input") {
  std::istringstream bad("V 3\nE 0 1\nE 1 zz\nP 0 1 2\n");
  CHECK_THROWS_AS(read_map(bad), ParseError);
}

TEST_CASE("matrix and report writers emit their sections") {
  testfix::Fixture f = testfix::branching_demo();
  std::ostringstream m;
  write_matrix(m, f.rel);
  CHECK(m.str().rfind("R 6", 0) == 0);

  InsertResult ins = insert_vertices(f.path, f.rel, f.pn.lineage,
                                     {.splitting = false});
  REQUIRE(ins.success);
  LayeredGraph g = orient(ins.graph, f.path.seq.front(), f.path);
  Reconstruction rec = reconstruct_path(g, f.net, g.lineage);
  std::ostringstream rep;
  write_report(rep, rec);
  CHECK(rep.str().find("EDGES ") != std::string::npos);
  CHECK(rep.str().find("ORDER confirmed") != std::string::npos);
  CHECK(rep.str().find("SEQ ") != std::string::npos);
}

TEST_CASE("missing files raise io errors") {
  CHECK_THROWS_AS(slurp_file("/nonexistent/gpath-test-file"), IoError);
  CHECK_THROWS_AS(spit_file("/nonexistent/dir/gpath-test-file", "x"), IoError);
}
