#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "gpath/core.hpp"
#include "gpath/publish.hpp"

namespace gpath {

struct ExperimentConfig {
  int v_min = 3;
  int v_max = 10;
  bool edges_full = true;               // every |E| in [|V|-1, |V|(|V|-1)/2]
  std::vector<std::int64_t> edge_list;  // used when edges_full is false
  int trials = 1000;
  std::vector<double> eps_v_grid{0.5, 1.0};
  std::vector<double> eps_e_grid{0.5, 1.0};
  bool dp_vertices = true;
  bool dp_edges = true;
  bool splitting = true;
  std::uint64_t seed = 0;
  int cyclic_revisits = 0;
  bool measure_runtime = false;  // off keeps the CSV byte-stable
};

struct ResultRow {
  int vertices = 0;
  std::int64_t edges = 0;
  double eps_v = 0, eps_e = 0;
  std::string mode;
  double usable_fraction = 0;
  double good_output_fraction = 0;   // over usable trials
  double overall_good_fraction = 0;  // usable_fraction * good_output_fraction
  double mean_runtime_ms = 0;
  double median_runtime_ms = 0;
  int trials = 0;
};

ResultRow run_cell(const ExperimentConfig& cfg, int vertices,
                   std::int64_t edges, double eps_v, double eps_e);
std::vector<ResultRow> run_experiment(const ExperimentConfig& cfg);

void write_csv(std::ostream& out, const std::vector<ResultRow>& rows);

// Key-value text config, same line style as the map format.
ExperimentConfig read_config(std::istream& in);

// Rank correlation with average ranks for ties; the p-value is the
// one-sided Student-t approximation for negative correlation.
struct SpearmanResult {
  double rho = 0;
  double p_negative = 1;  // P[rho_hat <= observed | independence]
};
SpearmanResult spearman(const std::vector<double>& x,
                        const std::vector<double>& y);

// Deterministic per-trial seed derivation.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b,
                       std::uint64_t c, std::uint64_t d, std::uint64_t e);

}  // namespace gpath
