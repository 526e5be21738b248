#pragma once

#include <cmath>
#include <span>
#include <vector>

#include "gpath/errors.hpp"
#include "gpath/rng.hpp"

namespace gpath {

struct PrivacyBudget {
  double epsilon = 0.0;

  explicit PrivacyBudget(double eps) : epsilon(eps) {
    if (!(eps > 0.0) || !std::isfinite(eps))
      throw BadBudget("privacy budget must be positive and finite");
  }
};

// Analytic sampling probabilities of the exponential mechanism:
// Pr[i] = exp(eps*q_i/(2*sensitivity)) / sum_j exp(eps*q_j/(2*sensitivity)),
// computed with the max quality subtracted before exponentiation.
std::vector<double> exp_mechanism_probs(std::span<const double> qualities,
                                        PrivacyBudget eps, double sensitivity);

// Samples a candidate index from the distribution above.
std::size_t exp_mechanism(std::span<const double> qualities, PrivacyBudget eps,
                          double sensitivity, Rng& rng);

// Quality of giving a base vertex n sub-vertices when its degree is d:
// max_n - n + max_d - d.
double quality_vertex(int n, int max_n, int d, int max_d);
double quality_vertex_sensitivity();

// Quality of relation value x in {1,2} for a non-edge pair:
// ((|E|-2)/|E|)*x - (|E|-3)/|E|.
double quality_edge(int x, int edge_count);
double quality_edge_sensitivity(int edge_count);

// Sequential composition of the two pre-processing steps; the ln 2 term
// comes from the edge step.
struct BudgetLedger {
  PrivacyBudget eps_v;
  PrivacyBudget eps_e;

  double total() const { return eps_v.epsilon + eps_e.epsilon + std::log(2.0); }
};

double total_budget(const BudgetLedger& ledger);

}  // namespace gpath
