#include "gpath/dp.hpp"

#include <algorithm>
#include <string>

namespace gpath {

std::vector<double> exp_mechanism_probs(std::span<const double> qualities,
                                        PrivacyBudget eps,
                                        double sensitivity) {
  if (qualities.empty()) throw EmptyCandidates("no candidates to sample from");
  if (!(sensitivity > 0.0))
    throw NonPositiveSensitivity("sensitivity must be > 0");
  for (double q : qualities)
    if (!std::isfinite(q)) throw DomainViolation("non-finite quality");

  const double scale = eps.epsilon / (2.0 * sensitivity);
  const double qmax = *std::max_element(qualities.begin(), qualities.end());
  std::vector<double> w(qualities.size());
  double total = 0.0;
  for (std::size_t i = 0; i < qualities.size(); ++i) {
    w[i] = std::exp(scale * (qualities[i] - qmax));
    total += w[i];
  }
  for (double& x : w) x /= total;
  return w;
}

std::size_t exp_mechanism(std::span<const double> qualities, PrivacyBudget eps,
                          double sensitivity, Rng& rng) {
  std::vector<double> p = exp_mechanism_probs(qualities, eps, sensitivity);
  double u = rng.uniform();
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    u -= p[i];
    if (u < 0.0) return i;
  }
  return p.size() - 1;
}

double quality_vertex(int n, int max_n, int d, int max_d) {
  if (n < 0 || d < 0 || n > max_n || d > max_d)
    throw DomainViolation("quality_vertex: need 0 <= n <= max_n, 0 <= d <= max_d");
  return static_cast<double>(max_n - n) + static_cast<double>(max_d - d);
}

double quality_vertex_sensitivity() { return 1.0; }

double quality_edge(int x, int edge_count) {
  if (x != 1 && x != 2)
    throw BadRelationValue("quality_edge: x must be 1 or 2, got " +
                           std::to_string(x));
  if (edge_count < 3)
    throw TooFewEdges("quality_edge: needs at least 3 edges, got " +
                      std::to_string(edge_count));
  const double e = static_cast<double>(edge_count);
  return ((e - 2.0) / e) * static_cast<double>(x) - (e - 3.0) / e;
}

double quality_edge_sensitivity(int edge_count) {
  if (edge_count < 3)
    throw TooFewEdges("quality_edge_sensitivity: needs at least 3 edges");
  const double e = static_cast<double>(edge_count);
  return (e - 2.0) / e;
}

double total_budget(const BudgetLedger& ledger) { return ledger.total(); }

}  // namespace gpath
