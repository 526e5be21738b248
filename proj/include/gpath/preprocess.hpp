#pragma once

#include "gpath/core.hpp"
#include "gpath/dp.hpp"

namespace gpath {

// Output of the ring-removal step: an acyclic path over sub-vertices, the
// expanded network, and the public base/sub association.
struct ProcessedNetwork {
  Network network;  // N-hat
  PathSeq path;     // P-hat, no repeated VertexId
  Lineage lineage;
};

// Differentially private ring removal. For each base vertex, samples its
// sub-vertex count from [appearances, max(maxAppearances, 2)] with the
// vertex quality function, relabels repeated path visits as distinct
// sub-vertices, appends surplus duplicates to the path, and expands edges
// so every sub-vertex inherits its base vertex's adjacency.
// With dp_enabled = false, every count collapses to its minimum.
ProcessedNetwork preprocess_vertices(const Network& n, const PathSeq& p,
                                     PrivacyBudget eps_v, Rng& rng,
                                     bool dp_enabled = true);

// Relation matrix initialized from (N-hat, P-hat): consecutive path pairs
// get 1, remaining real edges 2, non-edges 0, diagonal -1.
RelationMatrix relation_init(const ProcessedNetwork& pn);

// Differentially private edge pre-processing: every 0 entry of the
// initialized matrix is independently resampled to 1 or 2 (row-major pair
// order). With dp_enabled = false the resampling is uniform instead of
// quality-weighted; either way no off-diagonal 0 remains.
RelationMatrix preprocess_edges(const ProcessedNetwork& pn,
                                PrivacyBudget eps_e, Rng& rng,
                                bool dp_enabled = true);

// --- Privacy audit (exact enumeration; used by the acceptance suite) ---

struct VertexStepInstance {
  Network net;
  PathSeq path;
};

// Neighboring edge-step inputs are described by their real edge set and the
// subset of those edge slots the publisher treats as path relations; the
// withheld edge simply moves from fixed to randomized on the adversary side.
struct EdgeStepInstance {
  Network net;
  std::set<Edge> path_edges;
};

// Max over all outputs of Pr[out | a] / Pr[out | b] for the vertex
// pre-processing step, computed from analytic sampling probabilities.
double vertex_step_max_ratio(const VertexStepInstance& a,
                             const VertexStepInstance& b, PrivacyBudget eps_v);

// Same for the edge pre-processing step; outputs with Pr[out | a] = 0 are
// skipped and an output with Pr[out | b] = 0 but Pr[out | a] > 0 yields
// infinity.
double edge_step_max_ratio(const EdgeStepInstance& a, const EdgeStepInstance& b,
                           PrivacyBudget eps_e);

}  // namespace gpath
