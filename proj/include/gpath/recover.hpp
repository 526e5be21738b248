#pragma once

#include <map>
#include <set>
#include <vector>

#include "gpath/core.hpp"
#include "gpath/publish.hpp"

namespace gpath {

enum class EdgeStatus { InPath, NotInPath };

// A path participant's test for a true network edge: the edge was traversed
// iff some pair of real-origin duplicates of its endpoints is not
// branch-comparable in the published graph.
EdgeStatus participant_edge_status(const LayeredGraph& g,
                                   const Lineage& lineage, const Edge& e,
                                   const Network& n);

enum class OrderKind { Confirmed, Ambiguous, Failed };

struct Reconstruction {
  std::set<Edge> edge_set;          // base-vertex pairs recovered as traversed
  OrderKind order = OrderKind::Failed;
  std::vector<PathSeq> candidates;  // 1 when confirmed, 2 when ambiguous
};

Reconstruction reconstruct_path(const LayeredGraph& g, const Network& n,
                                const Lineage& lineage);

// 1 = confirmed and correct, 0.5 = truth among an ambiguous pair, else 0.
double score_good_output(const Reconstruction& rec, const PathSeq& truth);

struct AdversaryView {
  Network network_minus_edge;
  std::vector<VertexId> path_vertices;
  LayeredGraph published;
  Lineage lineage;
};

// Brute-force missing-edge attack: every vertex pair absent from the
// adversary's network is tried as the withheld edge; a candidate survives
// when the published graph stays consistent with some path over the
// augmented network. Weights are uniform over survivors.
std::map<Edge, double> adversary_infer(const AdversaryView& view);

}  // namespace gpath
