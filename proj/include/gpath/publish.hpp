#pragma once

#include <optional>
#include <set>
#include <vector>

#include "gpath/core.hpp"
#include "gpath/dp.hpp"
#include "gpath/preprocess.hpp"

namespace gpath {

// The published layered graph. Layer 0 holds the roots; every edge joins
// vertices on distinct layers and is oriented from the smaller layer down.
struct LayeredGraph {
  std::vector<std::vector<VertexId>> layers;  // each layer sorted
  std::set<Edge> edges;
  Lineage lineage;

  int depth() const { return static_cast<int>(layers.size()); }
  std::optional<int> layer_of(VertexId v) const;
  std::vector<VertexId> roots() const;   // no neighbor on a smaller layer
  std::vector<VertexId> leaves() const;  // no neighbor on a larger layer
  // True when one vertex is an ancestor of the other through a chain of
  // edges with strictly monotone layers.
  bool comparable(VertexId u, VertexId v) const;
};

struct Placement {
  VertexId v;
  int layer = 0;
  std::set<int> range;  // untried candidate layers
};

struct InsertionState {
  std::vector<Placement> stack;  // insertion order

  bool placed(VertexId v) const;
  int top() const;     // min placed layer (0 when empty)
  int bottom() const;  // max placed layer (0 when empty)
};

// Whether u can sit at the given layer without breaking the separation rule
// (branch mates on distinct layers) or creating a chain between vertices
// that must stay path-related.
bool test_insertion_layer(const InsertionState& s, VertexId u,
                          const RelationMatrix& r, int layer);

// Splits v0 (the vertex that exhausted every candidate layer) into pieces
// whose adjacencies cover v0's branch-mate set, placing each piece; expands
// r and lineage with the pieces. `pending` lists the vertices not yet
// inserted so their relations can be attached to a piece.
void resolve_conflicts(InsertionState& s, RelationMatrix& r, Lineage& lineage,
                       VertexId v0, const std::vector<VertexId>& pending);

struct InsertOptions {
  bool splitting = true;
  long max_transitions = 1'000'000;
};

struct InsertResult {
  bool success = false;     // false only when splitting is disabled
  bool split_used = false;
  LayeredGraph graph;       // unoriented; valid when success
  RelationMatrix relations; // possibly expanded by splitting
};

InsertResult insert_vertices(const PathSeq& p, RelationMatrix r,
                             Lineage lineage, const InsertOptions& opt = {});

// Applies the direction rule: if the leaf group sits nearer the path's
// first vertex than the root group, the layer order is reversed. Layers are
// re-packed and edges re-derived either way.
LayeredGraph orient(const LayeredGraph& g, VertexId first_vertex,
                    const PathSeq& p);

struct PublishOptions {
  double eps_v = 0.5;
  double eps_e = 0.5;
  bool dp_vertices = true;
  bool dp_edges = true;
  bool splitting = true;
  long max_transitions = 1'000'000;
};

struct PublishResult {
  bool success = false;     // a graph was produced
  bool usable = false;      // produced without splitting
  bool split_used = false;
  LayeredGraph graph;
  RelationMatrix relations;
  ProcessedNetwork processed;
  double total_budget = 0.0;
};

PublishResult publish(const Network& n, const PathSeq& p,
                      const PublishOptions& opt, Rng& rng);

}  // namespace gpath
