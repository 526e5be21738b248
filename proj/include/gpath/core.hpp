#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gpath/errors.hpp"
#include "gpath/rng.hpp"

namespace gpath {

// A vertex is identified by its base index plus a duplicate (sub) index.
// Sub index 0 is the base vertex itself; higher sub indices are created by
// ring removal, DP injection, or conflict splitting.
struct VertexId {
  std::int32_t base = 0;
  std::int32_t sub = 0;

  auto operator<=>(const VertexId&) const = default;
};

using Edge = std::pair<VertexId, VertexId>;

inline Edge make_edge(VertexId a, VertexId b) {
  return a < b ? Edge{a, b} : Edge{b, a};
}

std::string to_string(VertexId v);
VertexId parse_vertex(const std::string& token);

// Undirected graph. Raw input networks contain only sub = 0 vertices;
// processed networks also hold sub-vertices.
struct Network {
  std::vector<VertexId> vertices;  // sorted, unique
  std::set<Edge> edges;

  static Network over_bases(std::int32_t n);

  bool has_vertex(VertexId v) const;
  bool has_edge(VertexId a, VertexId b) const;
  void add_edge(VertexId a, VertexId b);
  int degree(VertexId v) const;
  int max_degree() const;
  std::vector<VertexId> neighbors(VertexId v) const;
  bool connected() const;
};

// Ordered vertex sequence; consecutive pairs are edges of the owning
// network. Repeats allowed (cyclic paths).
struct PathSeq {
  std::vector<VertexId> seq;
};

enum class Origin : std::uint8_t { RealRepeat, Injected, Split };

struct SubRecord {
  std::int32_t sub = 0;
  Origin origin = Origin::RealRepeat;
  // For Split pieces: the sub index of the vertex the piece was split from.
  std::int32_t parent_sub = -1;
};

// Public association between base vertices and their sub-vertices.
struct Lineage {
  std::map<std::int32_t, std::vector<SubRecord>> table;

  void add(std::int32_t base, SubRecord rec) { table[base].push_back(rec); }
  const SubRecord* find(VertexId v) const;
};

// Symmetric |V|x|V| table over {-1,0,1,2}: -1 same vertex, 0 non-edge,
// 1 path edge, 2 non-path edge. After randomization no off-diagonal 0
// remains.
class RelationMatrix {
 public:
  RelationMatrix() = default;
  explicit RelationMatrix(std::vector<VertexId> ids);

  int order() const { return static_cast<int>(ids_.size()); }
  const std::vector<VertexId>& ids() const { return ids_; }
  VertexId id(int i) const { return ids_[static_cast<std::size_t>(i)]; }
  int index_of(VertexId v) const;  // -1 if absent

  std::int8_t at(int i, int j) const {
    return a_[static_cast<std::size_t>(i) * ids_.size() +
              static_cast<std::size_t>(j)];
  }
  void set(int i, int j, std::int8_t v);  // symmetric update

  // Appends a row/column for a new vertex; off-diagonal entries of the new
  // row are initialized to fill.
  int add_vertex(VertexId v, std::int8_t fill);

  bool fully_randomized() const;

 private:
  std::vector<VertexId> ids_;
  std::map<VertexId, int> index_;
  std::vector<std::int8_t> a_;
};

// Splits a randomized matrix into the two published sub-graph edge sets:
// G = pairs marked 2 (branch mates), H = pairs marked 1 (path relations).
std::pair<std::set<Edge>, std::set<Edge>> derive_subgraphs(
    const RelationMatrix& r);

enum class ViolationKind {
  TooFewVertices,
  SelfLoop,
  BadEndpoint,
  Disconnected,
  EmptyPath,
  NonEdgeStep,
  UncoveredVertex,
  UnknownPathVertex,
};

struct Violation {
  ViolationKind kind;
  std::string detail;
};

std::vector<Violation> validate(const Network& n, const PathSeq& p);

// Synthetic map generator: a uniformly random vertex permutation forms the
// path; the remaining edges are drawn uniformly from the non-edges. With
// cyclic_revisits > 0, that many revisits of already-visited vertices are
// appended to the path along existing edges.
std::pair<Network, PathSeq> generate_map(std::int32_t num_vertices,
                                         std::int64_t num_edges, Rng& rng,
                                         std::int32_t cyclic_revisits = 0);

}  // namespace gpath
