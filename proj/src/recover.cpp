#include "gpath/recover.hpp"

#include <algorithm>
#include <optional>

namespace gpath {

namespace {

// Placed representatives of a sub-vertex: itself when present in the graph,
// plus the pieces it was split into. A split vertex can stay placed (keeping
// its path relations) while its pieces carry the branch relations, so the
// pieces must be consulted even when the parent is in the graph.
std::vector<VertexId> representatives(const LayeredGraph& g,
                                      const Lineage& lineage, VertexId v) {
  std::vector<VertexId> out;
  if (g.layer_of(v)) out.push_back(v);
  auto it = lineage.table.find(v.base);
  if (it == lineage.table.end()) return out;
  for (const SubRecord& rec : it->second)
    if (rec.origin == Origin::Split && rec.parent_sub == v.sub) {
      std::vector<VertexId> sub =
          representatives(g, lineage, {v.base, rec.sub});
      out.insert(out.end(), sub.begin(), sub.end());
    }
  return out;
}

bool comparable_folded(const LayeredGraph& g, const Lineage& lineage,
                       VertexId a, VertexId b) {
  for (VertexId p : representatives(g, lineage, a))
    for (VertexId q : representatives(g, lineage, b))
      if (g.comparable(p, q)) return true;
  return false;
}

std::vector<VertexId> real_subs(const Lineage& lineage) {
  std::vector<VertexId> out;
  for (const auto& [base, recs] : lineage.table)
    for (const SubRecord& rec : recs)
      if (rec.origin == Origin::RealRepeat) out.push_back({base, rec.sub});
  std::sort(out.begin(), out.end());
  return out;
}

// Recovers the acyclic path's real-duplicate chain: real sub-vertices whose
// bases share a network edge are chain-adjacent iff they are not
// branch-comparable. Returns the walked chain (from its smaller endpoint)
// only when those adjacencies form one simple chain covering every real
// sub-vertex.
std::optional<std::vector<VertexId>> build_chain(const LayeredGraph& g,
                                                 const Lineage& lineage,
                                                 const Network& n) {
  const std::vector<VertexId> subs = real_subs(lineage);
  const std::size_t k = subs.size();
  if (k < 2) return std::nullopt;
  std::vector<std::vector<std::size_t>> adj(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      if (subs[i].base == subs[j].base) continue;
      if (!n.has_edge({subs[i].base, 0}, {subs[j].base, 0})) continue;
      if (comparable_folded(g, lineage, subs[i], subs[j])) continue;
      adj[i].push_back(j);
      adj[j].push_back(i);
    }

  std::vector<std::size_t> ends;
  for (std::size_t i = 0; i < k; ++i) {
    if (adj[i].size() > 2) return std::nullopt;
    if (adj[i].size() <= 1) ends.push_back(i);
  }
  if (ends.size() != 2) return std::nullopt;

  std::vector<VertexId> chain;
  std::vector<char> seen(k, 0);
  std::size_t cur = ends[0];
  for (;;) {
    chain.push_back(subs[cur]);
    seen[cur] = 1;
    std::size_t next = k;
    for (std::size_t cand : adj[cur])
      if (!seen[cand]) {
        if (next != k) return std::nullopt;
        next = cand;
      }
    if (next == k) break;
    cur = next;
  }
  if (chain.size() != k) return std::nullopt;
  return chain;
}

int folded_index(VertexId v, const Lineage& lineage,
                 const std::map<VertexId, int>& index) {
  for (;;) {
    auto it = index.find(v);
    if (it != index.end()) return it->second;
    const SubRecord* rec = lineage.find(v);
    if (!rec || rec->origin != Origin::Split)
      throw InvalidInput("vertex " + to_string(v) + " has no path position");
    v = {v.base, rec->parent_sub};
  }
}

// Whether the root group sits strictly nearer the chain's start than the
// leaf group, measuring by position in the candidate processed path (chain
// followed by the injected duplicates in id order).
bool roots_before_leaves(const LayeredGraph& g, const Lineage& lineage,
                         const std::vector<VertexId>& chain) {
  std::map<VertexId, int> index;
  int pos = 0;
  for (VertexId v : chain) index[v] = pos++;
  for (const auto& [base, recs] : lineage.table)
    for (const SubRecord& rec : recs)
      if (rec.origin == Origin::Injected) index[{base, rec.sub}] = pos++;

  int d_root = pos, d_leaf = pos;
  for (VertexId v : g.roots())
    d_root = std::min(d_root, folded_index(v, lineage, index));
  for (VertexId v : g.leaves())
    d_leaf = std::min(d_leaf, folded_index(v, lineage, index));
  return d_root < d_leaf;
}

PathSeq base_sequence(const std::vector<VertexId>& chain) {
  PathSeq p;
  for (VertexId v : chain) p.seq.push_back({v.base, 0});
  return p;
}

}  // namespace

EdgeStatus participant_edge_status(const LayeredGraph& g,
                                   const Lineage& lineage, const Edge& e,
                                   const Network& n) {
  if (!n.has_edge(e.first, e.second))
    throw UnknownEdge("edge " + to_string(e.first) + "-" +
                      to_string(e.second) + " is not in the network");
  auto real_of = [&](std::int32_t base) {
    std::vector<VertexId> out;
    auto it = lineage.table.find(base);
    if (it != lineage.table.end())
      for (const SubRecord& rec : it->second)
        if (rec.origin == Origin::RealRepeat) out.push_back({base, rec.sub});
    return out;
  };
  for (VertexId a : real_of(e.first.base))
    for (VertexId b : real_of(e.second.base))
      if (!comparable_folded(g, lineage, a, b)) return EdgeStatus::InPath;
  return EdgeStatus::NotInPath;
}

Reconstruction reconstruct_path(const LayeredGraph& g, const Network& n,
                                const Lineage& lineage) {
  Reconstruction rec;
  for (const Edge& e : n.edges)
    if (participant_edge_status(g, lineage, e, n) == EdgeStatus::InPath)
      rec.edge_set.insert(e);

  auto chain = build_chain(g, lineage, n);
  if (!chain) {
    rec.order = OrderKind::Failed;
    return rec;
  }
  std::vector<VertexId> forward = *chain;
  std::vector<VertexId> backward(forward.rbegin(), forward.rend());
  const bool fwd_ok = roots_before_leaves(g, lineage, forward);
  const bool bwd_ok = roots_before_leaves(g, lineage, backward);
  if (fwd_ok != bwd_ok) {
    rec.order = OrderKind::Confirmed;
    rec.candidates = {base_sequence(fwd_ok ? forward : backward)};
  } else {
    rec.order = OrderKind::Ambiguous;
    rec.candidates = {base_sequence(forward), base_sequence(backward)};
  }
  return rec;
}

double score_good_output(const Reconstruction& rec, const PathSeq& truth) {
  if (rec.order == OrderKind::Confirmed)
    return rec.candidates[0].seq == truth.seq ? 1.0 : 0.0;
  if (rec.order == OrderKind::Ambiguous) {
    for (const PathSeq& c : rec.candidates)
      if (c.seq == truth.seq) return 0.5;
  }
  return 0.0;
}

std::map<Edge, double> adversary_infer(const AdversaryView& view) {
  const Network& base = view.network_minus_edge;
  std::vector<Edge> consistent;
  for (std::size_t i = 0; i < base.vertices.size(); ++i)
    for (std::size_t j = i + 1; j < base.vertices.size(); ++j) {
      const Edge cand = make_edge(base.vertices[i], base.vertices[j]);
      if (base.edges.count(cand)) continue;
      Network augmented = base;
      augmented.add_edge(cand.first, cand.second);
      if (build_chain(view.published, view.lineage, augmented))
        consistent.push_back(cand);
    }
  if (consistent.empty())
    throw InconsistentView("no candidate edge explains the published graph");
  std::map<Edge, double> out;
  for (const Edge& e : consistent)
    out[e] = 1.0 / static_cast<double>(consistent.size());
  return out;
}

}  // namespace gpath
