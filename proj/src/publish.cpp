#include "gpath/publish.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace gpath {

namespace {

bool strictly_between(int lo, int m, int hi) {
  return (lo < m && m < hi) || (hi < m && m < lo);
}

}  // namespace

std::optional<int> LayeredGraph::layer_of(VertexId v) const {
  for (std::size_t l = 0; l < layers.size(); ++l)
    if (std::binary_search(layers[l].begin(), layers[l].end(), v))
      return static_cast<int>(l);
  return std::nullopt;
}

std::vector<VertexId> LayeredGraph::roots() const {
  std::vector<VertexId> out;
  for (std::size_t l = 0; l < layers.size(); ++l)
    for (VertexId v : layers[l]) {
      bool has_parent = false;
      for (const Edge& e : edges) {
        VertexId other;
        if (e.first == v)
          other = e.second;
        else if (e.second == v)
          other = e.first;
        else
          continue;
        if (*layer_of(other) < static_cast<int>(l)) {
          has_parent = true;
          break;
        }
      }
      if (!has_parent) out.push_back(v);
    }
  return out;
}

std::vector<VertexId> LayeredGraph::leaves() const {
  std::vector<VertexId> out;
  for (std::size_t l = 0; l < layers.size(); ++l)
    for (VertexId v : layers[l]) {
      bool has_child = false;
      for (const Edge& e : edges) {
        VertexId other;
        if (e.first == v)
          other = e.second;
        else if (e.second == v)
          other = e.first;
        else
          continue;
        if (*layer_of(other) > static_cast<int>(l)) {
          has_child = true;
          break;
        }
      }
      if (!has_child) out.push_back(v);
    }
  return out;
}

bool LayeredGraph::comparable(VertexId u, VertexId v) const {
  auto lu = layer_of(u), lv = layer_of(v);
  if (!lu || !lv || *lu == *lv) return false;
  VertexId from = *lu < *lv ? u : v;
  VertexId to = *lu < *lv ? v : u;
  // Walk descendant edges from the higher vertex.
  std::vector<VertexId> frontier{from};
  std::set<VertexId> seen{from};
  while (!frontier.empty()) {
    VertexId cur = frontier.back();
    frontier.pop_back();
    if (cur == to) return true;
    const int lc = *layer_of(cur);
    for (const Edge& e : edges) {
      VertexId other;
      if (e.first == cur)
        other = e.second;
      else if (e.second == cur)
        other = e.first;
      else
        continue;
      if (*layer_of(other) > lc && seen.insert(other).second)
        frontier.push_back(other);
    }
  }
  return false;
}

bool InsertionState::placed(VertexId v) const {
  for (const Placement& p : stack)
    if (p.v == v) return true;
  return false;
}

int InsertionState::top() const {
  int t = 0;
  for (std::size_t i = 0; i < stack.size(); ++i)
    t = i == 0 ? stack[i].layer : std::min(t, stack[i].layer);
  return t;
}

int InsertionState::bottom() const {
  int b = 0;
  for (std::size_t i = 0; i < stack.size(); ++i)
    b = i == 0 ? stack[i].layer : std::max(b, stack[i].layer);
  return b;
}

namespace {

// (matrix index, layer) pairs of the placed vertices.
using PlacedIndex = std::vector<std::pair<int, int>>;

PlacedIndex placed_index(const InsertionState& s, const RelationMatrix& r) {
  PlacedIndex placed;
  placed.reserve(s.stack.size());
  for (const Placement& p : s.stack)
    placed.emplace_back(r.index_of(p.v), p.layer);
  return placed;
}

bool layer_fits(const PlacedIndex& placed, int ui, const RelationMatrix& r,
                int layer) {
  bool path_above = false, path_below = false;
  for (const auto& [ai, al] : placed) {
    if (al == layer && r.at(ui, ai) == 2) return false;
    if (r.at(ui, ai) == 1) {
      path_above |= al == layer - 1;
      path_below |= al == layer + 1;
    }
  }
  // Path-related vertices as both would-be parent and would-be child.
  if (path_above && path_below) return false;

  for (const auto& [ai, al] : placed)
    for (const auto& [bi, bl] : placed) {
      if (ai == bi) continue;
      // u--a--b chain with a between: b must not stay path-related to u.
      if (strictly_between(layer, al, bl) && r.at(ui, ai) == 2 &&
          r.at(ai, bi) == 2 && r.at(ui, bi) == 1)
        return false;
      // a--u--b chain with u between: a and b must not stay path-related.
      if (strictly_between(al, layer, bl) && r.at(ai, ui) == 2 &&
          r.at(ui, bi) == 2 && r.at(ai, bi) == 1)
        return false;
    }
  return true;
}

}  // namespace

bool test_insertion_layer(const InsertionState& s, VertexId u,
                          const RelationMatrix& r, int layer) {
  return layer_fits(placed_index(s, r), r.index_of(u), r, layer);
}

namespace {

// Feasibility of a hypothetical split piece at `layer` whose branch mates
// are exactly `mates` (matrix indices); the piece is path-related to every
// other placed vertex.
bool piece_fits(const PlacedIndex& placed, const RelationMatrix& r,
                const std::vector<char>& is_mate, int layer) {
  for (const auto& [ai, al] : placed)
    if (al == layer && is_mate[static_cast<std::size_t>(ai)]) return false;

  // Both rejection patterns require one endpoint to be a branch mate of the
  // piece, so only mate rows need scanning.
  for (const auto& [ai, al] : placed) {
    if (!is_mate[static_cast<std::size_t>(ai)]) continue;
    for (const auto& [bi, bl] : placed) {
      if (ai == bi) continue;
      if (strictly_between(layer, al, bl) && r.at(ai, bi) == 2 &&
          !is_mate[static_cast<std::size_t>(bi)])
        return false;
      if (strictly_between(al, layer, bl) &&
          is_mate[static_cast<std::size_t>(bi)] && r.at(ai, bi) == 1)
        return false;
    }
  }
  return true;
}

VertexId new_piece(RelationMatrix& r, Lineage& lineage, VertexId parent) {
  VertexId piece{parent.base,
                 static_cast<std::int32_t>(lineage.table[parent.base].size())};
  lineage.add(parent.base, {piece.sub, Origin::Split, parent.sub});
  r.add_vertex(piece, 1);
  return piece;
}

}  // namespace

void resolve_conflicts(InsertionState& s, RelationMatrix& r, Lineage& lineage,
                       VertexId v0, const std::vector<VertexId>& pending) {
  const int v0i = r.index_of(v0);
  PlacedIndex placed = placed_index(s, r);

  std::set<int> uncovered;  // placed branch mates of v0, by matrix index
  std::map<int, int> mate_layer;
  for (const auto& [pi, pl] : placed)
    if (r.at(v0i, pi) == 2) {
      uncovered.insert(pi);
      mate_layer[pi] = pl;
    }

  if (uncovered.empty()) {
    // Nothing placed constrains v0: a fresh bottom layer always fits.
    s.stack.push_back({v0, s.bottom() + 1, {}});
    return;
  }

  std::vector<std::pair<int, int>> pieces;  // (matrix index, layer)
  while (!uncovered.empty()) {
    // Greedy cover: at each candidate layer grow the largest mate subset a
    // single piece can serve; take the largest subset, ties to the smaller
    // layer.
    std::vector<int> order(uncovered.begin(), uncovered.end());
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return std::tie(mate_layer[a], a) < std::tie(mate_layer[b], b);
    });
    std::set<int> best;
    int best_layer = 0;
    for (int layer = s.top() - 1; layer <= s.bottom() + 1; ++layer) {
      std::set<int> grown;
      std::vector<char> mask(static_cast<std::size_t>(r.order()), 0);
      for (int m : order) {
        grown.insert(m);
        mask[static_cast<std::size_t>(m)] = 1;
        if (!piece_fits(placed, r, mask, layer)) {
          grown.erase(m);
          mask[static_cast<std::size_t>(m)] = 0;
        }
      }
      if (grown.size() > best.size()) {
        best = std::move(grown);
        best_layer = layer;
      }
    }

    if (best.empty()) {
      // No layer serves even a single remaining mate: detach the first one
      // onto a fresh two-vertex chain of its own.
      const int mate = *uncovered.begin();
      VertexId mate_piece = new_piece(r, lineage, r.id(mate));
      VertexId v0_piece = new_piece(r, lineage, v0);
      r.set(r.index_of(mate_piece), r.index_of(v0_piece), 2);
      s.stack.push_back({mate_piece, s.bottom() + 1, {}});
      placed.emplace_back(r.index_of(mate_piece), s.bottom());
      s.stack.push_back({v0_piece, s.bottom() + 1, {}});
      placed.emplace_back(r.index_of(v0_piece), s.bottom());
      pieces.emplace_back(r.index_of(v0_piece), s.bottom());
      uncovered.erase(mate);
      continue;
    }

    VertexId piece = new_piece(r, lineage, v0);
    const int pi = r.index_of(piece);
    for (int m : best) {
      r.set(pi, m, 2);
      uncovered.erase(m);
    }
    s.stack.push_back({piece, best_layer, {}});
    placed.emplace_back(pi, best_layer);
    pieces.emplace_back(pi, best_layer);
  }

  // Branch mates of v0 not placed yet keep their relation through the piece
  // on the smallest layer.
  const auto attach =
      *std::min_element(pieces.begin(), pieces.end(),
                        [](const auto& a, const auto& b) {
                          return std::tie(a.second, a.first) <
                                 std::tie(b.second, b.first);
                        });
  for (VertexId w : pending) {
    const int wi = r.index_of(w);
    if (wi >= 0 && r.at(v0i, wi) == 2) r.set(attach.first, wi, 2);
  }
}

namespace {

// Re-packs raw layer values to longest-chain heights over the given
// comparability relation and materializes covering-pair edges.
LayeredGraph assemble(const std::vector<VertexId>& vs,
                      const std::vector<int>& raw,
                      const std::vector<std::vector<char>>& comp,
                      Lineage lineage) {
  const std::size_t n = vs.size();
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::tie(raw[a], vs[a]) < std::tie(raw[b], vs[b]);
  });

  std::vector<int> h(n, 0);
  int depth = n == 0 ? 0 : 1;
  for (std::size_t oi = 0; oi < n; ++oi) {
    const std::size_t i = order[oi];
    for (std::size_t oj = 0; oj < oi; ++oj) {
      const std::size_t j = order[oj];
      if (raw[j] < raw[i] && comp[i][j]) h[i] = std::max(h[i], h[j] + 1);
    }
    depth = std::max(depth, h[i] + 1);
  }

  LayeredGraph g;
  g.lineage = std::move(lineage);
  g.layers.resize(static_cast<std::size_t>(depth));
  for (std::size_t i = 0; i < n; ++i)
    g.layers[static_cast<std::size_t>(h[i])].push_back(vs[i]);
  for (auto& layer : g.layers) std::sort(layer.begin(), layer.end());

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!comp[i][j]) continue;
      bool covered = false;
      for (std::size_t k = 0; k < n && !covered; ++k)
        covered = comp[i][k] && comp[k][j] && strictly_between(h[i], h[k], h[j]);
      if (!covered) g.edges.insert(make_edge(vs[i], vs[j]));
    }
  return g;
}

LayeredGraph graph_from_state(const InsertionState& s, const RelationMatrix& r,
                              Lineage lineage) {
  const std::size_t n = s.stack.size();
  std::vector<VertexId> vs(n);
  std::vector<int> raw(n);
  std::vector<int> idx(n);
  for (std::size_t i = 0; i < n; ++i) {
    vs[i] = s.stack[i].v;
    raw[i] = s.stack[i].layer;
    idx[i] = r.index_of(s.stack[i].v);
  }
  std::vector<std::vector<char>> comp(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      comp[i][j] = i != j && r.at(idx[i], idx[j]) == 2;
  return assemble(vs, raw, comp, std::move(lineage));
}

int folded_path_index(VertexId v, const Lineage& lineage,
                      const std::map<VertexId, int>& index) {
  while (!index.count(v)) {
    const SubRecord* rec = lineage.find(v);
    if (!rec || rec->origin != Origin::Split)
      throw InvalidInput("vertex " + to_string(v) + " is not on the path");
    v = {v.base, rec->parent_sub};
  }
  return index.at(v);
}

}  // namespace

InsertResult insert_vertices(const PathSeq& p, RelationMatrix r,
                             Lineage lineage, const InsertOptions& opt) {
  struct Pend {
    VertexId v;
    std::optional<std::set<int>> range;  // survives pops; shrinks only
  };
  struct Snapshot {
    InsertionState s;
    std::deque<Pend> pend;
  };

  std::deque<Pend> pend;
  for (VertexId v : p.seq) pend.push_back({v, std::nullopt});
  InsertionState s;
  PlacedIndex placed;  // mirrors s.stack
  std::optional<Snapshot> deepest;
  std::size_t floor = 0;  // split pieces below this mark are immovable
  bool split_used = false;
  long transitions = 0;

  while (!pend.empty()) {
    if (++transitions > opt.max_transitions)
      throw InternalNontermination("insertion exceeded the transition cap");

    Pend& front = pend.front();
    const int ui = r.index_of(front.v);
    int lo = 0, hi = 0;
    if (!s.stack.empty()) {
      lo = s.top() - 1;
      hi = s.bottom() + 1;
    }
    std::set<int> feasible;
    if (front.range) {
      for (int layer : *front.range)
        if (layer >= lo && layer <= hi && layer_fits(placed, ui, r, layer))
          feasible.insert(layer);
    } else {
      for (int layer = lo; layer <= hi; ++layer)
        if (layer_fits(placed, ui, r, layer)) feasible.insert(layer);
    }

    if (!feasible.empty()) {
      const VertexId v = front.v;
      const int layer = *feasible.rbegin();
      std::set<int> remaining = front.range ? *front.range : feasible;
      remaining.erase(layer);
      pend.pop_front();
      s.stack.push_back({v, layer, std::move(remaining)});
      placed.emplace_back(ui, layer);
      if (!deepest || s.stack.size() > deepest->s.stack.size())
        deepest = Snapshot{s, pend};
    } else if (s.stack.size() > floor) {
      Placement popped = std::move(s.stack.back());
      s.stack.pop_back();
      placed.pop_back();
      pend.push_front({popped.v, std::move(popped.range)});
    } else {
      if (!opt.splitting) return {false, false, {}, std::move(r)};
      s = deepest->s;
      pend = deepest->pend;
      VertexId v0 = pend.front().v;
      pend.pop_front();
      std::vector<VertexId> waiting;
      for (const Pend& q : pend) waiting.push_back(q.v);
      resolve_conflicts(s, r, lineage, v0, waiting);
      split_used = true;
      floor = s.stack.size();
      placed = placed_index(s, r);
      for (Pend& q : pend) q.range.reset();
      deepest = Snapshot{s, pend};
    }
  }

  InsertResult out;
  out.success = true;
  out.split_used = split_used;
  out.graph = graph_from_state(s, r, std::move(lineage));
  out.relations = std::move(r);
  return out;
}

LayeredGraph orient(const LayeredGraph& g, VertexId first_vertex,
                    const PathSeq& p) {
  std::vector<VertexId> vs;
  std::vector<int> raw;
  for (std::size_t l = 0; l < g.layers.size(); ++l)
    for (VertexId v : g.layers[l]) {
      vs.push_back(v);
      raw.push_back(static_cast<int>(l));
    }
  const std::size_t n = vs.size();
  std::map<VertexId, std::size_t> pos;
  for (std::size_t i = 0; i < n; ++i) pos[vs[i]] = i;

  // Comparability = reachability along layer-monotone edge chains.
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return raw[a] < raw[b]; });
  std::vector<std::vector<char>> comp(n, std::vector<char>(n, 0));
  for (std::size_t oi = 0; oi < n; ++oi) {
    const std::size_t i = order[oi];
    for (const Edge& e : g.edges) {
      std::size_t a = pos.at(e.first), b = pos.at(e.second);
      if (a != i && b != i) continue;
      const std::size_t u = a == i ? b : a;
      if (raw[u] >= raw[i]) continue;
      comp[i][u] = comp[u][i] = 1;
      for (std::size_t k = 0; k < n; ++k)
        if (comp[u][k] && raw[k] < raw[u]) comp[i][k] = comp[k][i] = 1;
    }
  }

  std::map<VertexId, int> path_index;
  for (std::size_t i = 0; i < p.seq.size(); ++i)
    if (!path_index.count(p.seq[i]))
      path_index[p.seq[i]] = static_cast<int>(i);
  (void)first_vertex;  // index 0 of p by construction

  int d_root = static_cast<int>(p.seq.size());
  for (VertexId v : g.roots())
    d_root = std::min(d_root, folded_path_index(v, g.lineage, path_index));
  int d_leaf = static_cast<int>(p.seq.size());
  for (VertexId v : g.leaves())
    d_leaf = std::min(d_leaf, folded_path_index(v, g.lineage, path_index));

  if (d_leaf < d_root) {
    const int depth = g.depth();
    for (std::size_t i = 0; i < n; ++i) raw[i] = depth - 1 - raw[i];
  }
  return assemble(vs, raw, comp, g.lineage);
}

PublishResult publish(const Network& n, const PathSeq& p,
                      const PublishOptions& opt, Rng& rng) {
  PublishResult res;
  const PrivacyBudget eps_v(opt.eps_v);
  const PrivacyBudget eps_e(opt.eps_e);
  ProcessedNetwork pn =
      preprocess_vertices(n, p, eps_v, rng, opt.dp_vertices);
  RelationMatrix r = preprocess_edges(pn, eps_e, rng, opt.dp_edges);
  InsertResult ins =
      insert_vertices(pn.path, std::move(r), pn.lineage,
                      {opt.splitting, opt.max_transitions});
  res.success = ins.success;
  res.split_used = ins.split_used;
  res.usable = ins.success && !ins.split_used;
  if (ins.success) res.graph = orient(ins.graph, pn.path.seq.front(), pn.path);
  res.relations = std::move(ins.relations);
  res.processed = std::move(pn);
  res.total_budget = total_budget({eps_v, eps_e});
  return res;
}

}  // namespace gpath
