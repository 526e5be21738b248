#include "gpath/preprocess.hpp"

#include <algorithm>
#include <limits>
#include <map>

namespace gpath {

ProcessedNetwork preprocess_vertices(const Network& n, const PathSeq& p,
                                     PrivacyBudget eps_v, Rng& rng,
                                     bool dp_enabled) {
  if (!validate(n, p).empty())
    throw InvalidInput("preprocess_vertices: input fails validation");

  std::map<std::int32_t, int> appearances;
  for (VertexId v : p.seq) ++appearances[v.base];
  int max_appear = 0;
  for (const auto& [b, c] : appearances) max_appear = std::max(max_appear, c);
  const int range_top = std::max(max_appear, 2);
  const int max_deg = n.max_degree();

  // Sub-vertex count per base: the exponential mechanism over
  // [appearances, range_top], one draw per base vertex (parallel
  // composition), in ascending base order.
  std::map<std::int32_t, int> sub_num;
  Lineage lineage;
  for (VertexId v : n.vertices) {
    const int app = appearances.at(v.base);
    int count = app;
    if (dp_enabled && range_top > app) {
      std::vector<double> q;
      for (int c = app; c <= range_top; ++c)
        q.push_back(quality_vertex(c, range_top, n.degree(v), max_deg));
      count = app + static_cast<int>(exp_mechanism(
                        q, eps_v, quality_vertex_sensitivity(), rng));
    }
    sub_num[v.base] = count;
    for (int i = 0; i < count; ++i)
      lineage.add(v.base, {i, i < app ? Origin::RealRepeat : Origin::Injected,
                           -1});
  }

  // Relabel the i-th appearance of each base as sub i-1, then append the
  // surplus duplicates.
  PathSeq processed;
  std::map<std::int32_t, int> seen;
  for (VertexId v : p.seq)
    processed.seq.push_back({v.base, seen[v.base]++});
  for (VertexId v : n.vertices)
    for (int i = appearances.at(v.base); i < sub_num.at(v.base); ++i)
      processed.seq.push_back({v.base, i});

  // Every sub-vertex inherits its base vertex's adjacency.
  Network expanded;
  for (VertexId v : n.vertices)
    for (int i = 0; i < sub_num.at(v.base); ++i)
      expanded.vertices.push_back({v.base, i});
  std::sort(expanded.vertices.begin(), expanded.vertices.end());
  for (const Edge& e : n.edges)
    for (int i = 0; i < sub_num.at(e.first.base); ++i)
      for (int j = 0; j < sub_num.at(e.second.base); ++j)
        expanded.add_edge({e.first.base, i}, {e.second.base, j});

  return {std::move(expanded), std::move(processed), std::move(lineage)};
}

RelationMatrix relation_init(const ProcessedNetwork& pn) {
  RelationMatrix r(pn.network.vertices);
  std::set<Edge> path_pairs;
  for (std::size_t i = 0; i + 1 < pn.path.seq.size(); ++i)
    path_pairs.insert(make_edge(pn.path.seq[i], pn.path.seq[i + 1]));
  const int n = r.order();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const Edge e = make_edge(r.id(i), r.id(j));
      if (path_pairs.count(e))
        r.set(i, j, 1);
      else if (pn.network.edges.count(e))
        r.set(i, j, 2);
    }
  return r;
}

RelationMatrix preprocess_edges(const ProcessedNetwork& pn,
                                PrivacyBudget eps_e, Rng& rng,
                                bool dp_enabled) {
  {
    std::set<VertexId> uniq(pn.path.seq.begin(), pn.path.seq.end());
    if (uniq.size() != pn.path.seq.size())
      throw CyclicPath("preprocess_edges: path repeats a vertex");
  }
  RelationMatrix r = relation_init(pn);

  const int edge_count = static_cast<int>(pn.network.edges.size());
  const int n = r.order();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (r.at(i, j) != 0) continue;
      std::size_t pick;
      if (!dp_enabled || edge_count < 3) {
        // Without the privacy weighting both values draw uniformly; the same
        // holds below 3 edges, where the quality function assigns both
        // values the same score.
        pick = rng.uniform_index(2);
      } else {
        const double q[2] = {quality_edge(1, edge_count),
                             quality_edge(2, edge_count)};
        pick = exp_mechanism(q, eps_e, quality_edge_sensitivity(edge_count),
                             rng);
      }
      r.set(i, j, pick == 0 ? 1 : 2);
    }
  return r;
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Per-base candidate ranges and analytic sub-count distributions for one
// vertex-step instance.
struct VertexStepDist {
  std::vector<std::int32_t> bases;
  std::vector<int> lo;                       // appearances
  std::vector<std::vector<double>> probs;    // over [lo, lo+probs.size())
};

VertexStepDist vertex_step_dist(const VertexStepInstance& inst,
                                PrivacyBudget eps_v) {
  if (inst.net.vertices.size() > 5)
    throw InstanceTooLarge("vertex step audit capped at 5 base vertices");
  if (!validate(inst.net, inst.path).empty())
    throw InvalidInput("vertex step audit: input fails validation");
  std::map<std::int32_t, int> appearances;
  for (VertexId v : inst.path.seq) ++appearances[v.base];
  int max_appear = 0;
  for (const auto& [b, c] : appearances) max_appear = std::max(max_appear, c);
  const int range_top = std::max(max_appear, 2);
  const int max_deg = inst.net.max_degree();

  VertexStepDist d;
  for (VertexId v : inst.net.vertices) {
    const int app = appearances.at(v.base);
    std::vector<double> q;
    for (int c = app; c <= range_top; ++c)
      q.push_back(quality_vertex(c, range_top, inst.net.degree(v), max_deg));
    d.bases.push_back(v.base);
    d.lo.push_back(app);
    d.probs.push_back(
        exp_mechanism_probs(q, eps_v, quality_vertex_sensitivity()));
  }
  return d;
}

}  // namespace

double vertex_step_max_ratio(const VertexStepInstance& a,
                             const VertexStepInstance& b,
                             PrivacyBudget eps_v) {
  VertexStepDist da = vertex_step_dist(a, eps_v);
  VertexStepDist db = vertex_step_dist(b, eps_v);
  if (da.bases != db.bases)
    throw InvalidInput("vertex step audit: instances disagree on vertex set");

  // Outputs are per-base sub-vertex counts; both probabilities factor per
  // base, so the max ratio is the product of per-base max ratios.
  double ratio = 1.0;
  for (std::size_t i = 0; i < da.bases.size(); ++i) {
    const int lo = std::min(da.lo[i], db.lo[i]);
    const int hi = std::max(da.lo[i] + static_cast<int>(da.probs[i].size()),
                            db.lo[i] + static_cast<int>(db.probs[i].size()));
    double best = 0.0;
    for (int c = lo; c < hi; ++c) {
      const int ia = c - da.lo[i];
      const int ib = c - db.lo[i];
      const double pa =
          (ia >= 0 && ia < static_cast<int>(da.probs[i].size()))
              ? da.probs[i][static_cast<std::size_t>(ia)]
              : 0.0;
      const double pb =
          (ib >= 0 && ib < static_cast<int>(db.probs[i].size()))
              ? db.probs[i][static_cast<std::size_t>(ib)]
              : 0.0;
      if (pa == 0.0) continue;
      if (pb == 0.0) return kInf;
      best = std::max(best, pa / pb);
    }
    ratio *= best;
  }
  return ratio;
}

namespace {

// Pair status in one edge-step instance: fixed relation value or free
// (randomized with the edge quality function).
struct PairSpec {
  bool fixed = false;
  int value = 0;        // when fixed
  double prob1 = 0.0;   // when free: Pr[value = 1]
};

std::map<Edge, PairSpec> edge_step_spec(const EdgeStepInstance& inst,
                                        PrivacyBudget eps_e) {
  if (inst.net.vertices.size() > 5)
    throw InstanceTooLarge("edge step audit capped at 5 base vertices");
  std::map<Edge, PairSpec> spec;
  bool any_free = false;
  for (std::size_t i = 0; i < inst.net.vertices.size(); ++i)
    for (std::size_t j = i + 1; j < inst.net.vertices.size(); ++j) {
      const Edge e = make_edge(inst.net.vertices[i], inst.net.vertices[j]);
      PairSpec s;
      if (inst.path_edges.count(e)) {
        s.fixed = true;
        s.value = 1;
      } else if (inst.net.edges.count(e)) {
        s.fixed = true;
        s.value = 2;
      } else {
        any_free = true;
      }
      spec[e] = s;
    }
  if (any_free) {
    const int ec = static_cast<int>(inst.net.edges.size());
    double p1 = 0.5;  // degenerate-quality case draws uniformly
    if (ec >= 3) {
      const double q[2] = {quality_edge(1, ec), quality_edge(2, ec)};
      p1 = exp_mechanism_probs(q, eps_e, quality_edge_sensitivity(ec))[0];
    }
    for (auto& [e, s] : spec)
      if (!s.fixed) s.prob1 = p1;
  }
  return spec;
}

}  // namespace

double edge_step_max_ratio(const EdgeStepInstance& a, const EdgeStepInstance& b,
                           PrivacyBudget eps_e) {
  std::map<Edge, PairSpec> sa = edge_step_spec(a, eps_e);
  std::map<Edge, PairSpec> sb = edge_step_spec(b, eps_e);
  if (sa.size() != sb.size())
    throw InvalidInput("edge step audit: instances disagree on vertex set");

  std::vector<Edge> pairs;
  for (const auto& [e, spa] : sa) {
    const PairSpec& spb = sb.at(e);
    if (spa.fixed && spb.fixed) {
      if (spa.value != spb.value) return kInf;  // disjoint supports
      continue;
    }
    pairs.push_back(e);
  }
  if (pairs.size() > 20)
    throw InstanceTooLarge("edge step audit: too many randomized pairs");

  double best = 0.0;
  const std::size_t total = std::size_t{1} << pairs.size();
  for (std::size_t mask = 0; mask < total; ++mask) {
    double pa = 1.0, pb = 1.0;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      const int value = (mask >> k) & 1 ? 2 : 1;
      const PairSpec& spa = sa.at(pairs[k]);
      const PairSpec& spb = sb.at(pairs[k]);
      pa *= spa.fixed ? (spa.value == value ? 1.0 : 0.0)
                      : (value == 1 ? spa.prob1 : 1.0 - spa.prob1);
      pb *= spb.fixed ? (spb.value == value ? 1.0 : 0.0)
                      : (value == 1 ? spb.prob1 : 1.0 - spb.prob1);
    }
    if (pa == 0.0) continue;
    if (pb == 0.0) return kInf;
    best = std::max(best, pa / pb);
  }
  return best;
}

}  // namespace gpath
