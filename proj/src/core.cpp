#include "gpath/core.hpp"

#include <algorithm>
#include <charconv>
#include <deque>

namespace gpath {

std::string to_string(VertexId v) {
  std::string s = std::to_string(v.base);
  if (v.sub != 0) {
    s += '.';
    s += std::to_string(v.sub);
  }
  return s;
}

VertexId parse_vertex(const std::string& token) {
  VertexId v;
  const char* begin = token.data();
  const char* end = begin + token.size();
  auto [p, ec] = std::from_chars(begin, end, v.base);
  if (ec != std::errc{} || v.base < 0)
    throw ParseError("bad vertex token: " + token);
  if (p != end) {
    if (*p != '.') throw ParseError("bad vertex token: " + token);
    auto [q, ec2] = std::from_chars(p + 1, end, v.sub);
    if (ec2 != std::errc{} || q != end || v.sub < 0)
      throw ParseError("bad vertex token: " + token);
  }
  return v;
}

Network Network::over_bases(std::int32_t n) {
  Network net;
  net.vertices.reserve(static_cast<std::size_t>(n));
  for (std::int32_t i = 0; i < n; ++i) net.vertices.push_back({i, 0});
  return net;
}

bool Network::has_vertex(VertexId v) const {
  return std::binary_search(vertices.begin(), vertices.end(), v);
}

bool Network::has_edge(VertexId a, VertexId b) const {
  return edges.count(make_edge(a, b)) != 0;
}

void Network::add_edge(VertexId a, VertexId b) {
  if (a == b) throw InvalidInput("self-loop edge " + to_string(a));
  edges.insert(make_edge(a, b));
}

int Network::degree(VertexId v) const {
  int d = 0;
  for (const auto& e : edges)
    if (e.first == v || e.second == v) ++d;
  return d;
}

int Network::max_degree() const {
  std::map<VertexId, int> deg;
  for (const auto& e : edges) {
    ++deg[e.first];
    ++deg[e.second];
  }
  int m = 0;
  for (const auto& [v, d] : deg) m = std::max(m, d);
  return m;
}

std::vector<VertexId> Network::neighbors(VertexId v) const {
  std::vector<VertexId> out;
  for (const auto& e : edges) {
    if (e.first == v) out.push_back(e.second);
    if (e.second == v) out.push_back(e.first);
  }
  return out;
}

bool Network::connected() const {
  if (vertices.empty()) return true;
  std::map<VertexId, std::vector<VertexId>> adj;
  for (const auto& e : edges) {
    adj[e.first].push_back(e.second);
    adj[e.second].push_back(e.first);
  }
  std::set<VertexId> seen{vertices.front()};
  std::deque<VertexId> work{vertices.front()};
  while (!work.empty()) {
    VertexId v = work.front();
    work.pop_front();
    for (VertexId u : adj[v])
      if (seen.insert(u).second) work.push_back(u);
  }
  return seen.size() == vertices.size();
}

const SubRecord* Lineage::find(VertexId v) const {
  auto it = table.find(v.base);
  if (it == table.end()) return nullptr;
  for (const SubRecord& rec : it->second)
    if (rec.sub == v.sub) return &rec;
  return nullptr;
}

RelationMatrix::RelationMatrix(std::vector<VertexId> ids)
    : ids_(std::move(ids)) {
  const std::size_t n = ids_.size();
  a_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    index_[ids_[i]] = static_cast<int>(i);
    a_[i * n + i] = -1;
  }
  if (index_.size() != n) throw InvalidInput("duplicate vertex ids in matrix");
}

int RelationMatrix::index_of(VertexId v) const {
  auto it = index_.find(v);
  return it == index_.end() ? -1 : it->second;
}

void RelationMatrix::set(int i, int j, std::int8_t v) {
  const std::size_t n = ids_.size();
  a_[static_cast<std::size_t>(i) * n + static_cast<std::size_t>(j)] = v;
  a_[static_cast<std::size_t>(j) * n + static_cast<std::size_t>(i)] = v;
}

int RelationMatrix::add_vertex(VertexId v, std::int8_t fill) {
  if (index_.count(v)) throw InvalidInput("vertex already in matrix");
  const std::size_t n = ids_.size();
  std::vector<std::int8_t> b((n + 1) * (n + 1), fill);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) b[i * (n + 1) + j] = a_[i * n + j];
  b[n * (n + 1) + n] = -1;
  a_ = std::move(b);
  ids_.push_back(v);
  index_[v] = static_cast<int>(n);
  return static_cast<int>(n);
}

bool RelationMatrix::fully_randomized() const {
  const int n = order();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (at(i, j) == 0) return false;
  return true;
}

std::pair<std::set<Edge>, std::set<Edge>> derive_subgraphs(
    const RelationMatrix& r) {
  if (!r.fully_randomized())
    throw UnrandomizedMatrix("relation matrix has off-diagonal 0 entries");
  std::set<Edge> g, h;
  const int n = r.order();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Edge e = make_edge(r.id(i), r.id(j));
      if (r.at(i, j) == 2)
        g.insert(e);
      else
        h.insert(e);
    }
  return {std::move(g), std::move(h)};
}

std::vector<Violation> validate(const Network& n, const PathSeq& p) {
  std::vector<Violation> out;
  if (n.vertices.size() < 2)
    out.push_back({ViolationKind::TooFewVertices,
                   "network has " + std::to_string(n.vertices.size()) +
                       " vertices"});
  for (const auto& e : n.edges) {
    if (e.first == e.second)
      out.push_back({ViolationKind::SelfLoop, to_string(e.first)});
    if (!n.has_vertex(e.first))
      out.push_back({ViolationKind::BadEndpoint, to_string(e.first)});
    if (!n.has_vertex(e.second))
      out.push_back({ViolationKind::BadEndpoint, to_string(e.second)});
  }
  if (!n.connected()) out.push_back({ViolationKind::Disconnected, ""});
  if (p.seq.empty()) {
    out.push_back({ViolationKind::EmptyPath, ""});
    return out;
  }
  std::set<VertexId> on_path;
  for (std::size_t i = 0; i < p.seq.size(); ++i) {
    if (!n.has_vertex(p.seq[i])) {
      out.push_back({ViolationKind::UnknownPathVertex, to_string(p.seq[i])});
      continue;
    }
    on_path.insert(p.seq[i]);
    if (i + 1 < p.seq.size() && !n.has_edge(p.seq[i], p.seq[i + 1]))
      out.push_back({ViolationKind::NonEdgeStep,
                     "step " + std::to_string(i) + ": " +
                         to_string(p.seq[i]) + "-" + to_string(p.seq[i + 1])});
  }
  for (VertexId v : n.vertices)
    if (!on_path.count(v))
      out.push_back({ViolationKind::UncoveredVertex, to_string(v)});
  return out;
}

std::pair<Network, PathSeq> generate_map(std::int32_t num_vertices,
                                         std::int64_t num_edges, Rng& rng,
                                         std::int32_t cyclic_revisits) {
  if (num_vertices < 2)
    throw TooFewVertices("need at least 2 vertices, got " +
                         std::to_string(num_vertices));
  const std::int64_t lo = num_vertices - 1;
  const std::int64_t hi =
      static_cast<std::int64_t>(num_vertices) * (num_vertices - 1) / 2;
  if (num_edges < lo || num_edges > hi)
    throw OutOfRangeEdges("edge count " + std::to_string(num_edges) +
                          " outside [" + std::to_string(lo) + ", " +
                          std::to_string(hi) + "]");

  Network net = Network::over_bases(num_vertices);

  // Path = uniformly random permutation (Fisher-Yates).
  std::vector<VertexId> perm = net.vertices;
  for (std::size_t i = perm.size() - 1; i > 0; --i)
    std::swap(perm[i], perm[rng.uniform_index(i + 1)]);
  for (std::size_t i = 0; i + 1 < perm.size(); ++i)
    net.add_edge(perm[i], perm[i + 1]);

  // Extra edges uniform over the remaining non-edges.
  std::vector<Edge> pool;
  for (std::size_t i = 0; i < net.vertices.size(); ++i)
    for (std::size_t j = i + 1; j < net.vertices.size(); ++j) {
      Edge e = make_edge(net.vertices[i], net.vertices[j]);
      if (!net.edges.count(e)) pool.push_back(e);
    }
  std::int64_t extra = num_edges - lo;
  while (extra-- > 0) {
    std::size_t k = rng.uniform_index(pool.size());
    net.edges.insert(pool[k]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(k));
  }

  PathSeq path{perm};
  for (std::int32_t i = 0; i < cyclic_revisits; ++i) {
    std::vector<VertexId> nbrs = net.neighbors(path.seq.back());
    std::sort(nbrs.begin(), nbrs.end());
    path.seq.push_back(nbrs[rng.uniform_index(nbrs.size())]);
  }
  return {std::move(net), std::move(path)};
}

}  // namespace gpath
