// Python bindings for the path-publishing library. The module mirrors the
// CLI surface: map generation, publication, reconstruction, the missing-edge
// attack, and the experiment runner, plus text (de)serialization helpers.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "gpath/core.hpp"
#include "gpath/harness.hpp"
#include "gpath/io.hpp"
#include "gpath/publish.hpp"
#include "gpath/recover.hpp"

namespace py = pybind11;
using namespace gpath;

namespace {

std::string vertex_str(VertexId v) { return to_string(v); }

std::string edge_str(const Edge& e) {
  return to_string(e.first) + "-" + to_string(e.second);
}

py::dict graph_to_dict(const LayeredGraph& g) {
  py::dict d;
  py::list layers;
  for (const auto& layer : g.layers) {
    py::list row;
    for (VertexId v : layer) row.append(vertex_str(v));
    layers.append(row);
  }
  d["layers"] = layers;
  py::list edges;
  for (const Edge& e : g.edges) edges.append(edge_str(e));
  d["edges"] = edges;
  py::list roots, leaves;
  for (VertexId v : g.roots()) roots.append(vertex_str(v));
  for (VertexId v : g.leaves()) leaves.append(vertex_str(v));
  d["roots"] = roots;
  d["leaves"] = leaves;
  d["depth"] = g.depth();
  std::ostringstream out;
  write_published(out, g);
  d["text"] = out.str();
  return d;
}

std::pair<Network, PathSeq> map_from_text(const std::string& text) {
  std::istringstream in(text);
  return read_map(in);
}

}  // namespace

PYBIND11_MODULE(_gpath, m) {
  m.doc() = "Differentially private graph-based path publishing";

  m.def(
      "generate_map",
      [](int vertices, std::int64_t edges, std::uint64_t seed, int cyclic) {
        Rng rng(seed);
        auto [net, path] = generate_map(vertices, edges, rng, cyclic);
        std::ostringstream out;
        write_map(out, net, path);
        py::dict d;
        d["text"] = out.str();
        py::list es;
        for (const Edge& e : net.edges) es.append(edge_str(e));
        d["edges"] = es;
        py::list seq;
        for (VertexId v : path.seq) seq.append(vertex_str(v));
        d["path"] = seq;
        return d;
      },
      py::arg("vertices"), py::arg("edges"), py::arg("seed"),
      py::arg("cyclic") = 0,
      "Generate a connected map with a covering path; returns a dict with "
      "the map text, edge list, and path sequence.");

  m.def(
      "publish",
      [](const std::string& map_text, double eps_v, double eps_e,
         std::uint64_t seed, bool splitting, bool dp_vertices,
         bool dp_edges) {
        auto [net, path] = map_from_text(map_text);
        PublishOptions opt;
        opt.eps_v = eps_v;
        opt.eps_e = eps_e;
        opt.splitting = splitting;
        opt.dp_vertices = dp_vertices;
        opt.dp_edges = dp_edges;
        Rng rng(seed);
        PublishResult res = publish(net, path, opt, rng);
        py::dict d;
        d["success"] = res.success;
        d["usable"] = res.usable;
        d["split_used"] = res.split_used;
        d["total_budget"] = res.total_budget;
        if (res.success) d["graph"] = graph_to_dict(res.graph);
        return d;
      },
      py::arg("map_text"), py::arg("eps_v") = 0.5, py::arg("eps_e") = 0.5,
      py::arg("seed") = 0, py::arg("splitting") = true,
      py::arg("dp_vertices") = true, py::arg("dp_edges") = true,
      "Publish the layered graph for a map given as text.");

  m.def(
      "reconstruct",
      [](const std::string& map_text, const std::string& published_text) {
        auto [net, path] = map_from_text(map_text);
        std::istringstream gin(published_text);
        LayeredGraph g = read_published(gin);
        Reconstruction rec = reconstruct_path(g, net, g.lineage);
        py::dict d;
        py::list edges;
        for (const Edge& e : rec.edge_set) edges.append(edge_str(e));
        d["edges"] = edges;
        d["order"] = rec.order == OrderKind::Confirmed   ? "confirmed"
                     : rec.order == OrderKind::Ambiguous ? "ambiguous"
                                                         : "failed";
        py::list cands;
        for (const PathSeq& c : rec.candidates) {
          py::list seq;
          for (VertexId v : c.seq) seq.append(vertex_str(v));
          cands.append(seq);
        }
        d["candidates"] = cands;
        return d;
      },
      py::arg("map_text"), py::arg("published_text"),
      "Recover the traversed edge set and visiting order candidates.");

  m.def(
      "attack",
      [](const std::string& map_text, const std::string& published_text,
         const std::string& withhold) {
        auto [net, path] = map_from_text(map_text);
        std::istringstream gin(published_text);
        LayeredGraph g = read_published(gin);
        const auto dash = withhold.find('-');
        if (dash == std::string::npos)
          throw ParseError("withhold must look like U-V");
        const Edge e = make_edge(parse_vertex(withhold.substr(0, dash)),
                                 parse_vertex(withhold.substr(dash + 1)));
        if (!net.has_edge(e.first, e.second))
          throw UnknownEdge("withheld edge is not in the map");
        AdversaryView view;
        view.network_minus_edge = net;
        view.network_minus_edge.edges.erase(e);
        view.path_vertices = net.vertices;
        view.published = g;
        view.lineage = g.lineage;
        py::dict d;
        for (const auto& [cand, w] : adversary_infer(view))
          d[py::str(edge_str(cand))] = w;
        return d;
      },
      py::arg("map_text"), py::arg("published_text"), py::arg("withhold"),
      "Candidate weights a missing-edge adversary assigns to each possible "
      "withheld edge.");

  m.def(
      "run_experiment",
      [](const std::string& config_text) {
        std::istringstream in(config_text);
        ExperimentConfig cfg = read_config(in);
        std::ostringstream out;
        write_csv(out, run_experiment(cfg));
        return out.str();
      },
      py::arg("config_text"),
      "Run the Monte-Carlo experiment grid; returns the results as CSV "
      "text.");

  m.def("total_budget",
        [](double eps_v, double eps_e) {
          return total_budget({PrivacyBudget(eps_v), PrivacyBudget(eps_e)});
        },
        py::arg("eps_v"), py::arg("eps_e"),
        "Overall privacy budget of one publication.");
}
