#pragma once

// Hand-built fixture instances shared by the unit and acceptance tests.

#include <vector>

#include "gpath/core.hpp"
#include "gpath/preprocess.hpp"

namespace gpath::testfix {

inline VertexId b(std::int32_t base, std::int32_t sub = 0) {
  return {base, sub};
}

struct Fixture {
  Network net;
  PathSeq path;
  ProcessedNetwork pn;
  RelationMatrix rel;  // zeros resolved by hand where noted
};

// Six vertices 0..5 ("a".."f"): path 0-1-2-3-4-5, branch edges
// {02,05,13,14,15,24,25,35}, and the two non-edges {03,04} fixed as fake
// path relations. The expected layered output is known in closed form:
// layers {1,2} / {0,3,4} / {5}, roots {1,2},
// edges {2-0, 0-5, 1-3, 1-4, 2-4, 3-5}.
inline Fixture branching_demo() {
  Fixture f;
  f.net.vertices = {b(0), b(1), b(2), b(3), b(4), b(5)};
  const std::vector<std::pair<int, int>> path_edges = {
      {0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}};
  const std::vector<std::pair<int, int>> branch_edges = {
      {0, 2}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 4}, {2, 5}, {3, 5}};
  for (auto [u, v] : path_edges) f.net.add_edge(b(u), b(v));
  for (auto [u, v] : branch_edges) f.net.add_edge(b(u), b(v));
  for (int i = 0; i < 6; ++i) f.path.seq.push_back(b(i));

  f.pn.network = f.net;
  f.pn.path = f.path;
  for (int i = 0; i < 6; ++i)
    f.pn.lineage.add(i, {0, Origin::RealRepeat, -1});

  f.rel = relation_init(f.pn);
  // The two non-edges become fake path relations.
  f.rel.set(f.rel.index_of(b(0)), f.rel.index_of(b(3)), 1);
  f.rel.set(f.rel.index_of(b(0)), f.rel.index_of(b(4)), 1);
  return f;
}

// Six vertices 0..5 with a revisiting walk 0,1,2,3,4,1,2,5 over edges
// {01,12,23,34,14,25}; duplicate-free processing relabels the second visits
// of 1 and 2 as sub-vertices.
inline std::pair<Network, PathSeq> revisit_demo() {
  Network n;
  n.vertices = {b(0), b(1), b(2), b(3), b(4), b(5)};
  for (auto [u, v] : std::vector<std::pair<int, int>>{
           {0, 1}, {1, 2}, {2, 3}, {3, 4}, {1, 4}, {2, 5}})
    n.add_edge(b(u), b(v));
  PathSeq p;
  for (int i : {0, 1, 2, 3, 4, 1, 2, 5}) p.seq.push_back(b(i));
  return {n, p};
}

// Minimal path-only map on three vertices.
inline std::pair<Network, PathSeq> three_chain() {
  Network n;
  n.vertices = {b(0), b(1), b(2)};
  n.add_edge(b(0), b(1));
  n.add_edge(b(1), b(2));
  PathSeq p;
  for (int i : {0, 1, 2}) p.seq.push_back(b(i));
  return {n, p};
}

}  // namespace gpath::testfix
