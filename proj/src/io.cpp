#include "gpath/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace gpath {

namespace {

// Lines with comments stripped, blank lines dropped.
std::vector<std::string> content_lines(std::istream& in) {
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream probe(line);
    std::string word;
    if (probe >> word) out.push_back(line);
  }
  return out;
}

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

long parse_int(const std::string& t, const std::string& what) {
  try {
    std::size_t used = 0;
    const long v = std::stol(t, &used);
    if (used != t.size()) throw std::invalid_argument(t);
    return v;
  } catch (const std::exception&) {
    throw ParseError("bad " + what + ": '" + t + "'");
  }
}

void emit_sorted(std::ostream& out, std::vector<std::string> lines) {
  std::sort(lines.begin(), lines.end());
  for (const std::string& l : lines) out << l << "\n";
}

}  // namespace

std::pair<Network, PathSeq> read_map(std::istream& in) {
  Network n;
  PathSeq p;
  long declared = -1;
  for (const std::string& line : content_lines(in)) {
    const std::vector<std::string> t = tokens(line);
    if (t[0] == "V") {
      if (t.size() != 2) throw ParseError("V line needs one count");
      declared = parse_int(t[1], "vertex count");
    } else if (t[0] == "E") {
      if (t.size() != 3) throw ParseError("E line needs two vertices");
      n.add_edge(parse_vertex(t[1]), parse_vertex(t[2]));
    } else if (t[0] == "P") {
      for (std::size_t i = 1; i < t.size(); ++i)
        p.seq.push_back(parse_vertex(t[i]));
    } else {
      throw ParseError("unknown map line '" + t[0] + "'");
    }
  }
  if (declared < 0) throw ParseError("missing V header");
  for (long b = 0; b < declared; ++b) {
    const VertexId v{static_cast<std::int32_t>(b), 0};
    if (!n.has_vertex(v)) n.vertices.push_back(v);
  }
  std::sort(n.vertices.begin(), n.vertices.end());
  return {std::move(n), std::move(p)};
}

void write_map(std::ostream& out, const Network& n, const PathSeq& p) {
  out << "V " << n.vertices.size() << "\n";
  for (const Edge& e : n.edges)
    out << "E " << to_string(e.first) << " " << to_string(e.second) << "\n";
  out << "P";
  for (VertexId v : p.seq) out << " " << to_string(v);
  out << "\n";
}

void write_matrix(std::ostream& out, const RelationMatrix& r) {
  out << "R " << r.order() << "\n";
  for (int i = 0; i < r.order(); ++i) {
    for (int j = 0; j < r.order(); ++j)
      out << (j ? " " : "") << static_cast<int>(r.at(i, j));
    out << "\n";
  }
}

void write_published(std::ostream& out, const LayeredGraph& g) {
  out << "GP " << g.depth() << "\n";
  std::vector<std::string> lines;
  for (int l = 0; l < g.depth(); ++l) {
    std::ostringstream s;
    s << "L " << l;
    for (VertexId v : g.layers[static_cast<std::size_t>(l)])
      s << " " << to_string(v);
    lines.push_back(s.str());
  }
  emit_sorted(out, std::move(lines));
  lines.clear();
  for (const Edge& e : g.edges)
    lines.push_back("E " + to_string(e.first) + " " + to_string(e.second));
  emit_sorted(out, std::move(lines));
  lines.clear();
  for (const auto& [base, recs] : g.lineage.table)
    for (const SubRecord& rec : recs) {
      std::ostringstream s;
      s << "LIN " << base << " " << rec.sub << " ";
      switch (rec.origin) {
        case Origin::RealRepeat: s << "real"; break;
        case Origin::Injected: s << "injected"; break;
        case Origin::Split: s << "split:" << rec.parent_sub; break;
      }
      lines.push_back(s.str());
    }
  emit_sorted(out, std::move(lines));
}

LayeredGraph read_published(std::istream& in) {
  LayeredGraph g;
  long depth = -1;
  for (const std::string& line : content_lines(in)) {
    const std::vector<std::string> t = tokens(line);
    if (t[0] == "GP") {
      if (t.size() != 2) throw ParseError("GP line needs one count");
      depth = parse_int(t[1], "layer count");
      if (depth < 0) throw ParseError("negative layer count");
      g.layers.resize(static_cast<std::size_t>(depth));
    } else if (t[0] == "L") {
      if (depth < 0 || t.size() < 2) throw ParseError("bad L line");
      const long l = parse_int(t[1], "layer");
      if (l < 0 || l >= depth) throw ParseError("layer out of range");
      for (std::size_t i = 2; i < t.size(); ++i)
        g.layers[static_cast<std::size_t>(l)].push_back(parse_vertex(t[i]));
    } else if (t[0] == "E") {
      if (t.size() != 3) throw ParseError("E line needs two vertices");
      g.edges.insert(make_edge(parse_vertex(t[1]), parse_vertex(t[2])));
    } else if (t[0] == "LIN") {
      if (t.size() != 4) throw ParseError("LIN line needs base, sub, origin");
      SubRecord rec;
      const long base = parse_int(t[1], "base");
      rec.sub = static_cast<std::int32_t>(parse_int(t[2], "sub"));
      if (t[3] == "real") {
        rec.origin = Origin::RealRepeat;
      } else if (t[3] == "injected") {
        rec.origin = Origin::Injected;
      } else if (t[3].rfind("split:", 0) == 0) {
        rec.origin = Origin::Split;
        rec.parent_sub =
            static_cast<std::int32_t>(parse_int(t[3].substr(6), "parent sub"));
      } else {
        throw ParseError("unknown origin '" + t[3] + "'");
      }
      g.lineage.add(static_cast<std::int32_t>(base), rec);
    } else {
      throw ParseError("unknown published-graph line '" + t[0] + "'");
    }
  }
  if (depth < 0) throw ParseError("missing GP header");
  for (auto& layer : g.layers) std::sort(layer.begin(), layer.end());
  return g;
}

void write_report(std::ostream& out, const Reconstruction& rec) {
  out << "EDGES";
  for (const Edge& e : rec.edge_set)
    out << " " << to_string(e.first) << "-" << to_string(e.second);
  out << "\n";
  out << "ORDER ";
  switch (rec.order) {
    case OrderKind::Confirmed: out << "confirmed"; break;
    case OrderKind::Ambiguous: out << "ambiguous"; break;
    case OrderKind::Failed: out << "failed"; break;
  }
  out << "\n";
  for (const PathSeq& c : rec.candidates) {
    out << "SEQ";
    for (VertexId v : c.seq) out << " " << to_string(v);
    out << "\n";
  }
}

std::string slurp_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void spit_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << content;
  if (!out) throw IoError("write failed for " + path);
}

}  // namespace gpath
