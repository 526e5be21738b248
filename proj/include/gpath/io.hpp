#pragma once

#include <iosfwd>
#include <string>

#include "gpath/core.hpp"
#include "gpath/publish.hpp"
#include "gpath/recover.hpp"

namespace gpath {

// Map files: `V <n>`, one `E <u> <v>` per edge, one `P <v1> <v2> ...` line.
// Vertex tokens are `<base>` or `<base>.<sub>`; `#` starts a comment.
std::pair<Network, PathSeq> read_map(std::istream& in);
void write_map(std::ostream& out, const Network& n, const PathSeq& p);

// Relation matrix dump: `R <n>` then n rows of n integers.
void write_matrix(std::ostream& out, const RelationMatrix& r);

// Published graph: `GP <n_layers>`, `L <layer> <v>...`, `E <u> <v>`,
// `LIN <base> <sub> <origin>` with origin real|injected|split:<parent_sub>.
// Lines within each section are sorted lexicographically.
void write_published(std::ostream& out, const LayeredGraph& g);
LayeredGraph read_published(std::istream& in);

// Reconstruction report: `EDGES <u-v> ...`, `ORDER ...`, `SEQ ...` lines.
void write_report(std::ostream& out, const Reconstruction& rec);

// File helpers; throw IoError when the file cannot be opened.
std::string slurp_file(const std::string& path);
void spit_file(const std::string& path, const std::string& content);

}  // namespace gpath
