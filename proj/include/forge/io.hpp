#pragma once

#include <iosfwd>
#include <string>

#include "forge/ehrhart.hpp"
#include "forge/graphs.hpp"
#include "forge/polytope.hpp"
#include "forge/poset.hpp"
#include "forge/simplicial.hpp"

namespace forge {

/// Polytope text format. `#` starts a comment. Sections in order:
///   ambient_dim q
///   vertices k      followed by k lines of q integers
///   facets k        followed by k lines of q+1 integers (normal..., offset), normal.x <= offset
///   equalities k    followed by k lines of q+1 integers (normal..., offset), normal.x = offset
IntegerPolytope read_polytope(std::istream& in);
IntegerPolytope read_polytope_file(const std::string& path);
/// Canonical writer: vertices sorted lexicographically unless keep_order.
void write_polytope(std::ostream& out, const IntegerPolytope& p, bool keep_order = false);

/// Poset file: first line m, then one cover per line "i j" (i covered by j),
/// 1-indexed, `#` comments allowed.
Poset read_poset(std::istream& in);
Poset read_poset_file(const std::string& path);

/// Graph file: first line "p q", then q lines "u v" (multi-edges repeat).
MultiGraph read_graph(std::istream& in);
MultiGraph read_graph_file(const std::string& path);

/// Triangulation export: header "<vertex count> <dimension>", then one
/// maximal face per line as sorted vertex indices.
void write_triangulation(std::ostream& out, const SimplicialComplex& c);

/// Human-readable pipeline report with HYPOTHESES / H-NUMERATOR / G-THEOREM /
/// CONCLUSION sections; `machine` switches to deterministic key-value lines.
void write_report(std::ostream& out, const PipelineReport& rep, bool machine);

}  // namespace forge
