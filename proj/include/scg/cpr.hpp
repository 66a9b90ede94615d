#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "scg/sggi.hpp"

namespace scg {

/// Syntax or structural error in CPR text, with the 1-based offending line.
struct parse_error : std::runtime_error {
  int line;
  parse_error(int line_, const std::string& what)
      : std::runtime_error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

struct CprEdge {
  int u = 0;      // 1-based, u < v after normalization
  int v = 0;
  int label = 0;  // display label in [offset, offset+rank-1]
  bool operator==(const CprEdge&) const = default;
  auto operator<=>(const CprEdge&) const = default;
};

/// Edge-labelled multigraph of a generator tuple: an i-labelled edge joins x
/// and rho_i(x). Each label's edge set is a partial matching. Labels are kept
/// as displayed (offset applied); algorithms work on label - offset.
struct CprGraph {
  int n = 0;
  int rank = 0;
  int offset = 0;
  std::vector<CprEdge> edges;  // normalized: u < v, sorted by (label, u, v)

  bool operator==(const CprGraph&) const = default;
};

CprGraph from_tuple(const GeneratorTuple& t);

/// Inverse of from_tuple. Throws std::invalid_argument when some label's
/// edges share a vertex (not a matching) or an edge is out of range.
GeneratorTuple to_tuple(const CprGraph& g);

/// Connected components of the subgraph spanned by the given display labels,
/// sorted internally and by smallest vertex. Unknown labels throw.
std::vector<std::vector<int>> components(const CprGraph& g, std::span<const int> labels);
std::vector<std::vector<int>> components(const CprGraph& g, std::initializer_list<int> labels);

enum class PairShape : std::uint8_t {
  SingleVertex,
  SingleEdge,
  DoubleEdge,
  AlternatingSquare,
  Invalid,
};

struct PairComponent {
  std::vector<int> vertices;
  PairShape shape = PairShape::SingleVertex;
};

/// Shapes of the components of the {i,j}-subgraph for non-adjacent labels
/// (|i-j| >= 2, display labels). An Invalid tag means rho_i and rho_j cannot
/// commute, i.e. the string property is broken at (i, j).
std::vector<PairComponent> classify_noncommuting_pair(const CprGraph& g, int i, int j);

using CanonicalKey = std::string;

/// Vertex-relabeling-invariant key: the minimum label-ordered adjacency code
/// over a refinement-plus-individualization backtrack. Two graphs get equal
/// keys iff they are isomorphic as labelled multigraphs (labels are NOT
/// permutable; duality is handled by callers via relabel_reversed).
CanonicalKey canonical_key(const CprGraph& g);

bool iso(const CprGraph& a, const CprGraph& b);

/// Label i -> rank-1-i (internal positions); used to key duality classes.
CprGraph relabel_reversed(const CprGraph& g);

/// Text format: header "cpr <n> <rank> <offset>", then one edge per line
/// "<u> <v> <label>" (1-based vertices, display labels), '#' comments.
CprGraph parse_cpr_text(const std::string& text);
std::string emit_cpr_text(const CprGraph& g);

/// DOT export; parallel edges are emitted separately, each with its label.
std::string emit_dot(const CprGraph& g);

}  // namespace scg
