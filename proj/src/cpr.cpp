#include "scg/cpr.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace scg {

namespace {

// Validates ranges, the no-loop rule and the per-label matching invariant,
// then normalizes edge order. All graph constructors funnel through here.
CprGraph make_graph(int n, int rank, int offset, std::vector<CprEdge> edges) {
  if (n < 1 || n > kMaxDegree)
    throw std::invalid_argument("vertex count must be in [1, " + std::to_string(kMaxDegree) +
                                "], got " + std::to_string(n));
  if (rank < 1) throw std::invalid_argument("rank must be >= 1");
  std::array<std::array<int, kMaxDegree + 1>, 8> incident{};
  if (rank > 8) throw std::invalid_argument("rank > 8 not supported");
  for (auto& e : edges) {
    if (e.u == e.v) throw std::invalid_argument("loop edge at vertex " + std::to_string(e.u));
    if (e.u < 1 || e.u > n || e.v < 1 || e.v > n)
      throw std::invalid_argument("edge endpoint out of range");
    if (e.label < offset || e.label >= offset + rank)
      throw std::invalid_argument("label " + std::to_string(e.label) + " out of range [" +
                                  std::to_string(offset) + ", " +
                                  std::to_string(offset + rank - 1) + "]");
    if (e.u > e.v) std::swap(e.u, e.v);
    int l = e.label - offset;
    if (++incident[l][e.u] > 1 || ++incident[l][e.v] > 1)
      throw std::invalid_argument("label " + std::to_string(e.label) +
                                  " is not a matching (two edges meet at a vertex)");
  }
  std::sort(edges.begin(), edges.end(),
            [](const CprEdge& a, const CprEdge& b) {
              return std::tie(a.label, a.u, a.v) < std::tie(b.label, b.u, b.v);
            });
  return CprGraph{n, rank, offset, std::move(edges)};
}

// partner[l][v] = 0-based partner of vertex v under internal label l, or -1.
std::vector<std::vector<int>> partner_table(const CprGraph& g) {
  std::vector<std::vector<int>> partner(g.rank, std::vector<int>(g.n, -1));
  for (const auto& e : g.edges) {
    int l = e.label - g.offset;
    partner[l][e.u - 1] = e.v - 1;
    partner[l][e.v - 1] = e.u - 1;
  }
  return partner;
}

}  // namespace

CprGraph from_tuple(const GeneratorTuple& t) {
  std::vector<CprEdge> edges;
  for (int i = 0; i < t.rank(); ++i) {
    const Permutation& g = t.gens[i];
    if (g.degree() != t.degree || !g.is_involution())
      throw std::invalid_argument("from_tuple: generator " + std::to_string(i) +
                                  " is not an involution of the right degree");
    for (int x = 1; x <= t.degree; ++x)
      if (g(x) > x) edges.push_back({x, g(x), t.label(i)});
  }
  return make_graph(t.degree, std::max(t.rank(), 1), t.label_offset, std::move(edges));
}

GeneratorTuple to_tuple(const CprGraph& g) {
  CprGraph checked = make_graph(g.n, g.rank, g.offset, g.edges);
  GeneratorTuple t;
  t.degree = checked.n;
  t.label_offset = checked.offset;
  auto partner = partner_table(checked);
  for (int l = 0; l < checked.rank; ++l) {
    std::vector<int> images(checked.n);
    for (int v = 0; v < checked.n; ++v) images[v] = partner[l][v] < 0 ? v + 1 : partner[l][v] + 1;
    t.gens.push_back(Permutation::from_images(images));
  }
  return t;
}

std::vector<std::vector<int>> components(const CprGraph& g, std::span<const int> labels) {
  std::array<bool, 16> want{};
  for (int l : labels) {
    if (l < g.offset || l >= g.offset + g.rank)
      throw std::invalid_argument("components: unknown label " + std::to_string(l));
    want[l - g.offset] = true;
  }
  std::vector<int> parent(g.n + 1);
  for (int i = 0; i <= g.n; ++i) parent[i] = i;
  auto find = [&parent](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : g.edges) {
    if (!want[e.label - g.offset]) continue;
    int a = find(e.u), b = find(e.v);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::vector<int>> out;
  std::vector<int> index(g.n + 1, -1);
  for (int v = 1; v <= g.n; ++v) {
    int r = find(v);
    if (index[r] < 0) {
      index[r] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[index[r]].push_back(v);
  }
  return out;
}

std::vector<std::vector<int>> components(const CprGraph& g, std::initializer_list<int> labels) {
  return components(g, std::span<const int>(labels.begin(), labels.size()));
}

std::vector<PairComponent> classify_noncommuting_pair(const CprGraph& g, int i, int j) {
  if (std::abs(i - j) < 2)
    throw std::invalid_argument("classify_noncommuting_pair: labels must satisfy |i-j| >= 2");
  std::vector<PairComponent> out;
  for (auto& comp : components(g, {i, j})) {
    int ei = 0, ej = 0;
    for (const auto& e : g.edges) {
      if (!std::binary_search(comp.begin(), comp.end(), e.u)) continue;
      if (e.label == i) ++ei;
      if (e.label == j) ++ej;
    }
    PairShape shape = PairShape::Invalid;
    const std::size_t nv = comp.size();
    if (nv == 1)
      shape = PairShape::SingleVertex;
    else if (nv == 2 && ei + ej == 1)
      shape = PairShape::SingleEdge;
    else if (nv == 2 && ei == 1 && ej == 1)
      shape = PairShape::DoubleEdge;
    else if (nv == 4 && ei == 2 && ej == 2)
      shape = PairShape::AlternatingSquare;  // connected + two matchings forces the 4-cycle
    out.push_back({std::move(comp), shape});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Canonical form: equitable refinement plus individualization backtracking.
// The leaf set of the search tree is invariant under vertex relabeling, so the
// minimum leaf code is a canonical form. Per-label matchings keep signatures
// tiny: each vertex sees at most one partner per label.

namespace {

class CanonSearch {
 public:
  CanonSearch(const CprGraph& g) : n_(g.n), r_(g.rank), partner_(partner_table(g)) {}

  std::string run() {
    std::vector<std::vector<int>> cells(1);
    cells[0].resize(n_);
    for (int v = 0; v < n_; ++v) cells[0][v] = v;
    search(std::move(cells));
    return best_;
  }

 private:
  using Cells = std::vector<std::vector<int>>;

  std::vector<int> signature(int v, const std::vector<int>& cell_of) const {
    std::vector<int> sig(r_);
    for (int l = 0; l < r_; ++l) sig[l] = partner_[l][v] < 0 ? -1 : cell_of[partner_[l][v]];
    return sig;
  }

  void refine(Cells& cells) const {
    std::vector<int> cell_of(n_);
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t ci = 0; ci < cells.size(); ++ci)
        for (int v : cells[ci]) cell_of[v] = static_cast<int>(ci);
      Cells next;
      next.reserve(cells.size());
      for (const auto& cell : cells) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        std::vector<std::pair<std::vector<int>, int>> keyed;
        keyed.reserve(cell.size());
        for (int v : cell) keyed.emplace_back(signature(v, cell_of), v);
        std::sort(keyed.begin(), keyed.end());
        Cells groups;
        for (auto& [sig, v] : keyed) {
          if (groups.empty() || signature(groups.back().front(), cell_of) != sig)
            groups.emplace_back();
          groups.back().push_back(v);
        }
        if (groups.size() > 1) changed = true;
        for (auto& grp : groups) next.push_back(std::move(grp));
      }
      cells = std::move(next);
    }
  }

  bool isolated(int v) const {
    for (int l = 0; l < r_; ++l)
      if (partner_[l][v] >= 0) return false;
    return true;
  }

  std::string code_of(const Cells& cells) const {
    std::vector<int> order;
    order.reserve(n_);
    for (const auto& cell : cells)
      for (int v : cell) order.push_back(v);
    std::vector<int> newid(n_);
    for (int w = 0; w < n_; ++w) newid[order[w]] = w;
    std::string code;
    code.reserve(static_cast<std::size_t>(n_) * r_);
    for (int w = 0; w < n_; ++w)
      for (int l = 0; l < r_; ++l) {
        int p = partner_[l][order[w]];
        code.push_back(p < 0 ? static_cast<char>(0xFF) : static_cast<char>(newid[p]));
      }
    return code;
  }

  void search(Cells cells) {
    refine(cells);
    int target = -1;
    for (std::size_t ci = 0; ci < cells.size(); ++ci) {
      // Cells of isolated vertices never split and never affect other rows;
      // any internal order yields the same code, so they are not branched on.
      if (cells[ci].size() > 1 && !isolated(cells[ci].front())) {
        target = static_cast<int>(ci);
        break;
      }
    }
    if (target < 0) {
      std::string code = code_of(cells);
      if (best_.empty() || code < best_) best_ = std::move(code);
      return;
    }
    std::vector<int> branch = cells[target];
    std::sort(branch.begin(), branch.end());
    for (int v : branch) {
      Cells child;
      child.reserve(cells.size() + 1);
      for (int ci = 0; ci < target; ++ci) child.push_back(cells[ci]);
      child.push_back({v});
      std::vector<int> rest;
      for (int w : cells[target])
        if (w != v) rest.push_back(w);
      child.push_back(std::move(rest));
      for (std::size_t ci = target + 1; ci < cells.size(); ++ci) child.push_back(cells[ci]);
      search(std::move(child));
    }
  }

  int n_;
  int r_;
  std::vector<std::vector<int>> partner_;
  std::string best_;
};

}  // namespace

CanonicalKey canonical_key(const CprGraph& g) {
  CanonicalKey key;
  key.push_back(static_cast<char>(g.n));
  key.push_back(static_cast<char>(g.rank));
  if (g.n > 0) key += CanonSearch(g).run();
  return key;
}

bool iso(const CprGraph& a, const CprGraph& b) {
  if (a.n != b.n || a.rank != b.rank || a.edges.size() != b.edges.size()) return false;
  return canonical_key(a) == canonical_key(b);
}

CprGraph relabel_reversed(const CprGraph& g) {
  std::vector<CprEdge> edges = g.edges;
  for (auto& e : edges) e.label = g.offset + (g.rank - 1 - (e.label - g.offset));
  return make_graph(g.n, g.rank, g.offset, std::move(edges));
}

// ---------------------------------------------------------------------------
// Text and DOT formats

CprGraph parse_cpr_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool have_header = false;
  int n = 0, rank = 0, offset = 0, header_line = 0;
  std::vector<CprEdge> edges;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    std::istringstream ls(line);
    if (!have_header) {
      std::string magic;
      if (!(ls >> magic)) continue;  // blank line
      if (magic != "cpr") throw parse_error(lineno, "expected header 'cpr <n> <rank> <offset>'");
      if (!(ls >> n >> rank >> offset)) throw parse_error(lineno, "malformed header");
      std::string extra;
      if (ls >> extra) throw parse_error(lineno, "trailing tokens after header");
      have_header = true;
      header_line = lineno;
      continue;
    }
    CprEdge e;
    if (!(ls >> e.u)) continue;  // blank line
    if (!(ls >> e.v >> e.label)) throw parse_error(lineno, "expected '<u> <v> <label>'");
    std::string extra;
    if (ls >> extra) throw parse_error(lineno, "trailing tokens after edge");
    edges.push_back(e);
  }
  if (!have_header) throw parse_error(lineno ? lineno : 1, "missing 'cpr' header");
  try {
    return make_graph(n, rank, offset, std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw parse_error(header_line, e.what());
  }
}

std::string emit_cpr_text(const CprGraph& g) {
  std::string out = "cpr " + std::to_string(g.n) + " " + std::to_string(g.rank) + " " +
                    std::to_string(g.offset) + "\n";
  for (const auto& e : g.edges)
    out += std::to_string(e.u) + " " + std::to_string(e.v) + " " + std::to_string(e.label) +
           "\n";
  return out;
}

std::string emit_dot(const CprGraph& g) {
  std::string out = "graph cpr {\n  node [shape=circle];\n";
  for (int v = 1; v <= g.n; ++v) out += "  " + std::to_string(v) + ";\n";
  for (const auto& e : g.edges)
    out += "  " + std::to_string(e.u) + " -- " + std::to_string(e.v) + " [label=\"" +
           std::to_string(e.label) + "\"];\n";
  out += "}\n";
  return out;
}

}  // namespace scg
