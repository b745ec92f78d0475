#include "graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace wts {

int Signature::name_index(const std::string& n) const {
  for (size_t i = 0; i < gamma.size(); ++i)
    if (gamma[i] == n) return static_cast<int>(i);
  throw ParseError("unknown edge name: \"" + n + "\"");
}

int Signature::label_index(const std::string& l) const {
  for (size_t i = 0; i < sigma.size(); ++i)
    if (sigma[i] == l) return static_cast<int>(i);
  throw ParseError("unknown label: \"" + l + "\"");
}

Signature make_signature(std::vector<std::string> gamma, std::vector<std::string> sigma) {
  if (gamma.empty()) throw ValidationError("signature needs at least one edge name");
  if (sigma.empty()) throw ValidationError("signature needs at least one label");
  auto check_unique = [](const std::vector<std::string>& xs, const char* what) {
    std::set<std::string> seen;
    for (const auto& x : xs)
      if (!seen.insert(x).second)
        throw ValidationError(std::string("duplicate ") + what + ": \"" + x + "\"");
  };
  check_unique(gamma, "edge name");
  check_unique(sigma, "label");
  return Signature{std::move(gamma), std::move(sigma)};
}

int Graph::edge_count() const {
  int c = 0;
  for (const auto& per_name : out_)
    for (int t : per_name)
      if (t >= 0) ++c;
  return c;
}

std::vector<EdgeSpec> Graph::edges() const {
  std::vector<EdgeSpec> out;
  for (size_t g = 0; g < out_.size(); ++g)
    for (size_t v = 0; v < out_[g].size(); ++v)
      if (out_[g][v] >= 0)
        out.push_back({static_cast<int>(g), static_cast<int>(v), out_[g][v]});
  return out;
}

std::vector<std::vector<int>> Graph::undirected_adjacency() const {
  std::vector<std::set<int>> adj(vertex_count());
  for (const auto& e : edges()) {
    adj[e.src].insert(e.dst);
    adj[e.dst].insert(e.src);
  }
  std::vector<std::vector<int>> out(vertex_count());
  for (int v = 0; v < vertex_count(); ++v) out[v].assign(adj[v].begin(), adj[v].end());
  return out;
}

Graph build_graph(Signature sig, std::vector<int> labels, const std::vector<EdgeSpec>& edges) {
  const int n = static_cast<int>(labels.size());
  for (int v = 0; v < n; ++v)
    if (labels[v] < 0 || labels[v] >= static_cast<int>(sig.sigma.size())) {
      std::ostringstream os;
      os << "vertex " << v << " has out-of-range label index " << labels[v];
      throw ValidationError(os.str());
    }
  Graph g;
  g.sig_ = std::move(sig);
  g.label_ = std::move(labels);
  g.out_.assign(g.sig_.gamma.size(), std::vector<int>(n, -1));
  g.in_.assign(g.sig_.gamma.size(), std::vector<int>(n, -1));
  for (const auto& e : edges) {
    if (e.name < 0 || e.name >= static_cast<int>(g.sig_.gamma.size()))
      throw ValidationError("edge with out-of-range name index");
    const std::string& nm = g.sig_.gamma[e.name];
    auto check_vertex = [&](int v) {
      if (v < 0 || v >= n) {
        std::ostringstream os;
        os << "edge \"" << nm << "\" references undeclared vertex " << v;
        throw ValidationError(os.str());
      }
    };
    check_vertex(e.src);
    check_vertex(e.dst);
    if (e.src == e.dst) {
      std::ostringstream os;
      os << "self-loop \"" << nm << "\" at vertex " << e.src;
      throw ValidationError(os.str());
    }
    if (g.out_[e.name][e.src] == e.dst) {
      std::ostringstream os;
      os << "duplicate edge \"" << nm << "\" " << e.src << "->" << e.dst;
      throw ValidationError(os.str());
    }
    if (g.out_[e.name][e.src] != -1) {
      std::ostringstream os;
      os << "vertex " << e.src << " has two outgoing \"" << nm << "\" edges";
      throw ValidationError(os.str());
    }
    if (g.in_[e.name][e.dst] != -1) {
      std::ostringstream os;
      os << "vertex " << e.dst << " has two incoming \"" << nm << "\" edges";
      throw ValidationError(os.str());
    }
    g.out_[e.name][e.src] = e.dst;
    g.in_[e.name][e.dst] = e.src;
  }
  return g;
}

Graph build_graph(Signature sig, const std::vector<std::string>& labels,
                  const std::vector<std::tuple<std::string, int, int>>& edges) {
  std::vector<int> lab;
  lab.reserve(labels.size());
  for (const auto& l : labels) lab.push_back(sig.label_index(l));
  std::vector<EdgeSpec> es;
  es.reserve(edges.size());
  for (const auto& [nm, s, d] : edges) es.push_back({sig.name_index(nm), s, d});
  return build_graph(std::move(sig), std::move(lab), es);
}

VertexType vertex_type(const Graph& g, int v) {
  if (v < 0 || v >= g.vertex_count()) throw ValidationError("unknown vertex");
  VertexType t;
  for (size_t nm = 0; nm < g.signature().gamma.size(); ++nm) {
    if (g.in_neighbor(v, static_cast<int>(nm)) >= 0) t.in_mask |= 1u << nm;
    if (g.out_neighbor(v, static_cast<int>(nm)) >= 0) t.out_mask |= 1u << nm;
  }
  return t;
}

std::optional<int> edge_endpoint(const Graph& g, int v, int name, Direction dir) {
  if (v < 0 || v >= g.vertex_count()) throw ValidationError("unknown vertex");
  if (name < 0 || name >= static_cast<int>(g.signature().gamma.size()))
    throw ValidationError("unknown edge name index");
  int u = dir == Direction::Out ? g.out_neighbor(v, name) : g.in_neighbor(v, name);
  if (u < 0) return std::nullopt;
  return u;
}

const char* const kGridRight = "right";
const char* const kGridDown = "down";

int grid_vertex(int n_cols, int i, int j) { return i * n_cols + j; }

Graph grid_graph(int m, int n, const std::vector<std::vector<std::string>>& labels,
                 std::vector<std::string> sigma) {
  if (m < 1 || n < 1) throw ValidationError("grid dimensions must be positive");
  if (static_cast<int>(labels.size()) != m)
    throw ValidationError("label matrix row count does not match grid");
  Signature sig = make_signature({kGridRight, kGridDown}, std::move(sigma));
  std::vector<int> lab(m * n);
  for (int i = 0; i < m; ++i) {
    if (static_cast<int>(labels[i].size()) != n)
      throw ValidationError("label matrix column count does not match grid");
    for (int j = 0; j < n; ++j) lab[grid_vertex(n, i, j)] = sig.label_index(labels[i][j]);
  }
  std::vector<EdgeSpec> edges;
  const int right = 0, down = 1;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j + 1 < n; ++j)
      edges.push_back({right, grid_vertex(n, i, j), grid_vertex(n, i, j + 1)});
  for (int i = 0; i + 1 < m; ++i)
    for (int j = 0; j < n; ++j)
      edges.push_back({down, grid_vertex(n, i, j), grid_vertex(n, i + 1, j)});
  return build_graph(std::move(sig), std::move(lab), edges);
}

int triangular_vertex(int n, int i, int j) {
  // Row-major over the upper-right cells: row i holds the diagonal vertex
  // followed by cells (i,i+1)..(i,n-1).
  if (i > j) std::swap(i, j);
  int offset = 0;
  for (int r = 0; r < i; ++r) offset += n - r;
  return offset + (j - i);
}

Graph triangular_grid(const std::vector<std::vector<bool>>& adjacency) {
  const int n = static_cast<int>(adjacency.size());
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(adjacency[i].size()) != n)
      throw ValidationError("adjacency matrix is not square");
    for (int j = 0; j < n; ++j)
      if (adjacency[i][j] != adjacency[j][i])
        throw ValidationError("adjacency matrix is not symmetric");
  }
  Signature sig = make_signature({kGridRight, kGridDown}, {"0", "1"});
  const int total = n * (n + 1) / 2;
  std::vector<int> lab(total, 0);
  for (int i = 0; i < n; ++i) {
    lab[triangular_vertex(n, i, i)] = 1;  // diagonal
    for (int j = i + 1; j < n; ++j)
      lab[triangular_vertex(n, i, j)] = adjacency[i][j] ? 1 : 0;
  }
  std::vector<EdgeSpec> edges;
  const int right = 0, down = 1;
  // Row i chains rightward from the diagonal; column j chains downward from
  // the diagonal through decreasing row index.
  for (int i = 0; i < n; ++i)
    for (int j = i; j + 1 < n; ++j)
      edges.push_back({right, triangular_vertex(n, i, j), triangular_vertex(n, i, j + 1)});
  for (int j = 0; j < n; ++j)
    for (int i = j; i - 1 >= 0; --i)
      edges.push_back({down, triangular_vertex(n, i, j), triangular_vertex(n, i - 1, j)});
  return build_graph(std::move(sig), std::move(lab), edges);
}

}  // namespace wts
