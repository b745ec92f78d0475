#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"

namespace wts {

// Edge names and node labels, both ordered and duplicate-free.
struct Signature {
  std::vector<std::string> gamma;  // edge names
  std::vector<std::string> sigma;  // node labels

  int name_index(const std::string& n) const;
  int label_index(const std::string& l) const;
  bool operator==(const Signature& o) const { return gamma == o.gamma && sigma == o.sigma; }
};

Signature make_signature(std::vector<std::string> gamma, std::vector<std::string> sigma);

struct EdgeSpec {
  int name;  // index into gamma
  int src, dst;
};

// Bounded-degree labeled graph: per edge name every vertex has at most one
// outgoing and one incoming edge. Vertices are dense ids 0..n-1. Immutable
// after construction.
class Graph {
public:
  Graph() = default;

  const Signature& signature() const { return sig_; }
  int vertex_count() const { return static_cast<int>(label_.size()); }
  int edge_count() const;
  int label(int v) const { return label_.at(v); }
  const std::string& label_name(int v) const { return sig_.sigma.at(label_.at(v)); }

  // -1 when absent.
  int out_neighbor(int v, int name) const { return out_.at(name).at(v); }
  int in_neighbor(int v, int name) const { return in_.at(name).at(v); }

  std::vector<EdgeSpec> edges() const;  // sorted by (name, src)

  // Undirected adjacency over all edge names (used by decompositions).
  std::vector<std::vector<int>> undirected_adjacency() const;

  friend Graph build_graph(Signature sig, std::vector<int> labels, const std::vector<EdgeSpec>& edges);

private:
  Signature sig_;
  std::vector<int> label_;
  std::vector<std::vector<int>> out_, in_;  // [name][vertex] -> vertex or -1
};

// Validates everything: label/name ranges, endpoint ranges, the per-name
// degree bound, no self-loops, no duplicate (name,src,dst).
Graph build_graph(Signature sig, std::vector<int> labels, const std::vector<EdgeSpec>& edges);

// Convenience overload resolving label and edge-name strings.
Graph build_graph(Signature sig, const std::vector<std::string>& labels,
                  const std::vector<std::tuple<std::string, int, int>>& edges);

// Incoming/outgoing edge-name sets (bitmasks over gamma indices).
struct VertexType {
  std::uint32_t in_mask = 0;
  std::uint32_t out_mask = 0;
  bool operator==(const VertexType& o) const {
    return in_mask == o.in_mask && out_mask == o.out_mask;
  }
};

VertexType vertex_type(const Graph& g, int v);

enum class Direction { In, Out };
std::optional<int> edge_endpoint(const Graph& g, int v, int name, Direction dir);

// m x n grid over gamma = {right,down}: right edges (i,j)->(i,j+1), down
// edges (i,j)->(i+1,j). labels[i][j] taken from sigma {"0","1"} unless a
// custom sigma is supplied.
extern const char* const kGridRight;
extern const char* const kGridDown;
Graph grid_graph(int m, int n, const std::vector<std::vector<std::string>>& labels,
                 std::vector<std::string> sigma = {"0", "1"});
int grid_vertex(int n_cols, int i, int j);  // row-major id

// Lower-right triangular grid encoding a symmetric adjacency matrix.
// Diagonal vertices are labeled "1"; cell (i,j), i<j, is labeled by
// adjacency[i][j]. Row chains run rightward from the diagonal, column
// chains run downward from the diagonal.
Graph triangular_grid(const std::vector<std::vector<bool>>& adjacency);
int triangular_vertex(int n, int i, int j);  // i == j for diagonal vertices

}  // namespace wts
