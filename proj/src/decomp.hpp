#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"

namespace wts {

struct PathDecomposition {
  std::vector<std::vector<int>> bags;  // each sorted, nonempty
};

struct TreeDecomposition {
  struct Node {
    std::vector<int> bag;  // sorted, nonempty
    std::vector<int> children;
  };
  std::vector<Node> nodes;
  int root = 0;
};

// Word/term operations over colors [k] = {0..k}. A "node" op creates a
// colored labeled vertex, "add" draws a named edge between two colored
// vertices, "forget" releases a color.
struct TermOp {
  enum class Kind { Node, Add, Forget };
  Kind kind = Kind::Node;
  int color = -1;         // Node, Forget
  int label = -1;         // Node: index into sigma
  int name = -1;          // Add: index into gamma
  int src = -1, dst = -1; // Add: colors
  bool operator==(const TermOp& o) const = default;
};

TermOp op_node(int color, int label);
TermOp op_add(int name, int src, int dst);
TermOp op_forget(int color);

struct KWord {
  Signature sig;
  int k = 0;
  std::vector<TermOp> ops;
};

// Tree term stored as a node vector; Union nodes have two children, Add and
// Forget one, Leaf none. Root indexes into nodes.
struct KTreeTerm {
  struct Node {
    enum class Kind { Leaf, Add, Forget, Union };
    Kind kind = Kind::Leaf;
    int color = -1, label = -1;
    int name = -1, src = -1, dst = -1;
    int child0 = -1, child1 = -1;
  };
  Signature sig;
  int k = 0;
  std::vector<Node> nodes;
  int root = -1;
};

int ktt_make_leaf(KTreeTerm& t, int color, int label);
int ktt_make_add(KTreeTerm& t, int name, int src, int dst, int child);
int ktt_make_forget(KTreeTerm& t, int color, int child);
int ktt_make_union(KTreeTerm& t, int left, int right);

// Post-order traversal of the node dag (children before parents), iterative
// so chains of unary nodes cannot overflow the stack.
std::vector<int> ktt_postorder(const KTreeTerm& t);

struct ColoredGraph {
  Graph graph;
  std::map<int, int> chi;  // color -> vertex, injective
};

struct WfCheck {
  bool ok = true;
  int position = -1;       // op index (k-words) or node id (terms)
  std::string message;
};

// Prefix conditions: node on an inactive color, forget on an active color,
// add on distinct active colors without re-adding the same directed
// gamma-edge.
WfCheck is_well_formed_kword(const KWord& w);

// Same conditions on subterms plus the union guards: shared colors carry
// equal labels and no gamma-edge is present in both operands between the
// same pair of shared vertices.
WfCheck is_well_formed_ktt(const KTreeTerm& t);

// Left-to-right fold. Requires well-formedness (throws ValidationError with
// the offending position otherwise); also rejects words whose result would
// violate the per-name degree bound. vertex_of_op, when requested, maps each
// Node op index to the created vertex id (creation order).
ColoredGraph kword_semantics(const KWord& w, std::vector<int>* vertex_of_op = nullptr);

// Bottom-up evaluation; at Union, vertices sharing a color are merged
// (labels must agree). vertex_of_leaf maps each Leaf node id to its final
// vertex id after all merges.
ColoredGraph ktt_semantics(const KTreeTerm& t, std::vector<int>* vertex_of_leaf = nullptr);

// Width on success; throws ValidationError naming the violated condition
// and a witness otherwise.
int validate_path_decomposition(const Graph& g, const PathDecomposition& pd);
int validate_tree_decomposition(const Graph& g, const TreeDecomposition& td);

struct KWordBuild {
  KWord word;
  std::vector<int> vertex_of_op;  // op index -> graph vertex (-1 for non-node ops)
};

struct KttBuild {
  KTreeTerm term;
  std::vector<int> vertex_of_node;  // node id -> graph vertex (-1 for non-leaves)
};

// Bag-by-bag construction: new bag members take least available colors, all
// edges toward current colored vertices are added, colors absent from the
// next bag are forgotten. Semantics reproduces (G, empty coloring).
KWordBuild kword_from_path_decomposition(const Graph& g, const PathDecomposition& pd);

// Colored-vertex sets after every prefix, empty ones dropped.
PathDecomposition path_decomposition_from_kword(const KWord& w);

// At most k earlier vertices still awaiting edges to later vertices, at
// every position of the order.
bool check_k_bounded(const Graph& g, const std::vector<int>& order, int k);

// Vertex-by-vertex construction along the order: create on the least free
// color, connect to earlier colored vertices, forget completed vertices.
// Uses k+1 colors where k is the max pending count of the order.
KWordBuild kword_from_linearization(const Graph& g, const std::vector<int>& order);

// Rooted construction over the decomposition: child subterms are folded with
// unions after forgetting bag-local vertices, new bag members join as leaf
// unions, and each graph edge is added at the shallowest node whose bag
// contains both endpoints.
KttBuild ktt_from_tree_decomposition(const Graph& g, const TreeDecomposition& td);

// Min-fill elimination ordering; result is validated before returning.
// Throws ResourceError when target_width is given and exceeded.
TreeDecomposition heuristic_tree_decomposition(const Graph& g,
                                               std::optional<int> target_width = std::nullopt);

// Pending-vertex bags over a handful of candidate orders, best width wins.
PathDecomposition heuristic_path_decomposition(const Graph& g);

// Bags of consecutive pending sets for a fixed vertex order.
PathDecomposition path_decomposition_from_order(const Graph& g, const std::vector<int>& order);

int path_decomposition_width(const PathDecomposition& pd);
int tree_decomposition_width(const TreeDecomposition& td);

}  // namespace wts
