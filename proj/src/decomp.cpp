#include "decomp.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <tuple>

namespace wts {

TermOp op_node(int color, int label) {
  TermOp o;
  o.kind = TermOp::Kind::Node;
  o.color = color;
  o.label = label;
  return o;
}

TermOp op_add(int name, int src, int dst) {
  TermOp o;
  o.kind = TermOp::Kind::Add;
  o.name = name;
  o.src = src;
  o.dst = dst;
  return o;
}

TermOp op_forget(int color) {
  TermOp o;
  o.kind = TermOp::Kind::Forget;
  o.color = color;
  return o;
}

int ktt_make_leaf(KTreeTerm& t, int color, int label) {
  KTreeTerm::Node n;
  n.kind = KTreeTerm::Node::Kind::Leaf;
  n.color = color;
  n.label = label;
  t.nodes.push_back(n);
  return static_cast<int>(t.nodes.size()) - 1;
}

int ktt_make_add(KTreeTerm& t, int name, int src, int dst, int child) {
  KTreeTerm::Node n;
  n.kind = KTreeTerm::Node::Kind::Add;
  n.name = name;
  n.src = src;
  n.dst = dst;
  n.child0 = child;
  t.nodes.push_back(n);
  return static_cast<int>(t.nodes.size()) - 1;
}

int ktt_make_forget(KTreeTerm& t, int color, int child) {
  KTreeTerm::Node n;
  n.kind = KTreeTerm::Node::Kind::Forget;
  n.color = color;
  n.child0 = child;
  t.nodes.push_back(n);
  return static_cast<int>(t.nodes.size()) - 1;
}

int ktt_make_union(KTreeTerm& t, int left, int right) {
  KTreeTerm::Node n;
  n.kind = KTreeTerm::Node::Kind::Union;
  n.child0 = left;
  n.child1 = right;
  t.nodes.push_back(n);
  return static_cast<int>(t.nodes.size()) - 1;
}

std::vector<int> ktt_postorder(const KTreeTerm& t) {
  std::vector<int> out;
  if (t.root < 0) return out;
  // (node, expanded?)
  std::vector<std::pair<int, bool>> stack{{t.root, false}};
  while (!stack.empty()) {
    auto [id, expanded] = stack.back();
    stack.pop_back();
    if (id < 0 || id >= static_cast<int>(t.nodes.size()))
      throw ValidationError("term node index out of range");
    if (expanded) {
      out.push_back(id);
      continue;
    }
    stack.push_back({id, true});
    const auto& n = t.nodes[id];
    if (n.child1 >= 0) stack.push_back({n.child1, false});
    if (n.child0 >= 0) stack.push_back({n.child0, false});
  }
  return out;
}

namespace {

// Shared simulation state for word/term evaluation and well-formedness
// checking. Vertices are numbered in creation order (for terms: left
// operand first, merged vertices keep the left id).
struct SimState {
  std::vector<int> labels;                   // local vertex labels
  std::map<int, int> chi;                    // color -> local vertex
  std::set<std::tuple<int, int, int>> edges; // (name, src, dst)
  std::map<int, int> leaf_vertex;            // op/node id -> local vertex
};

std::string color_str(int c) { return "color " + std::to_string(c); }

// Applies one op in place; returns a violation message or empty. `strict`
// additionally rejects structures that cannot be graphs (self-loops,
// per-name degree overflow); well-formedness checking leaves those alone.
std::string sim_apply(SimState& st, const Signature& sig, int k, const TermOp& op,
                      int op_id, bool strict) {
  switch (op.kind) {
    case TermOp::Kind::Node: {
      if (op.color < 0 || op.color > k) return color_str(op.color) + " outside [0.." + std::to_string(k) + "]";
      if (op.label < 0 || op.label >= static_cast<int>(sig.sigma.size()))
        return "label index out of range";
      if (st.chi.count(op.color)) return color_str(op.color) + " already active";
      int v = static_cast<int>(st.labels.size());
      st.labels.push_back(op.label);
      st.chi[op.color] = v;
      st.leaf_vertex[op_id] = v;
      return "";
    }
    case TermOp::Kind::Forget: {
      if (op.color < 0 || op.color > k) return color_str(op.color) + " outside [0.." + std::to_string(k) + "]";
      if (!st.chi.count(op.color)) return color_str(op.color) + " not active";
      st.chi.erase(op.color);
      return "";
    }
    case TermOp::Kind::Add: {
      if (op.name < 0 || op.name >= static_cast<int>(sig.gamma.size()))
        return "edge name index out of range";
      if (op.src < 0 || op.src > k || op.dst < 0 || op.dst > k)
        return "edge color outside [0.." + std::to_string(k) + "]";
      auto si = st.chi.find(op.src);
      auto di = st.chi.find(op.dst);
      if (si == st.chi.end()) return color_str(op.src) + " not active";
      if (di == st.chi.end()) return color_str(op.dst) + " not active";
      int u = si->second, v = di->second;
      if (st.edges.count({op.name, u, v}))
        return "\"" + sig.gamma[op.name] + "\" edge already added between " +
               color_str(op.src) + " and " + color_str(op.dst);
      if (strict) {
        if (u == v) return "edge would form a self-loop";
        for (const auto& [nm, a, b] : st.edges) {
          if (nm != op.name) continue;
          if (a == u) return "vertex already has an outgoing \"" + sig.gamma[op.name] + "\" edge";
          if (b == v) return "vertex already has an incoming \"" + sig.gamma[op.name] + "\" edge";
        }
      }
      st.edges.insert({op.name, u, v});
      return "";
    }
  }
  return "corrupt op";
}

// Union per the term semantics: vertices sharing a color in both operands
// are identified (left id wins), labels must agree, edge sets merge with the
// duplicate-gamma-edge guard.
std::string sim_union(SimState& left, SimState&& right, bool strict) {
  std::map<int, int> remap;  // right local id -> merged id
  for (const auto& [color, rv] : right.chi) {
    auto it = left.chi.find(color);
    if (it == left.chi.end()) continue;
    if (left.labels[it->second] != right.labels[rv])
      return "union operands disagree on the label of shared " + color_str(color);
    remap[rv] = it->second;
  }
  int next = static_cast<int>(left.labels.size());
  for (int rv = 0; rv < static_cast<int>(right.labels.size()); ++rv) {
    if (remap.count(rv)) continue;
    remap[rv] = next++;
    left.labels.push_back(right.labels[rv]);
  }
  for (const auto& [color, rv] : right.chi)
    left.chi[color] = remap[rv];  // shared colors map to the same id
  for (const auto& [nm, a, b] : right.edges) {
    int u = remap[a], v = remap[b];
    if (left.edges.count({nm, u, v}))
      return "the same edge occurs in both union operands";
    if (strict) {
      for (const auto& [lnm, la, lb] : left.edges) {
        if (lnm != nm) continue;
        if (la == u) return "union would give a vertex two outgoing edges of one name";
        if (lb == v) return "union would give a vertex two incoming edges of one name";
      }
    }
    left.edges.insert({nm, u, v});
  }
  for (const auto& [id, rv] : right.leaf_vertex) left.leaf_vertex[id] = remap[rv];
  return "";
}

ColoredGraph finish_graph(const Signature& sig, const SimState& st) {
  std::vector<EdgeSpec> edges;
  for (const auto& [nm, a, b] : st.edges) edges.push_back({nm, a, b});
  ColoredGraph cg;
  cg.graph = build_graph(sig, st.labels, edges);
  cg.chi = st.chi;
  return cg;
}

}  // namespace

WfCheck is_well_formed_kword(const KWord& w) {
  SimState st;
  for (size_t i = 0; i < w.ops.size(); ++i) {
    std::string err = sim_apply(st, w.sig, w.k, w.ops[i], static_cast<int>(i), false);
    if (!err.empty()) return {false, static_cast<int>(i), err};
  }
  return {};
}

ColoredGraph kword_semantics(const KWord& w, std::vector<int>* vertex_of_op) {
  SimState st;
  for (size_t i = 0; i < w.ops.size(); ++i) {
    std::string err = sim_apply(st, w.sig, w.k, w.ops[i], static_cast<int>(i), true);
    if (!err.empty()) {
      std::ostringstream os;
      os << "op " << i << ": " << err;
      throw ValidationError(os.str());
    }
  }
  if (vertex_of_op) {
    vertex_of_op->assign(w.ops.size(), -1);
    for (const auto& [op, v] : st.leaf_vertex) (*vertex_of_op)[op] = v;
  }
  return finish_graph(w.sig, st);
}

namespace {

TermOp op_of_node(const KTreeTerm::Node& n) {
  switch (n.kind) {
    case KTreeTerm::Node::Kind::Leaf: return op_node(n.color, n.label);
    case KTreeTerm::Node::Kind::Add: return op_add(n.name, n.src, n.dst);
    case KTreeTerm::Node::Kind::Forget: return op_forget(n.color);
    default: throw ValidationError("union node has no op form");
  }
}

// Runs the whole bottom-up simulation; on violation fills `where`/`why`.
bool sim_term(const KTreeTerm& t, bool strict, SimState& result, int* where, std::string* why) {
  std::map<int, SimState> states;  // node id -> state (owned until consumed)
  for (int id : ktt_postorder(t)) {
    const auto& n = t.nodes[id];
    SimState st;
    std::string err;
    switch (n.kind) {
      case KTreeTerm::Node::Kind::Leaf:
        err = sim_apply(st, t.sig, t.k, op_of_node(n), id, strict);
        break;
      case KTreeTerm::Node::Kind::Add:
      case KTreeTerm::Node::Kind::Forget: {
        auto it = states.find(n.child0);
        if (it == states.end()) throw ValidationError("term is not tree-shaped");
        st = std::move(it->second);
        states.erase(it);
        err = sim_apply(st, t.sig, t.k, op_of_node(n), id, strict);
        break;
      }
      case KTreeTerm::Node::Kind::Union: {
        auto li = states.find(n.child0);
        auto ri = states.find(n.child1);
        if (li == states.end() || ri == states.end())
          throw ValidationError("term is not tree-shaped");
        st = std::move(li->second);
        SimState rs = std::move(ri->second);
        states.erase(li);
        states.erase(n.child1);
        err = sim_union(st, std::move(rs), strict);
        break;
      }
    }
    if (!err.empty()) {
      *where = id;
      *why = err;
      return false;
    }
    states.emplace(id, std::move(st));
  }
  if (t.root < 0) throw ValidationError("term has no root");
  result = std::move(states.at(t.root));
  return true;
}

}  // namespace

WfCheck is_well_formed_ktt(const KTreeTerm& t) {
  SimState st;
  int where = -1;
  std::string why;
  if (!sim_term(t, false, st, &where, &why)) return {false, where, why};
  return {};
}

ColoredGraph ktt_semantics(const KTreeTerm& t, std::vector<int>* vertex_of_leaf) {
  SimState st;
  int where = -1;
  std::string why;
  if (!sim_term(t, true, st, &where, &why)) {
    std::ostringstream os;
    os << "term node " << where << ": " << why;
    throw ValidationError(os.str());
  }
  if (vertex_of_leaf) {
    vertex_of_leaf->assign(t.nodes.size(), -1);
    for (const auto& [id, v] : st.leaf_vertex) (*vertex_of_leaf)[id] = v;
  }
  return finish_graph(t.sig, st);
}

namespace {

void check_bags_basic(const Graph& g, const std::vector<std::vector<int>>& bags) {
  if (bags.empty()) throw ValidationError("decomposition has no bags");
  for (size_t i = 0; i < bags.size(); ++i) {
    if (bags[i].empty())
      throw ValidationError("bag " + std::to_string(i) + " is empty");
    for (int v : bags[i])
      if (v < 0 || v >= g.vertex_count())
        throw ValidationError("bag " + std::to_string(i) + " references unknown vertex " +
                              std::to_string(v));
    for (size_t j = 1; j < bags[i].size(); ++j)
      if (bags[i][j] <= bags[i][j - 1])
        throw ValidationError("bag " + std::to_string(i) + " is not sorted or has duplicates");
  }
}

int bags_width(const std::vector<std::vector<int>>& bags) {
  size_t mx = 0;
  for (const auto& b : bags) mx = std::max(mx, b.size());
  return static_cast<int>(mx) - 1;
}

}  // namespace

int validate_path_decomposition(const Graph& g, const PathDecomposition& pd) {
  check_bags_basic(g, pd.bags);
  const int n = g.vertex_count();
  std::vector<int> first(n, -1), last(n, -1);
  std::vector<std::vector<bool>> member(pd.bags.size(), std::vector<bool>(n, false));
  for (size_t i = 0; i < pd.bags.size(); ++i)
    for (int v : pd.bags[i]) {
      member[i][v] = true;
      if (first[v] < 0) first[v] = static_cast<int>(i);
      last[v] = static_cast<int>(i);
    }
  for (int v = 0; v < n; ++v)
    if (first[v] < 0)
      throw ValidationError("condition 1: vertex " + std::to_string(v) + " occurs in no bag");
  for (const auto& e : g.edges()) {
    bool found = false;
    for (size_t i = 0; i < pd.bags.size() && !found; ++i)
      found = member[i][e.src] && member[i][e.dst];
    if (!found) {
      std::ostringstream os;
      os << "condition 2: edge \"" << g.signature().gamma[e.name] << "\" " << e.src << "->"
         << e.dst << " has no bag containing both endpoints";
      throw ValidationError(os.str());
    }
  }
  for (int v = 0; v < n; ++v)
    for (int i = first[v]; i <= last[v]; ++i)
      if (!member[i][v]) {
        std::ostringstream os;
        os << "condition 3: vertex " << v << " is missing from bag " << i << " between bags "
           << first[v] << " and " << last[v];
        throw ValidationError(os.str());
      }
  return bags_width(pd.bags);
}

int validate_tree_decomposition(const Graph& g, const TreeDecomposition& td) {
  if (td.nodes.empty()) throw ValidationError("decomposition has no bags");
  std::vector<std::vector<int>> bags;
  for (const auto& nd : td.nodes) bags.push_back(nd.bag);
  check_bags_basic(g, bags);

  const int m = static_cast<int>(td.nodes.size());
  if (td.root < 0 || td.root >= m) throw ValidationError("bad decomposition root");
  std::vector<int> parent(m, -2);
  parent[td.root] = -1;
  std::vector<int> stack{td.root};
  int seen = 0;
  while (!stack.empty()) {
    int t = stack.back();
    stack.pop_back();
    ++seen;
    for (int c : td.nodes[t].children) {
      if (c < 0 || c >= m) throw ValidationError("decomposition child index out of range");
      if (parent[c] != -2) throw ValidationError("decomposition nodes do not form a tree");
      parent[c] = t;
      stack.push_back(c);
    }
  }
  if (seen != m) throw ValidationError("decomposition nodes do not form a tree");

  const int n = g.vertex_count();
  std::vector<std::vector<bool>> member(m, std::vector<bool>(n, false));
  std::vector<int> count(n, 0), some_node(n, -1);
  for (int t = 0; t < m; ++t)
    for (int v : td.nodes[t].bag) {
      member[t][v] = true;
      ++count[v];
      some_node[v] = t;
    }
  for (int v = 0; v < n; ++v)
    if (count[v] == 0)
      throw ValidationError("condition 1: vertex " + std::to_string(v) + " occurs in no bag");
  for (const auto& e : g.edges()) {
    bool found = false;
    for (int t = 0; t < m && !found; ++t) found = member[t][e.src] && member[t][e.dst];
    if (!found) {
      std::ostringstream os;
      os << "condition 2: edge \"" << g.signature().gamma[e.name] << "\" " << e.src << "->"
         << e.dst << " has no bag containing both endpoints";
      throw ValidationError(os.str());
    }
  }
  // Connectivity of each vertex's occurrence set over the tree.
  std::vector<std::vector<int>> neighbors(m);
  for (int t = 0; t < m; ++t)
    for (int c : td.nodes[t].children) {
      neighbors[t].push_back(c);
      neighbors[c].push_back(t);
    }
  for (int v = 0; v < n; ++v) {
    std::vector<bool> visited(m, false);
    std::vector<int> bfs{some_node[v]};
    visited[some_node[v]] = true;
    int reached = 0;
    while (!bfs.empty()) {
      int t = bfs.back();
      bfs.pop_back();
      ++reached;
      for (int u : neighbors[t])
        if (!visited[u] && member[u][v]) {
          visited[u] = true;
          bfs.push_back(u);
        }
    }
    if (reached != count[v]) {
      std::ostringstream os;
      os << "condition 3: the bags containing vertex " << v << " are not connected in the tree";
      throw ValidationError(os.str());
    }
  }
  return bags_width(bags);
}

int path_decomposition_width(const PathDecomposition& pd) { return bags_width(pd.bags); }

int tree_decomposition_width(const TreeDecomposition& td) {
  size_t mx = 0;
  for (const auto& nd : td.nodes) mx = std::max(mx, nd.bag.size());
  return static_cast<int>(mx) - 1;
}

KWordBuild kword_from_path_decomposition(const Graph& g, const PathDecomposition& pd) {
  const int k = validate_path_decomposition(g, pd);
  KWordBuild out;
  out.word.sig = g.signature();
  out.word.k = k;

  const int names = static_cast<int>(g.signature().gamma.size());
  std::map<int, int> color_of;  // graph vertex -> color
  std::vector<bool> created(g.vertex_count(), false);
  std::set<std::tuple<int, int, int>> added;

  auto push = [&](const TermOp& op, int vertex) {
    out.word.ops.push_back(op);
    out.vertex_of_op.push_back(vertex);
  };

  for (size_t b = 0; b < pd.bags.size(); ++b) {
    const auto& bag = pd.bags[b];
    std::set<int> used;
    for (const auto& [v, c] : color_of) used.insert(c);
    std::vector<int> fresh;
    for (int v : bag)
      if (!created[v]) fresh.push_back(v);
    for (int v : fresh) {
      int c = 0;
      while (used.count(c)) ++c;
      used.insert(c);
      color_of[v] = c;
      created[v] = true;
      push(op_node(c, g.label(v)), v);
    }
    for (int v : fresh) {
      for (int nm = 0; nm < names; ++nm) {
        int u = g.in_neighbor(v, nm);
        if (u >= 0 && color_of.count(u) && !added.count({nm, u, v})) {
          added.insert({nm, u, v});
          push(op_add(nm, color_of[u], color_of[v]), -1);
        }
        int w = g.out_neighbor(v, nm);
        if (w >= 0 && color_of.count(w) && !added.count({nm, v, w})) {
          added.insert({nm, v, w});
          push(op_add(nm, color_of[v], color_of[w]), -1);
        }
      }
    }
    // forget colors of vertices absent from the next bag, low colors first
    std::vector<std::pair<int, int>> drop;  // (color, vertex)
    for (const auto& [v, c] : color_of) {
      bool keep = false;
      if (b + 1 < pd.bags.size())
        keep = std::binary_search(pd.bags[b + 1].begin(), pd.bags[b + 1].end(), v);
      if (!keep) drop.push_back({c, v});
    }
    std::sort(drop.begin(), drop.end());
    for (const auto& [c, v] : drop) {
      color_of.erase(v);
      push(op_forget(c), -1);
    }
  }
  return out;
}

PathDecomposition path_decomposition_from_kword(const KWord& w) {
  if (w.ops.empty()) throw ValidationError("empty word has no decomposition");
  WfCheck wf = is_well_formed_kword(w);
  if (!wf.ok)
    throw ValidationError("word is not well-formed at op " + std::to_string(wf.position) +
                          ": " + wf.message);
  SimState st;
  PathDecomposition pd;
  for (size_t i = 0; i < w.ops.size(); ++i) {
    sim_apply(st, w.sig, w.k, w.ops[i], static_cast<int>(i), false);
    std::vector<int> bag;
    for (const auto& [c, v] : st.chi) bag.push_back(v);
    std::sort(bag.begin(), bag.end());
    if (!bag.empty()) pd.bags.push_back(std::move(bag));
  }
  return pd;
}

namespace {

std::vector<int> positions_of(const Graph& g, const std::vector<int>& order) {
  const int n = g.vertex_count();
  if (static_cast<int>(order.size()) != n)
    throw ValidationError("order is not a permutation of the vertex set");
  std::vector<int> pos(n, -1);
  for (int p = 0; p < n; ++p) {
    int v = order[p];
    if (v < 0 || v >= n || pos[v] != -1)
      throw ValidationError("order is not a permutation of the vertex set");
    pos[v] = p;
  }
  return pos;
}

// Last position among a vertex's neighbors, -1 when isolated.
std::vector<int> last_neighbor_position(const Graph& g, const std::vector<int>& pos) {
  auto adj = g.undirected_adjacency();
  std::vector<int> out(g.vertex_count(), -1);
  for (int v = 0; v < g.vertex_count(); ++v)
    for (int u : adj[v]) out[v] = std::max(out[v], pos[u]);
  return out;
}

}  // namespace

bool check_k_bounded(const Graph& g, const std::vector<int>& order, int k) {
  auto pos = positions_of(g, order);
  auto lastnbr = last_neighbor_position(g, pos);
  const int n = g.vertex_count();
  for (int p = 0; p < n; ++p) {
    int pending = 0;
    for (int u = 0; u < n; ++u)
      if (pos[u] <= p && lastnbr[u] > p) ++pending;
    if (pending > k) return false;
  }
  return true;
}

KWordBuild kword_from_linearization(const Graph& g, const std::vector<int>& order) {
  auto pos = positions_of(g, order);
  auto lastnbr = last_neighbor_position(g, pos);
  const int n = g.vertex_count();

  int k = 0;
  for (int p = 0; p < n; ++p) {
    int pending = 0;
    for (int u = 0; u < n; ++u)
      if (pos[u] <= p && lastnbr[u] > p) ++pending;
    k = std::max(k, pending);
  }

  KWordBuild out;
  out.word.sig = g.signature();
  out.word.k = k;
  const int names = static_cast<int>(g.signature().gamma.size());
  std::map<int, int> color_of;  // vertex -> color
  std::set<int> used;

  auto push = [&](const TermOp& op, int vertex) {
    out.word.ops.push_back(op);
    out.vertex_of_op.push_back(vertex);
  };

  for (int p = 0; p < n; ++p) {
    int v = order[p];
    int c = 0;
    while (used.count(c)) ++c;
    if (c > k) throw ResourceError("color pool exhausted; order is not k-bounded");
    used.insert(c);
    color_of[v] = c;
    push(op_node(c, g.label(v)), v);
    for (int nm = 0; nm < names; ++nm) {
      int u = g.in_neighbor(v, nm);
      if (u >= 0 && pos[u] < p) push(op_add(nm, color_of[u], c), -1);
      int w = g.out_neighbor(v, nm);
      if (w >= 0 && pos[w] < p) push(op_add(nm, c, color_of[w]), -1);
    }
    // release completed vertices, low colors first
    std::vector<std::pair<int, int>> drop;
    for (const auto& [x, cx] : color_of)
      if (lastnbr[x] <= p) drop.push_back({cx, x});
    std::sort(drop.begin(), drop.end());
    for (const auto& [cx, x] : drop) {
      color_of.erase(x);
      used.erase(cx);
      push(op_forget(cx), -1);
    }
  }
  return out;
}

KttBuild ktt_from_tree_decomposition(const Graph& g, const TreeDecomposition& td) {
  const int k = validate_tree_decomposition(g, td);
  const int m = static_cast<int>(td.nodes.size());
  const int n = g.vertex_count();

  std::vector<int> parent(m, -1), depth(m, 0);
  {
    std::vector<int> stack{td.root};
    while (!stack.empty()) {
      int t = stack.back();
      stack.pop_back();
      for (int c : td.nodes[t].children) {
        parent[c] = t;
        depth[c] = depth[t] + 1;
        stack.push_back(c);
      }
    }
  }
  auto in_bag = [&](int t, int v) {
    return std::binary_search(td.nodes[t].bag.begin(), td.nodes[t].bag.end(), v);
  };

  // Shallowest node containing each vertex.
  std::vector<int> first_node(n, -1);
  for (int t = 0; t < m; ++t)
    for (int v : td.nodes[t].bag)
      if (parent[t] == -1 || !in_bag(parent[t], v)) first_node[v] = t;

  // Global colors: distinct within every bag. Assign top-down so shared bag
  // members are already colored when a vertex first appears.
  std::vector<int> color(n, -1);
  {
    std::vector<int> stack{td.root};
    while (!stack.empty()) {
      int t = stack.back();
      stack.pop_back();
      std::set<int> used;
      for (int v : td.nodes[t].bag)
        if (color[v] >= 0) used.insert(color[v]);
      for (int v : td.nodes[t].bag) {
        if (color[v] >= 0) continue;
        int c = 0;
        while (used.count(c)) ++c;
        color[v] = c;
        used.insert(c);
      }
      for (auto it = td.nodes[t].children.rbegin(); it != td.nodes[t].children.rend(); ++it)
        stack.push_back(*it);
    }
  }

  // Each edge is added at the shallowest node containing both endpoints,
  // which is the deeper of the endpoints' first nodes.
  std::vector<std::vector<EdgeSpec>> edges_at(m);
  for (const auto& e : g.edges()) {
    int fa = first_node[e.src], fb = first_node[e.dst];
    edges_at[depth[fa] >= depth[fb] ? fa : fb].push_back(e);
  }
  for (auto& es : edges_at)
    std::sort(es.begin(), es.end(), [](const EdgeSpec& a, const EdgeSpec& b) {
      return std::tie(a.name, a.src, a.dst) < std::tie(b.name, b.src, b.dst);
    });

  KttBuild out;
  out.term.sig = g.signature();
  out.term.k = k;
  auto leaf = [&](int v) {
    int id = ktt_make_leaf(out.term, color[v], g.label(v));
    out.vertex_of_node.resize(out.term.nodes.size(), -1);
    out.vertex_of_node[id] = v;
    return id;
  };
  auto grow = [&](int id) {
    out.vertex_of_node.resize(out.term.nodes.size(), -1);
    return id;
  };

  // Iterative post-order over decomposition nodes.
  std::vector<int> order;
  {
    std::vector<std::pair<int, bool>> stack{{td.root, false}};
    while (!stack.empty()) {
      auto [t, expanded] = stack.back();
      stack.pop_back();
      if (expanded) {
        order.push_back(t);
        continue;
      }
      stack.push_back({t, true});
      for (auto it = td.nodes[t].children.rbegin(); it != td.nodes[t].children.rend(); ++it)
        stack.push_back({*it, false});
    }
  }

  std::vector<int> term_of(m, -1);
  for (int t : order) {
    std::vector<int> parts;
    for (int c : td.nodes[t].children) {
      int sub = term_of[c];
      for (int v : td.nodes[c].bag)
        if (!in_bag(t, v)) sub = grow(ktt_make_forget(out.term, color[v], sub));
      parts.push_back(sub);
    }
    for (int v : td.nodes[t].bag) {
      bool from_child = false;
      for (int c : td.nodes[t].children) from_child = from_child || in_bag(c, v);
      if (!from_child) parts.push_back(leaf(v));
    }
    int acc = parts.at(0);
    for (size_t i = 1; i < parts.size(); ++i)
      acc = grow(ktt_make_union(out.term, acc, parts[i]));
    for (const auto& e : edges_at[t])
      acc = grow(ktt_make_add(out.term, e.name, color[e.src], color[e.dst], acc));
    term_of[t] = acc;
  }

  int root = term_of[td.root];
  for (int v : td.nodes[td.root].bag) root = grow(ktt_make_forget(out.term, color[v], root));
  out.term.root = root;
  return out;
}

TreeDecomposition heuristic_tree_decomposition(const Graph& g, std::optional<int> target_width) {
  const int n = g.vertex_count();
  if (n == 0) throw ValidationError("the empty graph has no decomposition");

  std::vector<std::set<int>> adj(n);
  for (const auto& e : g.edges()) {
    adj[e.src].insert(e.dst);
    adj[e.dst].insert(e.src);
  }

  std::vector<bool> gone(n, false);
  std::vector<std::vector<int>> bag(n);
  std::vector<int> elim_order;
  std::vector<int> elim_pos(n, -1);

  for (int step = 0; step < n; ++step) {
    // min-fill choice, ties by vertex id
    int best = -1;
    long best_fill = -1;
    for (int v = 0; v < n; ++v) {
      if (gone[v]) continue;
      long fill = 0;
      std::vector<int> nb(adj[v].begin(), adj[v].end());
      for (size_t i = 0; i < nb.size(); ++i)
        for (size_t j = i + 1; j < nb.size(); ++j)
          if (!adj[nb[i]].count(nb[j])) ++fill;
      if (best < 0 || fill < best_fill) {
        best = v;
        best_fill = fill;
      }
    }
    std::vector<int> nb(adj[best].begin(), adj[best].end());
    bag[best] = nb;
    bag[best].push_back(best);
    std::sort(bag[best].begin(), bag[best].end());
    for (size_t i = 0; i < nb.size(); ++i)
      for (size_t j = i + 1; j < nb.size(); ++j) {
        adj[nb[i]].insert(nb[j]);
        adj[nb[j]].insert(nb[i]);
      }
    for (int u : nb) adj[u].erase(best);
    adj[best].clear();
    gone[best] = true;
    elim_pos[best] = step;
    elim_order.push_back(best);
  }

  TreeDecomposition td;
  td.nodes.resize(n);  // one node per eliminated vertex
  for (int v = 0; v < n; ++v) td.nodes[v].bag = bag[v];
  td.root = elim_order.back();
  for (int v = 0; v < n; ++v) {
    if (v == td.root) continue;
    // parent: the earliest-eliminated bag member eliminated after v, or the
    // root for bags with no later member (isolated components).
    int parent = -1;
    for (int u : bag[v])
      if (u != v && elim_pos[u] > elim_pos[v] && (parent < 0 || elim_pos[u] < elim_pos[parent]))
        parent = u;
    if (parent < 0) parent = td.root;
    td.nodes[parent].children.push_back(v);
  }
  int width = validate_tree_decomposition(g, td);
  if (target_width && width > *target_width) {
    std::ostringstream os;
    os << "heuristic decomposition width " << width << " exceeds target " << *target_width;
    throw ResourceError(os.str());
  }
  return td;
}

PathDecomposition path_decomposition_from_order(const Graph& g, const std::vector<int>& order) {
  auto pos = positions_of(g, order);
  auto lastnbr = last_neighbor_position(g, pos);
  const int n = g.vertex_count();
  if (n == 0) throw ValidationError("the empty graph has no decomposition");
  PathDecomposition pd;
  for (int p = 0; p < n; ++p) {
    std::vector<int> bag;
    for (int u = 0; u < n; ++u)
      if (pos[u] <= p && (pos[u] == p || lastnbr[u] >= p)) bag.push_back(u);
    pd.bags.push_back(std::move(bag));
  }
  return pd;
}

PathDecomposition heuristic_path_decomposition(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) throw ValidationError("the empty graph has no decomposition");

  std::vector<std::vector<int>> candidates;
  std::vector<int> identity(n);
  for (int v = 0; v < n; ++v) identity[v] = v;
  candidates.push_back(identity);

  // BFS order over all components
  auto adj = g.undirected_adjacency();
  std::vector<int> bfs;
  std::vector<bool> seen(n, false);
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<int> queue{s};
    seen[s] = true;
    size_t head = 0;
    while (head < queue.size()) {
      int v = queue[head++];
      bfs.push_back(v);
      for (int u : adj[v])
        if (!seen[u]) {
          seen[u] = true;
          queue.push_back(u);
        }
    }
  }
  candidates.push_back(bfs);
  std::vector<int> rbfs(bfs.rbegin(), bfs.rend());
  candidates.push_back(rbfs);

  PathDecomposition best;
  int best_width = -1;
  for (const auto& ord : candidates) {
    PathDecomposition pd = path_decomposition_from_order(g, ord);
    int w = path_decomposition_width(pd);
    if (best_width < 0 || w < best_width) {
      best_width = w;
      best = std::move(pd);
    }
  }
  return best;
}

}  // namespace wts
