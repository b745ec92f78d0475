#include "support.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "rng.hpp"

namespace wts::testing {

std::vector<std::vector<bool>> sample_graph_adjacency() {
  // A=0, B=1, C=2, D=3, E=4
  std::vector<std::pair<int, int>> edges = {{0, 1}, {1, 2}, {0, 3}, {1, 4},
                                            {0, 4}, {2, 3}, {2, 4}, {1, 3}};
  std::vector<std::vector<bool>> adj(5, std::vector<bool>(5, false));
  for (auto [a, b] : edges) adj[a][b] = adj[b][a] = true;
  return adj;
}

std::vector<std::vector<int>> sample_permanent_matrix() {
  return {{1, 1, 1, 1, 1},
          {0, 1, 0, 0, 0},
          {0, 0, 1, 1, 1},
          {0, 1, 1, 0, 0},
          {0, 0, 0, 1, 0}};
}

std::vector<int> triangular_sweep_order(int n) {
  std::vector<int> order;
  for (int i = n - 1; i >= 0; --i) {
    order.push_back(triangular_vertex(n, i, i));
    for (int j = i + 1; j < n; ++j) order.push_back(triangular_vertex(n, i, j));
  }
  return order;
}

KWord random_kword(std::mt19937_64& rng, const Signature& sig, int k, int max_vertices) {
  KWord w;
  w.sig = sig;
  w.k = k;
  const int names = static_cast<int>(sig.gamma.size());
  const int labels = static_cast<int>(sig.sigma.size());

  struct Active {
    int color;
    int vertex;
  };
  std::vector<Active> active;
  int created = 0;
  std::set<std::tuple<int, int, int>> edges;          // (name, src, dst)
  std::set<std::pair<int, int>> out_used, in_used;    // (vertex, name)

  auto free_color = [&]() {
    std::set<int> used;
    for (const auto& a : active) used.insert(a.color);
    for (int c = 0; c <= k; ++c)
      if (!used.count(c)) return c;
    return -1;
  };

  int steps = 4 * max_vertices + 8;
  while (steps-- > 0) {
    int move = static_cast<int>(rng_below(rng, 10));
    if (move < 5 && created < max_vertices && free_color() >= 0) {
      int c = free_color();
      w.ops.push_back(op_node(c, static_cast<int>(rng_below(rng, labels))));
      active.push_back({c, created++});
      continue;
    }
    if (move < 8 && active.size() >= 2) {
      // a few attempts at a legal fresh edge
      for (int attempt = 0; attempt < 6; ++attempt) {
        const Active& a = active[rng_below(rng, active.size())];
        const Active& b = active[rng_below(rng, active.size())];
        if (a.vertex == b.vertex) continue;
        int nm = static_cast<int>(rng_below(rng, names));
        if (out_used.count({a.vertex, nm}) || in_used.count({b.vertex, nm})) continue;
        if (edges.count({nm, a.vertex, b.vertex})) continue;
        edges.insert({nm, a.vertex, b.vertex});
        out_used.insert({a.vertex, nm});
        in_used.insert({b.vertex, nm});
        w.ops.push_back(op_add(nm, a.color, b.color));
        break;
      }
      continue;
    }
    if (!active.empty()) {
      size_t pick = rng_below(rng, active.size());
      w.ops.push_back(op_forget(active[pick].color));
      active.erase(active.begin() + static_cast<long>(pick));
    }
  }
  // close out: forget everything still active, low colors first
  std::sort(active.begin(), active.end(),
            [](const Active& a, const Active& b) { return a.color < b.color; });
  for (const auto& a : active) w.ops.push_back(op_forget(a.color));
  return w;
}

TilingSystem random_system(std::mt19937_64& rng, const Graph& g, SemiringId semiring,
                           int num_states) {
  std::vector<std::string> states;
  for (int q = 0; q < num_states; ++q) states.push_back("q" + std::to_string(q));
  TilingSystem ts(g.signature(), semiring, states);
  const Semiring& s = ts.semiring();

  std::set<Tile> tiles;
  // tiles from random labelings, so at least one run exists
  int labelings = 2 + static_cast<int>(rng_below(rng, 3));
  for (int t = 0; t < labelings; ++t) {
    Labeling rho(g.vertex_count());
    for (auto& q : rho) q = static_cast<int>(rng_below(rng, num_states));
    for (int v = 0; v < g.vertex_count(); ++v) tiles.insert(tile_of(g, rho, v));
  }
  // noise tiles: mutate existing ones
  std::vector<Tile> base(tiles.begin(), tiles.end());
  for (size_t t = 0; t < base.size() && t < 6; ++t) {
    Tile mutant = base[rng_below(rng, base.size())];
    mutant.state = static_cast<int>(rng_below(rng, num_states));
    if (!mutant.fin.empty())
      mutant.fin[rng_below(rng, mutant.fin.size())].second =
          static_cast<int>(rng_below(rng, num_states));
    tiles.insert(mutant);
  }
  for (const Tile& t : tiles) {
    // occasional explicit zero weights
    Weight w = rng_chance(rng, 1, 6) ? s.zero() : s.random(rng, 5);
    ts.add_tile(t, w);
  }
  return ts;
}

TreeDecomposition chain_tree_decomposition(const PathDecomposition& pd) {
  TreeDecomposition td;
  td.nodes.resize(pd.bags.size());
  for (size_t i = 0; i < pd.bags.size(); ++i) {
    td.nodes[i].bag = pd.bags[i];
    if (i + 1 < pd.bags.size()) td.nodes[i].children.push_back(static_cast<int>(i) + 1);
  }
  td.root = 0;
  return td;
}

RandomInstance random_instance(std::uint64_t seed, SemiringId semiring, int max_vertices,
                               int num_states, int k) {
  std::mt19937_64 rng(seed);
  Signature sig = make_signature({"e", "f"}, {"a", "b"});
  Graph g;
  KWord word;
  for (;;) {
    word = random_kword(rng, sig, k, max_vertices);
    g = kword_semantics(word).graph;
    if (g.vertex_count() >= 1) break;
  }
  PathDecomposition pd = path_decomposition_from_kword(word);
  TreeDecomposition td = chain_tree_decomposition(pd);
  TilingSystem ts = random_system(rng, g, semiring, num_states);
  return {std::move(ts), std::move(g), std::move(pd), std::move(td)};
}

Weight enumerate_word_runs(const WeightedWordAutomaton& b, const std::vector<std::string>& word) {
  const Semiring& s = b.semiring;
  std::vector<int> letters;
  for (const auto& l : word) letters.push_back(b.letter_index(l));
  Weight total = s.zero();
  std::set<int> final_set(b.final_states.begin(), b.final_states.end());

  // depth-first over all runs
  struct Frame {
    int state;
    Weight acc;
    size_t pos;
  };
  std::vector<Frame> stack;
  for (int q : b.initial) stack.push_back({q, s.one(), 0});
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    if (f.pos == letters.size()) {
      if (final_set.count(f.state)) total = s.add(total, f.acc);
      continue;
    }
    auto it = b.transitions.find({f.state, letters[f.pos]});
    if (it == b.transitions.end()) continue;
    for (const auto& [to, w] : it->second) stack.push_back({to, s.mul(f.acc, w), f.pos + 1});
  }
  return total;
}

Weight enumerate_tree_runs(const WeightedTreeAutomaton& b, const TermTree& term) {
  const Semiring& s = b.semiring;
  const int nq = static_cast<int>(b.states.size());
  const int nodes = static_cast<int>(term.nodes.size());

  // enumerate every state assignment to every node
  std::vector<int> assign(nodes, 0);
  Weight total = s.zero();
  std::set<int> final_set(b.final_states.begin(), b.final_states.end());
  for (;;) {
    bool valid = true;
    Weight w = s.one();
    for (int id = 0; id < nodes && valid; ++id) {
      const auto& n = term.nodes[id];
      int l = b.letter_index(n.letter);
      int q = assign[id];
      const std::vector<std::pair<int, Weight>>* list = nullptr;
      switch (n.children.size()) {
        case 0: {
          auto it = b.leaf_transitions.find(l);
          if (it != b.leaf_transitions.end()) list = &it->second;
          break;
        }
        case 1: {
          auto it = b.unary_transitions.find({l, assign[n.children[0]]});
          if (it != b.unary_transitions.end()) list = &it->second;
          break;
        }
        case 2: {
          auto it = b.binary_transitions.find({l, assign[n.children[0]], assign[n.children[1]]});
          if (it != b.binary_transitions.end()) list = &it->second;
          break;
        }
      }
      bool found = false;
      if (list)
        for (const auto& [to, tw] : *list)
          if (to == q) {
            w = s.mul(w, tw);
            found = true;
            break;
          }
      valid = found;
    }
    if (valid && final_set.count(assign[term.root])) total = s.add(total, w);
    int pos = 0;
    while (pos < nodes) {
      if (++assign[pos] < nq) break;
      assign[pos] = 0;
      ++pos;
    }
    if (pos == nodes) break;
  }
  return total;
}

WeightedTreeAutomaton random_tree_automaton(std::mt19937_64& rng, SemiringId semiring,
                                            int num_states) {
  WeightedTreeAutomaton b;
  b.semiring = Semiring(semiring);
  for (int q = 0; q < num_states; ++q) b.states.push_back("s" + std::to_string(q));
  b.alphabet = {{"a", 0}, {"b", 0}, {"u", 1}, {"v", 1}, {"m", 2}};
  const Semiring& s = b.semiring;
  for (int l = 0; l < 2; ++l)
    for (int q = 0; q < num_states; ++q)
      if (rng_chance(rng, 2, 3)) b.leaf_transitions[l].push_back({q, s.random(rng, 4)});
  for (int l = 2; l < 4; ++l)
    for (int q1 = 0; q1 < num_states; ++q1)
      for (int q = 0; q < num_states; ++q)
        if (rng_chance(rng, 1, 2)) b.unary_transitions[{l, q1}].push_back({q, s.random(rng, 4)});
  for (int q1 = 0; q1 < num_states; ++q1)
    for (int q2 = 0; q2 < num_states; ++q2)
      for (int q = 0; q < num_states; ++q)
        if (rng_chance(rng, 1, 3))
          b.binary_transitions[{4, q1, q2}].push_back({q, s.random(rng, 4)});
  for (int q = 0; q < num_states; ++q)
    if (rng_chance(rng, 1, 2)) b.final_states.push_back(q);
  if (b.final_states.empty()) b.final_states.push_back(0);
  return b;
}

TermTree random_term_tree(std::mt19937_64& rng, const WeightedTreeAutomaton& b, int max_nodes) {
  TermTree t;
  // grow top-down within the node budget
  struct Builder {
    std::mt19937_64& rng;
    const WeightedTreeAutomaton& b;
    TermTree& t;
    int budget;
    int build() {
      std::vector<int> options;  // letter indices feasible within the budget
      for (size_t l = 0; l < b.alphabet.size(); ++l) {
        int need = 1 + b.alphabet[l].second;  // rough lower bound on nodes
        if (need <= budget) options.push_back(static_cast<int>(l));
      }
      int l = options[rng_below(rng, options.size())];
      int arity = b.alphabet[l].second;
      budget -= 1;
      TermTree::Node node;
      node.letter = b.alphabet[l].first;
      for (int c = 0; c < arity; ++c) node.children.push_back(build());
      t.nodes.push_back(node);
      return static_cast<int>(t.nodes.size()) - 1;
    }
  };
  Builder builder{rng, b, t, std::max(1, max_nodes)};
  t.root = builder.build();
  return t;
}

wts::Cnf random_cnf(std::mt19937_64& rng, int vars, int clauses) {
  Cnf cnf;
  cnf.num_vars = vars;
  for (int c = 0; c < clauses; ++c) {
    int len = static_cast<int>(rng_range(rng, 1, 3));
    std::vector<int> clause;
    for (int l = 0; l < len; ++l) {
      int var = static_cast<int>(rng_range(rng, 1, vars));
      int lit = rng_bool(rng) ? var : -var;
      bool tautology = false;
      for (int existing : clause) tautology = tautology || existing == -lit;
      if (!tautology) clause.push_back(lit);
    }
    cnf.clauses.push_back(std::move(clause));
  }
  return cnf;
}

std::vector<std::vector<bool>> random_adjacency(std::mt19937_64& rng, int n) {
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) adj[i][j] = adj[j][i] = rng_bool(rng);
  return adj;
}

std::vector<std::vector<int>> random_01_matrix(std::mt19937_64& rng, int n) {
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
  for (auto& row : m)
    for (auto& cell : row) cell = rng_bool(rng) ? 1 : 0;
  return m;
}

}  // namespace wts::testing
