#include <doctest.h>

#include <random>

#include "decomp.hpp"
#include "graph.hpp"
#include "support.hpp"

using namespace wts;

namespace {

Signature sig_ab() { return make_signature({"e"}, {"a", "b"}); }

// isomorphism via the recorded correspondence: vertex i of the produced
// graph corresponds to `map[i]` in the reference graph
void check_correspondence(const Graph& produced, const Graph& reference,
                          const std::vector<int>& map) {
  REQUIRE(produced.vertex_count() == reference.vertex_count());
  REQUIRE(produced.edge_count() == reference.edge_count());
  std::vector<bool> hit(reference.vertex_count(), false);
  for (int v = 0; v < produced.vertex_count(); ++v) {
    REQUIRE(map[v] >= 0);
    CHECK_FALSE(hit[map[v]]);
    hit[map[v]] = true;
    CHECK(produced.label_name(v) == reference.label_name(map[v]));
  }
  for (const auto& e : produced.edges()) {
    const std::string& name = produced.signature().gamma[e.name];
    int nm = reference.signature().name_index(name);
    CHECK(reference.out_neighbor(map[e.src], nm) == map[e.dst]);
  }
}

std::vector<int> creation_map(const KWordBuild& built, const ColoredGraph& cg,
                              const std::vector<int>& vertex_of_op) {
  std::vector<int> map(cg.graph.vertex_count(), -1);
  for (size_t op = 0; op < built.word.ops.size(); ++op)
    if (vertex_of_op[op] >= 0) map[vertex_of_op[op]] = built.vertex_of_op[op];
  return map;
}

}  // namespace

TEST_CASE("empty word denotes the empty graph") {
  KWord w{sig_ab(), 2, {}};
  ColoredGraph cg = kword_semantics(w);
  CHECK(cg.graph.vertex_count() == 0);
  CHECK(cg.chi.empty());
}

TEST_CASE("a two-vertex word unfolds as written") {
  KWord w{sig_ab(), 1,
          {op_node(0, 0), op_node(1, 1), op_add(0, 0, 1), op_forget(0), op_forget(1)}};
  REQUIRE(is_well_formed_kword(w).ok);
  ColoredGraph cg = kword_semantics(w);
  CHECK(cg.graph.vertex_count() == 2);
  CHECK(cg.graph.label_name(0) == "a");
  CHECK(cg.graph.label_name(1) == "b");
  CHECK(cg.graph.out_neighbor(0, 0) == 1);
  CHECK(cg.chi.empty());
}

TEST_CASE("well-formedness violations carry the first offending position") {
  KWord reuse{sig_ab(), 1, {op_node(0, 0), op_node(0, 1)}};
  WfCheck c1 = is_well_formed_kword(reuse);
  CHECK_FALSE(c1.ok);
  CHECK(c1.position == 1);

  KWord forget_first{sig_ab(), 1, {op_forget(0)}};
  WfCheck c2 = is_well_formed_kword(forget_first);
  CHECK_FALSE(c2.ok);
  CHECK(c2.position == 0);

  KWord dup{sig_ab(), 1,
            {op_node(0, 0), op_node(1, 1), op_add(0, 0, 1), op_add(0, 0, 1)}};
  WfCheck c3 = is_well_formed_kword(dup);
  CHECK_FALSE(c3.ok);
  CHECK(c3.position == 3);
}

TEST_CASE("degree violations are semantic errors, not wf violations") {
  Signature sig = make_signature({"e"}, {"a"});
  KWord w{sig, 2,
          {op_node(0, 0), op_node(1, 0), op_node(2, 0), op_add(0, 0, 1), op_add(0, 0, 2)}};
  CHECK(is_well_formed_kword(w).ok);
  CHECK_THROWS_AS(kword_semantics(w), ValidationError);
}

TEST_CASE("path decomposition validation") {
  Signature sig = make_signature({"e"}, {"a"});
  Graph path = build_graph(sig, {"a", "a", "a"}, {{"e", 0, 1}, {"e", 1, 2}});
  CHECK(validate_path_decomposition(path, {{{0, 1}, {1, 2}}}) == 1);
  CHECK_THROWS_WITH_AS(validate_path_decomposition(path, {{{0, 1}, {2}}}),
                       doctest::Contains("condition 2"), ValidationError);
  Graph loose = build_graph(sig, {"a", "a", "a", "a"}, {{"e", 0, 1}});
  CHECK_THROWS_WITH_AS(validate_path_decomposition(loose, {{{0, 1}, {2}, {0, 3}}}),
                       doctest::Contains("condition 3"), ValidationError);
}

TEST_CASE("word construction from a path decomposition") {
  Signature sig = make_signature({"e"}, {"a", "b"});
  Graph path = build_graph(sig, {"a", "b", "a"}, {{"e", 0, 1}, {"e", 1, 2}});
  PathDecomposition pd{{{0, 1}, {1, 2}}};
  KWordBuild built = kword_from_path_decomposition(path, pd);
  CHECK(built.word.k == 1);
  REQUIRE(is_well_formed_kword(built.word).ok);
  std::vector<int> vertex_of_op;
  ColoredGraph cg = kword_semantics(built.word, &vertex_of_op);
  CHECK(cg.chi.empty());
  check_correspondence(cg.graph, path, creation_map(built, cg, vertex_of_op));
}

TEST_CASE("single vertex becomes node then forget") {
  Signature sig = make_signature({"e"}, {"a"});
  Graph g = build_graph(sig, {"a"}, std::vector<std::tuple<std::string, int, int>>{});
  KWordBuild built = kword_from_path_decomposition(g, {{{0}}});
  REQUIRE(built.word.ops.size() == 2);
  CHECK(built.word.ops[0].kind == TermOp::Kind::Node);
  CHECK(built.word.ops[1].kind == TermOp::Kind::Forget);
}

TEST_CASE("3x3 grid with row-sweep bags of size 4") {
  std::vector<std::vector<std::string>> labels(3, std::vector<std::string>(3, "1"));
  Graph g = grid_graph(3, 3, labels);
  // bags: row i plus the first vertex of row i+1, shifted cell by cell
  PathDecomposition pd;
  std::vector<int> window;
  for (int v = 0; v < 9; ++v) {
    window.push_back(v);
    if (window.size() == 4) {
      pd.bags.push_back(window);
      window.erase(window.begin());
    }
  }
  int width = validate_path_decomposition(g, pd);
  CHECK(width == 3);
  KWordBuild built = kword_from_path_decomposition(g, pd);
  std::vector<int> vertex_of_op;
  ColoredGraph cg = kword_semantics(built.word, &vertex_of_op);
  check_correspondence(cg.graph, g, creation_map(built, cg, vertex_of_op));
}

TEST_CASE("bags after prefixes of a word") {
  KWord w{sig_ab(), 1, {op_node(0, 0)}};
  PathDecomposition pd = path_decomposition_from_kword(w);
  REQUIRE(pd.bags.size() == 1);
  CHECK(pd.bags[0] == std::vector<int>{0});

  KWord two{sig_ab(), 1,
            {op_node(0, 0), op_node(1, 1), op_add(0, 0, 1), op_forget(0), op_forget(1)}};
  PathDecomposition pd2 = path_decomposition_from_kword(two);
  std::vector<size_t> sizes;
  for (const auto& b : pd2.bags) sizes.push_back(b.size());
  CHECK(sizes == std::vector<size_t>{1, 2, 2, 1});
  ColoredGraph cg = kword_semantics(two);
  CHECK(validate_path_decomposition(cg.graph, pd2) <= 1);
}

TEST_CASE("random words round-trip through decompositions") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 25; ++trial) {
    KWord w = wts::testing::random_kword(rng, sig_ab(), 3, 6);
    REQUIRE(is_well_formed_kword(w).ok);
    ColoredGraph cg = kword_semantics(w);
    if (cg.graph.vertex_count() == 0) continue;
    PathDecomposition pd = path_decomposition_from_kword(w);
    CHECK(validate_path_decomposition(cg.graph, pd) <= 3);

    KWordBuild rebuilt = kword_from_path_decomposition(cg.graph, pd);
    REQUIRE(is_well_formed_kword(rebuilt.word).ok);
    std::vector<int> vertex_of_op;
    ColoredGraph cg2 = kword_semantics(rebuilt.word, &vertex_of_op);
    CHECK(cg2.chi.empty());
    check_correspondence(cg2.graph, cg.graph, creation_map(rebuilt, cg2, vertex_of_op));
  }
}

TEST_CASE("existential boundedness of orders") {
  Signature sig = make_signature({"e"}, {"a"});
  Graph word = build_graph(sig, {"a", "a", "a", "a"}, {{"e", 0, 1}, {"e", 1, 2}, {"e", 2, 3}});
  CHECK(check_k_bounded(word, {0, 1, 2, 3}, 1));

  std::vector<std::vector<std::string>> labels(3, std::vector<std::string>(4, "1"));
  Graph grid = grid_graph(3, 4, labels);
  std::vector<int> row_major(12);
  for (int v = 0; v < 12; ++v) row_major[v] = v;
  CHECK(check_k_bounded(grid, row_major, 4));

  std::vector<std::vector<std::string>> labels33(3, std::vector<std::string>(3, "1"));
  Graph grid33 = grid_graph(3, 3, labels33);
  std::vector<int> rm(9);
  for (int v = 0; v < 9; ++v) rm[v] = v;
  CHECK(check_k_bounded(grid33, rm, 3));
  CHECK_FALSE(check_k_bounded(grid33, rm, 2));

  CHECK_THROWS_AS(check_k_bounded(word, {0, 0, 1, 2}, 1), ValidationError);
}

TEST_CASE("word construction from a linearization") {
  Signature sig = make_signature({"e"}, {"a"});
  Graph word = build_graph(sig, {"a", "a", "a"}, {{"e", 0, 1}, {"e", 1, 2}});
  KWordBuild built = kword_from_linearization(word, {0, 1, 2});
  CHECK(built.word.k == 1);
  std::vector<int> vertex_of_op;
  ColoredGraph cg = kword_semantics(built.word, &vertex_of_op);
  check_correspondence(cg.graph, word, creation_map(built, cg, vertex_of_op));

  std::vector<std::vector<std::string>> labels(2, std::vector<std::string>(4, "1"));
  Graph grid = grid_graph(2, 4, labels);
  std::vector<int> row_major(8);
  for (int v = 0; v < 8; ++v) row_major[v] = v;
  KWordBuild gw = kword_from_linearization(grid, row_major);
  CHECK(gw.word.k == 2);
  std::vector<int> vo;
  ColoredGraph gcg = kword_semantics(gw.word, &vo);
  check_correspondence(gcg.graph, grid, creation_map(gw, gcg, vo));

  // triangular grid with its bottom-up sweep
  Graph tri = triangular_grid(wts::testing::sample_graph_adjacency());
  KWordBuild tw = kword_from_linearization(tri, wts::testing::triangular_sweep_order(5));
  REQUIRE(is_well_formed_kword(tw.word).ok);
  std::vector<int> tvo;
  ColoredGraph tcg = kword_semantics(tw.word, &tvo);
  check_correspondence(tcg.graph, tri, creation_map(tw, tcg, tvo));
}

TEST_CASE("linearization coherence on random graphs") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 20; ++trial) {
    KWord w = wts::testing::random_kword(rng, sig_ab(), 3, 7);
    Graph g = kword_semantics(w).graph;
    if (g.vertex_count() == 0) continue;
    std::vector<int> order(g.vertex_count());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::shuffle(order.begin(), order.end(), rng);
    KWordBuild built = kword_from_linearization(g, order);
    CHECK(check_k_bounded(g, order, built.word.k));
    CHECK_FALSE(check_k_bounded(g, order, built.word.k - 1));
    REQUIRE(is_well_formed_kword(built.word).ok);
    std::vector<int> vo;
    ColoredGraph cg = kword_semantics(built.word, &vo);
    check_correspondence(cg.graph, g, creation_map(built, cg, vo));
  }
}

TEST_CASE("tree term semantics") {
  KTreeTerm leaf;
  leaf.sig = sig_ab();
  leaf.k = 1;
  leaf.root = ktt_make_leaf(leaf, 0, 0);
  ColoredGraph cg = ktt_semantics(leaf);
  CHECK(cg.graph.vertex_count() == 1);
  CHECK(cg.chi.at(0) == 0);

  KTreeTerm t;
  t.sig = sig_ab();
  t.k = 1;
  int a = ktt_make_leaf(t, 0, 0);
  int b = ktt_make_leaf(t, 1, 1);
  int u = ktt_make_union(t, a, b);
  int add = ktt_make_add(t, 0, 0, 1, u);
  t.root = ktt_make_forget(t, 0, add);
  REQUIRE(is_well_formed_ktt(t).ok);
  ColoredGraph cg2 = ktt_semantics(t);
  CHECK(cg2.graph.vertex_count() == 2);
  CHECK(cg2.graph.out_neighbor(0, 0) == 1);
  CHECK(cg2.chi.size() == 1);
  CHECK(cg2.chi.count(1) == 1);
}

TEST_CASE("union label clash is rejected") {
  KTreeTerm t;
  t.sig = sig_ab();
  t.k = 1;
  int a = ktt_make_leaf(t, 0, 0);
  int b = ktt_make_leaf(t, 0, 1);
  t.root = ktt_make_union(t, a, b);
  WfCheck wf = is_well_formed_ktt(t);
  CHECK_FALSE(wf.ok);
  CHECK_THROWS_AS(ktt_semantics(t), ValidationError);
}

TEST_CASE("tree term wf violations") {
  KTreeTerm ok;
  ok.sig = sig_ab();
  ok.k = 0;
  ok.root = ktt_make_forget(ok, 0, ktt_make_leaf(ok, 0, 0));
  CHECK(is_well_formed_ktt(ok).ok);

  KTreeTerm inactive;
  inactive.sig = sig_ab();
  inactive.k = 1;
  inactive.root = ktt_make_add(inactive, 0, 0, 1, ktt_make_leaf(inactive, 0, 0));
  CHECK_FALSE(is_well_formed_ktt(inactive).ok);

  // the same edge added in both operands of a union
  KTreeTerm dup;
  dup.sig = sig_ab();
  dup.k = 1;
  auto branch = [&](KTreeTerm& t) {
    int x = ktt_make_leaf(t, 0, 0);
    int y = ktt_make_leaf(t, 1, 0);
    return ktt_make_add(t, 0, 0, 1, ktt_make_union(t, x, y));
  };
  int left = branch(dup);
  int right = branch(dup);
  dup.root = ktt_make_union(dup, left, right);
  WfCheck wf = is_well_formed_ktt(dup);
  CHECK_FALSE(wf.ok);
  CHECK(wf.position == dup.root);
}

TEST_CASE("tree decomposition validation") {
  Signature sig = make_signature({"e"}, {"a"});
  Graph path = build_graph(sig, {"a", "a", "a"}, {{"e", 0, 1}, {"e", 1, 2}});

  TreeDecomposition single;
  single.nodes.push_back({{0, 1, 2}, {}});
  single.root = 0;
  CHECK(validate_tree_decomposition(path, single) == 2);

  TreeDecomposition missing;
  missing.nodes.push_back({{0, 1}, {1}});
  missing.nodes.push_back({{2}, {}});
  missing.root = 0;
  CHECK_THROWS_WITH_AS(validate_tree_decomposition(path, missing),
                       doctest::Contains("condition 2"), ValidationError);

  Graph loose = build_graph(sig, {"a", "a", "a"}, {{"e", 0, 1}, {"e", 1, 2}});
  TreeDecomposition gap;
  gap.nodes.push_back({{0, 1}, {1}});
  gap.nodes.push_back({{1, 2}, {2}});
  gap.nodes.push_back({{0, 2}, {}});
  gap.root = 0;
  CHECK_THROWS_WITH_AS(validate_tree_decomposition(loose, gap), doctest::Contains("condition 3"),
                       ValidationError);
}

TEST_CASE("terms from tree decompositions reproduce the graph") {
  // degenerate chain equals the word route
  Signature sig = make_signature({"e"}, {"a", "b"});
  Graph path = build_graph(sig, {"a", "b", "a"}, {{"e", 0, 1}, {"e", 1, 2}});
  PathDecomposition pd{{{0, 1}, {1, 2}}};
  TreeDecomposition chain = wts::testing::chain_tree_decomposition(pd);
  KttBuild built = ktt_from_tree_decomposition(path, chain);
  REQUIRE(is_well_formed_ktt(built.term).ok);
  std::vector<int> vertex_of_leaf;
  ColoredGraph cg = ktt_semantics(built.term, &vertex_of_leaf);
  CHECK(cg.chi.empty());
  std::vector<int> map(cg.graph.vertex_count(), -1);
  for (size_t id = 0; id < built.term.nodes.size(); ++id)
    if (vertex_of_leaf[id] >= 0) map[vertex_of_leaf[id]] = built.vertex_of_node[id];
  check_correspondence(cg.graph, path, map);

  // binary tree graph with its natural width-1 decomposition
  Signature tsig = make_signature({"left", "right"}, {"a"});
  Graph tree = build_graph(
      tsig, {"a", "a", "a", "a", "a", "a", "a"},
      {{"left", 0, 1}, {"right", 0, 2}, {"left", 1, 3}, {"right", 1, 4}, {"left", 2, 5},
       {"right", 2, 6}});
  TreeDecomposition td;
  td.nodes.resize(7);
  td.nodes[0] = {{0}, {1, 2}};
  td.nodes[1] = {{0, 1}, {3, 4}};
  td.nodes[2] = {{0, 2}, {5, 6}};
  td.nodes[3] = {{1, 3}, {}};
  td.nodes[4] = {{1, 4}, {}};
  td.nodes[5] = {{2, 5}, {}};
  td.nodes[6] = {{2, 6}, {}};
  td.root = 0;
  CHECK(validate_tree_decomposition(tree, td) == 1);
  KttBuild tb = ktt_from_tree_decomposition(tree, td);
  REQUIRE(is_well_formed_ktt(tb.term).ok);
  std::vector<int> vol;
  ColoredGraph tcg = ktt_semantics(tb.term, &vol);
  std::vector<int> tmap(tcg.graph.vertex_count(), -1);
  for (size_t id = 0; id < tb.term.nodes.size(); ++id)
    if (vol[id] >= 0) tmap[vol[id]] = tb.vertex_of_node[id];
  check_correspondence(tcg.graph, tree, tmap);
}

TEST_CASE("nested-word-like graph through a width-2 decomposition") {
  Signature sig = make_signature({"succ", "match"}, {"a"});
  Graph g = build_graph(sig, std::vector<std::string>(6, "a"),
                        {{"succ", 0, 1},
                         {"succ", 1, 2},
                         {"succ", 2, 3},
                         {"succ", 3, 4},
                         {"succ", 4, 5},
                         {"match", 0, 5},
                         {"match", 1, 4},
                         {"match", 2, 3}});
  PathDecomposition pd{{{0, 1, 5}, {1, 4, 5}, {1, 2, 4}, {2, 3, 4}}};
  CHECK(validate_path_decomposition(g, pd) == 2);
  TreeDecomposition td = wts::testing::chain_tree_decomposition(pd);
  KttBuild built = ktt_from_tree_decomposition(g, td);
  CHECK(built.term.k == 2);
  std::vector<int> vol;
  ColoredGraph cg = ktt_semantics(built.term, &vol);
  std::vector<int> map(cg.graph.vertex_count(), -1);
  for (size_t id = 0; id < built.term.nodes.size(); ++id)
    if (vol[id] >= 0) map[vol[id]] = built.vertex_of_node[id];
  check_correspondence(cg.graph, g, map);
}

TEST_CASE("terms from genuinely branching decompositions") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    KWord w = wts::testing::random_kword(rng, sig_ab(), 3, 7);
    Graph g = kword_semantics(w).graph;
    if (g.vertex_count() == 0) continue;
    TreeDecomposition td = heuristic_tree_decomposition(g);
    KttBuild built = ktt_from_tree_decomposition(g, td);
    REQUIRE(is_well_formed_ktt(built.term).ok);
    std::vector<int> vol;
    ColoredGraph cg = ktt_semantics(built.term, &vol);
    CHECK(cg.chi.empty());
    std::vector<int> map(cg.graph.vertex_count(), -1);
    for (size_t id = 0; id < built.term.nodes.size(); ++id)
      if (vol[id] >= 0) map[vol[id]] = built.vertex_of_node[id];
    check_correspondence(cg.graph, g, map);
  }
}

TEST_CASE("min-fill widths on known shapes") {
  Signature sig = make_signature({"e"}, {"a"});
  Graph word = build_graph(sig, std::vector<std::string>(5, "a"),
                           {{"e", 0, 1}, {"e", 1, 2}, {"e", 2, 3}, {"e", 3, 4}});
  CHECK(tree_decomposition_width(heuristic_tree_decomposition(word)) == 1);

  Graph cycle = build_graph(
      sig, std::vector<std::string>(6, "a"),
      {{"e", 0, 1}, {"e", 1, 2}, {"e", 2, 3}, {"e", 3, 4}, {"e", 4, 5}, {"e", 5, 0}});
  CHECK(tree_decomposition_width(heuristic_tree_decomposition(cycle)) == 2);

  std::vector<std::vector<std::string>> labels(4, std::vector<std::string>(4, "1"));
  Graph grid = grid_graph(4, 4, labels);
  TreeDecomposition td = heuristic_tree_decomposition(grid);
  CHECK(validate_tree_decomposition(grid, td) <= 4);

  CHECK_THROWS_AS(heuristic_tree_decomposition(cycle, 1), ResourceError);
}

TEST_CASE("single-leaf terms agree with the word fold") {
  Signature sig = sig_ab();
  KTreeTerm t;
  t.sig = sig;
  t.k = 1;
  t.root = ktt_make_forget(t, 0, ktt_make_leaf(t, 0, 1));
  ColoredGraph via_term = ktt_semantics(t);
  KWord w{sig, 1, {op_node(0, 1), op_forget(0)}};
  ColoredGraph via_word = kword_semantics(w);
  CHECK(via_term.graph.vertex_count() == via_word.graph.vertex_count());
  CHECK(via_term.graph.label_name(0) == via_word.graph.label_name(0));
  CHECK(via_term.chi == via_word.chi);
}
