#include <doctest.h>

#include <algorithm>
#include <random>

#include "generators.hpp"
#include "graph.hpp"
#include "rng.hpp"
#include "support.hpp"
#include "tiling.hpp"

using namespace wts;

namespace {

TilingSystem one_vertex_system(SemiringId id, const std::vector<std::pair<std::string, std::string>>&
                                                  state_weights) {
  Signature sig = make_signature({"e"}, {"a"});
  std::vector<std::string> states;
  for (const auto& [st, w] : state_weights) states.push_back(st);
  TilingSystem ts(sig, id, states);
  for (size_t i = 0; i < state_weights.size(); ++i) {
    Tile t;
    t.state = static_cast<int>(i);
    t.label = 0;
    ts.add_tile(t, ts.semiring().parse(state_weights[i].second));
  }
  return ts;
}

Graph one_vertex_graph() {
  Signature sig = make_signature({"e"}, {"a"});
  return build_graph(sig, {"a"}, std::vector<std::tuple<std::string, int, int>>{});
}

}  // namespace

TEST_CASE("tile_of reads the neighborhood") {
  Signature sig = make_signature({"e"}, {"a", "b"});
  Graph path = build_graph(sig, {"a", "b", "a"}, {{"e", 0, 1}, {"e", 1, 2}});
  Labeling rho = {0, 1, 2};

  Tile isolated = tile_of(one_vertex_graph(), {1}, 0);
  CHECK(isolated.fin.empty());
  CHECK(isolated.fout.empty());
  CHECK(isolated.state == 1);

  Tile mid = tile_of(path, rho, 1);
  CHECK(mid.fin == std::vector<std::pair<int, int>>{{0, 0}});
  CHECK(mid.fout == std::vector<std::pair<int, int>>{{0, 2}});
  CHECK(mid.state == 1);
  CHECK(mid.label == 1);

  Graph grid = grid_graph(3, 3, std::vector<std::vector<std::string>>(
                                    3, std::vector<std::string>(3, "1")));
  Labeling all0(9, 0);
  Tile center = tile_of(grid, all0, grid_vertex(3, 1, 1));
  CHECK(center.in_mask() == 0b11);
  CHECK(center.out_mask() == 0b11);

  CHECK_THROWS_AS(tile_of(path, rho, 5), ValidationError);
}

TEST_CASE("is_run checks listed membership") {
  TilingSystem ts = one_vertex_system(SemiringId::Natural, {{"q", "2"}});
  Graph g = one_vertex_graph();
  CHECK(is_run(ts, g, {0}));

  TilingSystem two = one_vertex_system(SemiringId::Natural, {{"p", "1"}, {"q", "1"}});
  // remove q's tile by building a system listing only p
  TilingSystem only_p(two.signature(), SemiringId::Natural, {"p", "q"});
  Tile t;
  t.state = 0;
  t.label = 0;
  only_p.add_tile(t, Weight::integer(1));
  CHECK(is_run(only_p, g, {0}));
  CHECK_FALSE(is_run(only_p, g, {1}));
}

TEST_CASE("run weights multiply over vertices; empty graph gives one") {
  Signature sig = make_signature({"e"}, {"a"});
  Graph empty = build_graph(sig, std::vector<int>{}, {});
  TilingSystem ts(sig, SemiringId::Natural, {"q"});
  CHECK(run_weight(ts, empty, {}) == Weight::integer(1));
  CHECK(eval_brute(ts, empty) == Weight::integer(1));
}

TEST_CASE("eval_brute sums over runs") {
  TilingSystem ts = one_vertex_system(SemiringId::Natural, {{"q1", "3"}, {"q2", "4"}});
  CHECK(eval_brute(ts, one_vertex_graph()) == Weight::integer(7));
}

TEST_CASE("permanent system on the all-ones 3x3 grid gives 6 by brute force") {
  TilingSystem perm = permanent_wts();
  Graph g = grid_graph(3, 3,
                       std::vector<std::vector<std::string>>(3, std::vector<std::string>(3, "1")));
  CHECK(eval_brute(perm, g) == Weight::integer(6));
}

TEST_CASE("brute-force budget guard refuses oversized spaces") {
  TilingSystem perm = permanent_wts();
  Graph g = grid_graph(4, 4,
                       std::vector<std::vector<std::string>>(4, std::vector<std::string>(4, "1")));
  BruteOptions opts;
  opts.budget = 1000;
  CHECK_THROWS_AS(eval_brute(perm, g, opts), ResourceError);
}

TEST_CASE("clique system by brute force on small triangular grids") {
  std::mt19937_64 rng(11);
  TilingSystem clique = clique_wts();
  for (int trial = 0; trial < 5; ++trial) {
    int n = 2 + static_cast<int>(rng_below(rng, 3));  // up to 4 vertices, 10 grid cells
    auto adj = wts::testing::random_adjacency(rng, n);
    Graph g = triangular_grid(adj);
    Weight got = eval_brute(clique, g);
    CHECK(got == Weight::integer(clique_oracle(adj)));
  }
}

TEST_CASE("product order does not matter (commutativity witness)") {
  std::mt19937_64 rng(5);
  auto inst = wts::testing::random_instance(900, SemiringId::Integer, 6, 3, 2);
  Labeling rho(inst.graph.vertex_count());
  for (int trial = 0; trial < 10; ++trial) {
    for (auto& q : rho) q = static_cast<int>(rng_below(rng, 3));
    Weight reference = run_weight(inst.system, inst.graph, rho);
    std::vector<int> perm(inst.graph.vertex_count());
    for (size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
    std::shuffle(perm.begin(), perm.end(), rng);
    const Semiring& s = inst.system.semiring();
    Weight shuffled = s.one();
    bool run = true;
    for (int v : perm) {
      auto w = inst.system.weight_of(tile_of(inst.graph, rho, v));
      if (!w) {
        run = false;
        break;
      }
      shuffled = s.mul(shuffled, *w);
    }
    if (!run) shuffled = s.zero();
    CHECK(reference == shuffled);
  }
}

TEST_CASE("explicit zero tiles never change the value") {
  auto inst = wts::testing::random_instance(901, SemiringId::Natural, 6, 2, 2);
  Weight before = eval_brute(inst.system, inst.graph);

  // clone the system and list one more tile with weight zero
  TilingSystem extended(inst.system.signature(), inst.system.semiring().id(),
                        inst.system.states());
  for (size_t i = 0; i < inst.system.tiles().size(); ++i)
    extended.add_tile(inst.system.tiles()[i], inst.system.tile_weight(static_cast<int>(i)));
  Tile extra;
  extra.state = 0;
  extra.label = 0;
  extra.fin = {{0, 1}};
  if (!extended.has_tile(extra)) {
    extended.add_tile(extra, extended.semiring().zero());
    CHECK(eval_brute(extended, inst.graph) == before);
  }
}

TEST_CASE("adding a natural tile never decreases the value") {
  auto inst = wts::testing::random_instance(902, SemiringId::Natural, 5, 2, 2);
  Weight before = eval_brute(inst.system, inst.graph);
  TilingSystem extended(inst.system.signature(), inst.system.semiring().id(),
                        inst.system.states());
  for (size_t i = 0; i < inst.system.tiles().size(); ++i)
    extended.add_tile(inst.system.tiles()[i], inst.system.tile_weight(static_cast<int>(i)));
  Tile extra;
  extra.state = 1;
  extra.label = 1;
  if (!extended.has_tile(extra)) {
    extended.add_tile(extra, Weight::integer(3));
    Weight after = eval_brute(extended, inst.graph);
    CHECK(after.as_integer() >= before.as_integer());
  }
}

TEST_CASE("boolean evaluation is run existence") {
  for (std::uint64_t seed : {903u, 904u, 905u}) {
    auto inst = wts::testing::random_instance(seed, SemiringId::Boolean, 5, 2, 2);
    Weight val = eval_brute(inst.system, inst.graph);

    bool exists = false;
    Labeling rho(inst.graph.vertex_count(), 0);
    const int q = inst.system.state_count();
    for (;;) {
      bool run = is_run(inst.system, inst.graph, rho);
      if (run) {
        // a run of nonzero weight: booleans weigh 0 or 1, so check the product
        exists = exists || run_weight(inst.system, inst.graph, rho) == Weight::boolean(true);
      }
      size_t pos = 0;
      while (pos < rho.size()) {
        if (++rho[pos] < q) break;
        rho[pos] = 0;
        ++pos;
      }
      if (pos == rho.size()) break;
    }
    CHECK(val == Weight::boolean(exists));
  }
}

TEST_CASE("duplicate tiles are rejected") {
  Signature sig = make_signature({"e"}, {"a"});
  TilingSystem ts(sig, SemiringId::Natural, {"q"});
  Tile t;
  t.state = 0;
  t.label = 0;
  ts.add_tile(t, Weight::integer(1));
  CHECK_THROWS_AS(ts.add_tile(t, Weight::integer(2)), ValidationError);
}
