#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "decomp.hpp"
#include "graph.hpp"
#include "semiring.hpp"
#include "tiling.hpp"

namespace wts {

// Automaton state: partial map color -> partial tile. The tile at a color
// accumulates the edges seen so far for the vertex holding that color.
// Entries are kept sorted by color so equal maps encode identically.
struct PartialTileMap {
  std::vector<std::pair<int, Tile>> entries;

  bool has(int color) const;
  const Tile* find(int color) const;
  PartialTileMap with(int color, Tile t) const;   // insert or replace
  PartialTileMap without(int color) const;

  // Canonical byte encoding; equal maps encode identically.
  std::string key() const;
  // Human-readable form used for materialized state names and export.
  std::string display(const TilingSystem& ts) const;

  bool operator==(const PartialTileMap& o) const { return entries == o.entries; }
};

struct AutomataOptions {
  // Eager subtile-extendability filtering. Weight-preserving; exists so the
  // filtered and unfiltered runs can be compared.
  bool prune = true;
};

// The three word-transition rows: vertex creation (one successor per state,
// weight 1), forget (weight = the listed weight of the completed tile;
// unlisted or zero-weight tiles yield no successor), and edge addition
// (weight 1, distinct active colors, fresh name on both sides).
std::vector<std::pair<PartialTileMap, Weight>> word_transition(
    const TilingSystem& ts, int k, const PartialTileMap& delta, const TermOp& letter,
    const AutomataOptions& opts = {});

// The four tree-transition rows; leaf/unary rows mirror the word rows, the
// binary row merges two states whose shared colors agree on state and label
// and carry disjoint f_in/f_out domains.
std::vector<std::pair<PartialTileMap, Weight>> tree_leaf_transition(
    const TilingSystem& ts, int k, int color, int label, const AutomataOptions& opts = {});
std::vector<std::pair<PartialTileMap, Weight>> tree_unary_transition(
    const TilingSystem& ts, int k, const TermOp& letter, const PartialTileMap& child,
    const AutomataOptions& opts = {});
std::optional<std::pair<PartialTileMap, Weight>> tree_merge_transition(
    const TilingSystem& ts, const PartialTileMap& left, const PartialTileMap& right,
    const AutomataOptions& opts = {});

struct EvalStats {
  int width_used = -1;
  long term_size = -1;
  long reachable_states = -1;
  double wall_ms = 0.0;
};

// Sparse left fold of the state vector through the word; value is the entry
// of the empty map (initial = final = empty map).
Weight eval_kword_lazy(const TilingSystem& ts, const KWord& w,
                       const AutomataOptions& opts = {}, EvalStats* stats = nullptr);

// Bottom-up sparse evaluation over a tree term.
Weight eval_ktt_lazy(const TilingSystem& ts, const KTreeTerm& t,
                     const AutomataOptions& opts = {}, EvalStats* stats = nullptr);

struct PipelineOptions {
  std::optional<int> max_width;
  AutomataOptions automata;
};

// Decomposition (supplied or heuristic) -> word/term -> lazy evaluation.
// Empty graphs evaluate to 1_S directly.
Weight eval_pw(const TilingSystem& ts, const Graph& g,
               const std::optional<PathDecomposition>& pd = std::nullopt,
               const PipelineOptions& opts = {}, EvalStats* stats = nullptr);
Weight eval_tw(const TilingSystem& ts, const Graph& g,
               const std::optional<TreeDecomposition>& td = std::nullopt,
               const PipelineOptions& opts = {}, EvalStats* stats = nullptr);

// Generic weighted word automaton over string letters.
struct WeightedWordAutomaton {
  Semiring semiring{SemiringId::Natural};
  std::vector<std::string> states;
  std::vector<std::string> alphabet;
  std::vector<int> initial;
  std::vector<int> final_states;
  std::map<std::pair<int, int>, std::vector<std::pair<int, Weight>>> transitions;

  int state_index(const std::string& s) const;
  int letter_index(const std::string& l) const;
  void add_transition(int from, int letter, int to, Weight w);
};

Weight eval_word_automaton(const WeightedWordAutomaton& b, const std::vector<std::string>& word);

// Generic weighted tree automaton; letters carry a fixed arity (0, 1 or 2).
struct WeightedTreeAutomaton {
  Semiring semiring{SemiringId::Natural};
  std::vector<std::string> states;
  std::vector<std::pair<std::string, int>> alphabet;  // (letter, arity)
  std::vector<int> final_states;
  std::map<int, std::vector<std::pair<int, Weight>>> leaf_transitions;
  std::map<std::pair<int, int>, std::vector<std::pair<int, Weight>>> unary_transitions;
  std::map<std::tuple<int, int, int>, std::vector<std::pair<int, Weight>>> binary_transitions;

  int state_index(const std::string& s) const;
  int letter_index(const std::string& l) const;
};

struct TermTree {
  struct Node {
    std::string letter;
    std::vector<int> children;
  };
  std::vector<Node> nodes;
  int root = -1;
};

// Bottom-up state-vector evaluation: leaf, unary and binary cases with
// products taken as value1 * weight * value2; final value sums the vector
// over accepting states.
Weight tree_eval(const WeightedTreeAutomaton& b, const TermTree& term);

// Canonical letter spellings shared by terms and materialized automata.
std::string letter_node(int color, const std::string& label);
std::string letter_add(const std::string& name, int src, int dst);
std::string letter_forget(int color);
extern const char* const kUnionLetter;

std::vector<std::string> word_letters(const KWord& w);
TermTree term_tree_of(const KTreeTerm& t);

// Explicit reachable-state automata for inspection and export; restricted to
// subtile-extendable states. Throws ResourceError past the state budget.
WeightedWordAutomaton materialize_word_bk(const TilingSystem& ts, int k,
                                          std::size_t state_budget = 1'000'000);
WeightedTreeAutomaton materialize_tree_bk(const TilingSystem& ts, int k,
                                          std::size_t state_budget = 1'000'000);

}  // namespace wts
