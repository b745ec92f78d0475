#pragma once

#include <random>
#include <string>
#include <vector>

#include "automata.hpp"
#include "decomp.hpp"
#include "generators.hpp"
#include "graph.hpp"
#include "semiring.hpp"
#include "tiling.hpp"

namespace wts::testing {

// 5-vertex sample graph used across the clique tests (clique number 3).
std::vector<std::vector<bool>> sample_graph_adjacency();

// 5x5 0/1 matrix fixture for the permanent tests.
std::vector<std::vector<int>> sample_permanent_matrix();

// Bottom-up row sweep of a triangular grid; valid creation order whose
// pending count stays around the row length.
std::vector<int> triangular_sweep_order(int n);

// Well-formed random k-word whose semantics is degree-valid by construction.
KWord random_kword(std::mt19937_64& rng, const Signature& sig, int k, int max_vertices);

// Random system over the graph's vertex types: tiles harvested from a few
// random labelings (so runs exist) plus noise tiles, random weights.
TilingSystem random_system(std::mt19937_64& rng, const Graph& g, SemiringId semiring,
                           int num_states);

struct RandomInstance {
  TilingSystem system;
  Graph graph;
  PathDecomposition pdec;
  TreeDecomposition tdec;  // path-shaped
};

RandomInstance random_instance(std::uint64_t seed, SemiringId semiring, int max_vertices = 8,
                               int num_states = 3, int k = 3);

// Chain-shaped tree decomposition with the same bags.
TreeDecomposition chain_tree_decomposition(const PathDecomposition& pd);

// Exhaustive run enumeration, the independent oracle for automaton
// evaluation.
Weight enumerate_word_runs(const WeightedWordAutomaton& b, const std::vector<std::string>& word);
Weight enumerate_tree_runs(const WeightedTreeAutomaton& b, const TermTree& term);

// Small random weighted tree automata and terms for the evaluation oracle.
WeightedTreeAutomaton random_tree_automaton(std::mt19937_64& rng, SemiringId semiring,
                                            int num_states);
TermTree random_term_tree(std::mt19937_64& rng, const WeightedTreeAutomaton& b, int max_nodes);

wts::Cnf random_cnf(std::mt19937_64& rng, int vars, int clauses);

std::vector<std::vector<bool>> random_adjacency(std::mt19937_64& rng, int n);
std::vector<std::vector<int>> random_01_matrix(std::mt19937_64& rng, int n);

}  // namespace wts::testing
