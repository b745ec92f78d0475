#pragma once

#include <iosfwd>
#include <string>

#include "automata.hpp"
#include "decomp.hpp"
#include "graph.hpp"
#include "tiling.hpp"

namespace wts {

// JSON file formats. Emission is deterministic: fixed key order, arrays in
// canonical order. Parsers enforce all structural invariants and throw
// ParseError/ValidationError with the first violation.

std::string graph_to_json(const Graph& g);
Graph graph_from_json(const std::string& text);

std::string wts_to_json(const TilingSystem& ts);
TilingSystem wts_from_json(const std::string& text);

// {"k":int,"ops":[...]}; the signature is synthesized from the labels and
// edge names in order of first appearance.
std::string kword_to_json(const KWord& w);
KWord kword_from_json(const std::string& text);

// Nested op objects; leaf {"op":"node",...}, unary forms carry "child",
// union carries "left"/"right".
std::string ktt_to_json(const KTreeTerm& t);
KTreeTerm ktt_from_json(const std::string& text);

std::string path_decomposition_to_json(const PathDecomposition& pd);
PathDecomposition path_decomposition_from_json(const std::string& text);

std::string tree_decomposition_to_json(const TreeDecomposition& td);
TreeDecomposition tree_decomposition_from_json(const std::string& text);

std::string word_automaton_to_json(const WeightedWordAutomaton& b);
std::string tree_automaton_to_json(const WeightedTreeAutomaton& b);

// Reads a whole file; "-" means standard input.
std::string read_input(const std::string& path);
void write_output(const std::string& path, const std::string& content);

}  // namespace wts
