#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "graph.hpp"
#include "tiling.hpp"

namespace wts {

// Max-plus system over lower-right triangular grids whose value is the
// clique number of the encoded graph. A run marks a subset of diagonal
// vertices, propagates the row/column markers inward and forces marked
// crossings onto 1-labeled cells; marked diagonal tiles weigh 1.
TilingSystem clique_wts();

// Natural-semiring system over 0/1 grids whose value is the permanent of
// the encoded matrix: each run circles one cell per row and column, and a
// circled 0 zeroes the run.
TilingSystem permanent_wts();

// Counting system over bit-string path graphs: runs guess a prefix ending at
// a 1-labeled vertex, the free suffix doubles per position, so the run count
// is the binary value of the string (MSB first).
TilingSystem binary_path_wts();
Graph nat_to_path_graph(const std::string& bits);
std::pair<TilingSystem, Graph> binary_path_instance(const std::string& bits);

struct Cnf {
  int num_vars = 0;
  std::vector<std::vector<int>> clauses;  // nonzero literals, DIMACS signs
};

// DIMACS text: "p cnf <vars> <clauses>" then clause lines terminated by 0.
Cnf parse_dimacs(const std::string& text);
std::string dimacs_of(const Cnf& cnf);

// n x m grid with labels p/n/* marking how variable i occurs in clause j.
// Tautological clauses are rejected.
Graph cnf_to_grid(const Cnf& cnf);

// Counting system evaluating to the number of satisfying assignments of the
// encoded formula: row-constant assignment bits, per-column satisfaction
// accumulation, last-row conjunction chain, weight on the sink tile.
TilingSystem sharp_sat_wts();

// Integer-semiring system over two formulas laid side by side; value is
// #phi1 - #phi2. One region is evaluated per run while the other is parked
// in a skip state; states carry the region tag so the boundary column is
// locally recognizable.
TilingSystem gap_wts();
Graph gap_encoding(const Cnf& phi1, const Cnf& phi2);

// Grid of neutral X cells with a bit-string path attached to every cell;
// circled cells start the binary counter on their path, all other paths are
// frozen. Value equals the permanent of the natural-entry matrix.
std::pair<TilingSystem, Graph> natural_permanent_instance(
    const std::vector<std::vector<long>>& matrix);

// Independent brute-force oracles (enumeration only, size-guarded).
mpz_class permanent_oracle(const std::vector<std::vector<int>>& matrix);
mpz_class natural_permanent_oracle(const std::vector<std::vector<long>>& matrix);
int clique_oracle(const std::vector<std::vector<bool>>& adjacency);
mpz_class count_sat_oracle(const Cnf& cnf);

}  // namespace wts
