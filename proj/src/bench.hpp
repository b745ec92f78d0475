#pragma once

#include <string>
#include <vector>

#include "graph.hpp"

namespace wts {

// Triangular grid restricted to cells within `band` of the diagonal, all
// cells labeled 1. Path-width stays bounded as n grows, so these make
// size-parameterized inputs for the path-width pipeline.
Graph triangular_band_graph(int n, int band);

// Column sweep: diagonal vertex, then its column cells top-down. The
// pending-vertex count along this order is O(band).
std::vector<int> triangular_band_order(int n, int band);

struct BenchRow {
  int size = 0;
  double wall_ms = 0.0;
  std::string value;
  std::string digest;
};

struct BenchResult {
  std::string family;
  std::vector<BenchRow> rows;
};

// Families: "clique-strip" (clique system on bandwidth-3 triangular strips)
// and "perm-grid3xN" (permanent-style system on 3xN all-ones grids). Wall
// time is the median of `reps` runs of the path-width pipeline.
BenchResult run_bench(const std::string& family, const std::vector<int>& sizes, int reps = 3);

// CSV with header: size,wall_ms,value_digest
std::string bench_csv(const BenchResult& result);

std::uint64_t fnv1a64(const std::string& data);

}  // namespace wts
