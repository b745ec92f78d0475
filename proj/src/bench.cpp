#include "bench.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "automata.hpp"
#include "decomp.hpp"
#include "generators.hpp"

namespace wts {

Graph triangular_band_graph(int n, int band) {
  if (n < 1 || band < 1) throw ValidationError("band graph needs n >= 1 and band >= 1");
  Signature sig = make_signature({kGridRight, kGridDown}, {"0", "1"});
  // ids: for each column j, the diagonal vertex then cells (j-1,j)..(j-band,j)
  auto cell_id = [&](int i, int j) {
    // count vertices of columns 0..j-1, then the offset within column j
    auto column_size = [&](int c) { return 1 + std::min(c, band); };
    int base = 0;
    for (int c = 0; c < j; ++c) base += column_size(c);
    if (i == j) return base;
    return base + (j - i);  // (j-1,j) right after the diagonal
  };
  int total = 0;
  for (int c = 0; c < n; ++c) total += 1 + std::min(c, band);
  std::vector<int> labels(total, 1);
  std::vector<EdgeSpec> edges;
  const int right = 0, down = 1;
  // row chains: d_i -> (i,i+1) -> ... -> (i, i+band)
  for (int i = 0; i < n; ++i)
    for (int j = i; j + 1 < n && j + 1 <= i + band; ++j)
      edges.push_back({right, cell_id(i, j), cell_id(i, j + 1)});
  // column chains: d_j -> (j-1,j) -> ... -> (j-band,j)
  for (int j = 0; j < n; ++j)
    for (int i = j; i - 1 >= 0 && i - 1 >= j - band; --i)
      edges.push_back({down, cell_id(i, j), cell_id(i - 1, j)});
  return build_graph(std::move(sig), std::move(labels), edges);
}

std::vector<int> triangular_band_order(int n, int band) {
  std::vector<int> order;
  int next = 0;
  for (int j = 0; j < n; ++j) {
    int col = 1 + std::min(j, band);
    for (int c = 0; c < col; ++c) order.push_back(next++);
  }
  return order;
}

std::uint64_t fnv1a64(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

namespace {

struct Instance {
  TilingSystem system;
  Graph graph;
  PathDecomposition dec;
};

Instance make_instance(const std::string& family, int size) {
  if (family == "clique-strip") {
    Graph g = triangular_band_graph(size, 3);
    PathDecomposition pd = path_decomposition_from_order(g, triangular_band_order(size, 3));
    return {clique_wts(), std::move(g), std::move(pd)};
  }
  if (family == "perm-grid3xN") {
    std::vector<std::vector<std::string>> labels(3, std::vector<std::string>(size, "1"));
    Graph g = grid_graph(3, size, labels);
    // column-major order keeps the pending count at the grid height
    std::vector<int> order;
    for (int j = 0; j < size; ++j)
      for (int i = 0; i < 3; ++i) order.push_back(grid_vertex(size, i, j));
    PathDecomposition pd = path_decomposition_from_order(g, order);
    return {permanent_wts(), std::move(g), std::move(pd)};
  }
  throw ParseError("unknown bench family \"" + family + "\"");
}

}  // namespace

BenchResult run_bench(const std::string& family, const std::vector<int>& sizes, int reps) {
  if (reps < 1) throw ValidationError("bench needs at least one repetition");
  BenchResult result;
  result.family = family;
  for (int size : sizes) {
    Instance inst = make_instance(family, size);
    std::vector<double> times;
    Weight value = inst.system.semiring().zero();
    for (int r = 0; r < reps; ++r) {
      auto start = std::chrono::steady_clock::now();
      value = eval_pw(inst.system, inst.graph, inst.dec);
      times.push_back(std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count());
    }
    std::sort(times.begin(), times.end());
    BenchRow row;
    row.size = size;
    row.wall_ms = times[times.size() / 2];
    row.value = inst.system.semiring().render(value);
    std::ostringstream hex;
    hex << std::hex << fnv1a64(row.value);
    row.digest = hex.str();
    result.rows.push_back(std::move(row));
  }
  return result;
}

std::string bench_csv(const BenchResult& result) {
  std::ostringstream os;
  os << "size,wall_ms,value_digest\n";
  for (const auto& row : result.rows)
    os << row.size << "," << row.wall_ms << "," << row.digest << "\n";
  return os.str();
}

}  // namespace wts
