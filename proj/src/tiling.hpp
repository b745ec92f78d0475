#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "graph.hpp"
#include "semiring.hpp"

namespace wts {

// Local neighborhood pattern: states on incoming/outgoing named edges, the
// vertex's own state and label. f_in/f_out are partial maps edge-name ->
// state, kept sorted by name index. The tile's type is dom(f_in)/dom(f_out).
struct Tile {
  std::vector<std::pair<int, int>> fin;   // (name, state), sorted by name
  std::vector<std::pair<int, int>> fout;  // (name, state), sorted by name
  int state = 0;
  int label = 0;

  std::uint32_t in_mask() const;
  std::uint32_t out_mask() const;
  std::optional<int> fin_at(int name) const;
  std::optional<int> fout_at(int name) const;

  bool operator==(const Tile& o) const {
    return state == o.state && label == o.label && fin == o.fin && fout == o.fout;
  }
  bool operator<(const Tile& o) const;
};

void sort_tile_maps(Tile& t);
std::string tile_to_string(const Tile& t, const Signature& sig,
                           const std::vector<std::string>& states);

struct TileHash {
  size_t operator()(const Tile& t) const;
};

// Weighted tiling system. Tiles not listed implicitly carry weight 0_S; the
// listed set is what run membership tests against.
class TilingSystem {
public:
  TilingSystem(Signature sig, SemiringId semiring, std::vector<std::string> states);

  const Signature& signature() const { return sig_; }
  const Semiring& semiring() const { return semiring_; }
  const std::vector<std::string>& states() const { return states_; }
  int state_count() const { return static_cast<int>(states_.size()); }
  int state_index(const std::string& name) const;

  // Rejects duplicate tiles and out-of-range state/label/name references.
  void add_tile(Tile t, Weight w);
  const std::vector<Tile>& tiles() const { return tiles_; }
  const Weight& tile_weight(int idx) const { return weights_.at(idx); }

  // Listed weight, or nullopt for the implicit-zero case.
  std::optional<Weight> weight_of(const Tile& t) const;
  bool has_tile(const Tile& t) const { return index_.count(t) > 0; }

  // True when the partial tile extends to some listed tile with nonzero
  // weight (same state and label, f_in/f_out submaps). Memoized.
  bool extendable(const Tile& partial) const;

private:
  void check_tile(const Tile& t) const;

  Signature sig_;
  Semiring semiring_;
  std::vector<std::string> states_;
  std::vector<Tile> tiles_;
  std::vector<Weight> weights_;
  std::unordered_map<Tile, int, TileHash> index_;
  // (state,label) -> indices of nonzero-weight tiles, for extendability.
  std::map<std::pair<int, int>, std::vector<int>> by_core_;
  mutable std::unordered_map<Tile, bool, TileHash> extend_cache_;
};

using Labeling = std::vector<int>;  // vertex -> state index, total

// The tile induced at v by the labeling: f_in/f_out read the states of the
// unique named neighbors.
Tile tile_of(const Graph& g, const Labeling& rho, int v);

bool is_run(const TilingSystem& ts, const Graph& g, const Labeling& rho);

// Product of listed tile weights in vertex-id order; 0_S when some vertex
// tile is unlisted (so non-runs contribute nothing).
Weight run_weight(const TilingSystem& ts, const Graph& g, const Labeling& rho);

struct BruteOptions {
  // Refuse when |Q|^|V| exceeds this many labelings.
  std::uint64_t budget = 10'000'000;
};

// Sum over all runs by mixed-radix enumeration of labelings in vertex-id
// order. Empty graph gives 1_S, no runs give 0_S.
Weight eval_brute(const TilingSystem& ts, const Graph& g, const BruteOptions& opts = {});

}  // namespace wts
