#include "tiling.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace wts {

std::uint32_t Tile::in_mask() const {
  std::uint32_t m = 0;
  for (const auto& [nm, st] : fin) m |= 1u << nm;
  return m;
}

std::uint32_t Tile::out_mask() const {
  std::uint32_t m = 0;
  for (const auto& [nm, st] : fout) m |= 1u << nm;
  return m;
}

std::optional<int> Tile::fin_at(int name) const {
  for (const auto& [nm, st] : fin)
    if (nm == name) return st;
  return std::nullopt;
}

std::optional<int> Tile::fout_at(int name) const {
  for (const auto& [nm, st] : fout)
    if (nm == name) return st;
  return std::nullopt;
}

bool Tile::operator<(const Tile& o) const {
  if (state != o.state) return state < o.state;
  if (label != o.label) return label < o.label;
  if (fin != o.fin) return fin < o.fin;
  return fout < o.fout;
}

void sort_tile_maps(Tile& t) {
  std::sort(t.fin.begin(), t.fin.end());
  std::sort(t.fout.begin(), t.fout.end());
}

std::string tile_to_string(const Tile& t, const Signature& sig,
                           const std::vector<std::string>& states) {
  std::ostringstream os;
  auto pmap = [&](const std::vector<std::pair<int, int>>& m) {
    os << "{";
    bool first = true;
    for (const auto& [nm, st] : m) {
      if (!first) os << ",";
      first = false;
      os << sig.gamma.at(nm) << "->" << states.at(st);
    }
    os << "}";
  };
  os << "(";
  pmap(t.fin);
  os << ", " << states.at(t.state) << ", " << sig.sigma.at(t.label) << ", ";
  pmap(t.fout);
  os << ")";
  return os.str();
}

size_t TileHash::operator()(const Tile& t) const {
  size_t h = 0x9e3779b97f4a7c15ull;
  auto mix = [&h](size_t x) {
    h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  };
  mix(static_cast<size_t>(t.state));
  mix(static_cast<size_t>(t.label) | 0x100);
  for (const auto& [nm, st] : t.fin) mix((static_cast<size_t>(nm) << 16) ^ st ^ 0xA0000);
  for (const auto& [nm, st] : t.fout) mix((static_cast<size_t>(nm) << 16) ^ st ^ 0xB0000);
  return h;
}

TilingSystem::TilingSystem(Signature sig, SemiringId semiring, std::vector<std::string> states)
    : sig_(std::move(sig)), semiring_(semiring), states_(std::move(states)) {
  if (states_.empty()) throw ValidationError("tiling system needs at least one state");
  std::set<std::string> seen;
  for (const auto& s : states_)
    if (!seen.insert(s).second) throw ValidationError("duplicate state: \"" + s + "\"");
}

int TilingSystem::state_index(const std::string& name) const {
  for (size_t i = 0; i < states_.size(); ++i)
    if (states_[i] == name) return static_cast<int>(i);
  throw ParseError("unknown state: \"" + name + "\"");
}

void TilingSystem::check_tile(const Tile& t) const {
  auto check_state = [&](int s) {
    if (s < 0 || s >= state_count()) throw ValidationError("tile references unknown state");
  };
  check_state(t.state);
  if (t.label < 0 || t.label >= static_cast<int>(sig_.sigma.size()))
    throw ValidationError("tile references unknown label");
  auto check_map = [&](const std::vector<std::pair<int, int>>& m) {
    int prev = -1;
    for (const auto& [nm, st] : m) {
      if (nm < 0 || nm >= static_cast<int>(sig_.gamma.size()))
        throw ValidationError("tile references unknown edge name");
      if (nm <= prev) throw ValidationError("tile map not sorted or has duplicate name");
      prev = nm;
      check_state(st);
    }
  };
  check_map(t.fin);
  check_map(t.fout);
}

void TilingSystem::add_tile(Tile t, Weight w) {
  sort_tile_maps(t);
  check_tile(t);
  semiring_.validate(w);
  if (index_.count(t))
    throw ValidationError("duplicate tile: " + tile_to_string(t, sig_, states_));
  int idx = static_cast<int>(tiles_.size());
  index_.emplace(t, idx);
  if (!semiring_.is_zero(w))
    by_core_[{t.state, t.label}].push_back(idx);
  tiles_.push_back(std::move(t));
  weights_.push_back(std::move(w));
  extend_cache_.clear();
}

std::optional<Weight> TilingSystem::weight_of(const Tile& t) const {
  auto it = index_.find(t);
  if (it == index_.end()) return std::nullopt;
  return weights_[it->second];
}

namespace {

// m is a submap of full: every entry of m appears in full with equal value.
bool submap(const std::vector<std::pair<int, int>>& m,
            const std::vector<std::pair<int, int>>& full) {
  size_t j = 0;
  for (const auto& e : m) {
    while (j < full.size() && full[j].first < e.first) ++j;
    if (j == full.size() || full[j].first != e.first || full[j].second != e.second) return false;
    ++j;
  }
  return true;
}

}  // namespace

bool TilingSystem::extendable(const Tile& partial) const {
  auto cached = extend_cache_.find(partial);
  if (cached != extend_cache_.end()) return cached->second;
  bool ok = false;
  auto it = by_core_.find({partial.state, partial.label});
  if (it != by_core_.end()) {
    for (int idx : it->second) {
      const Tile& full = tiles_[idx];
      if (submap(partial.fin, full.fin) && submap(partial.fout, full.fout)) {
        ok = true;
        break;
      }
    }
  }
  extend_cache_.emplace(partial, ok);
  return ok;
}

Tile tile_of(const Graph& g, const Labeling& rho, int v) {
  if (v < 0 || v >= g.vertex_count()) throw ValidationError("unknown vertex");
  if (static_cast<int>(rho.size()) != g.vertex_count())
    throw ValidationError("labeling does not cover the vertex set");
  Tile t;
  t.state = rho[v];
  t.label = g.label(v);
  const int names = static_cast<int>(g.signature().gamma.size());
  for (int nm = 0; nm < names; ++nm) {
    int u = g.in_neighbor(v, nm);
    if (u >= 0) t.fin.push_back({nm, rho[u]});
    int w = g.out_neighbor(v, nm);
    if (w >= 0) t.fout.push_back({nm, rho[w]});
  }
  return t;  // maps already sorted by name
}

bool is_run(const TilingSystem& ts, const Graph& g, const Labeling& rho) {
  if (static_cast<int>(rho.size()) != g.vertex_count())
    throw ValidationError("labeling does not cover the vertex set");
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!ts.has_tile(tile_of(g, rho, v))) return false;
  return true;
}

Weight run_weight(const TilingSystem& ts, const Graph& g, const Labeling& rho) {
  const Semiring& s = ts.semiring();
  Weight acc = s.one();
  for (int v = 0; v < g.vertex_count(); ++v) {
    auto w = ts.weight_of(tile_of(g, rho, v));
    if (!w) return s.zero();
    acc = s.mul(acc, *w);
  }
  return acc;
}

Weight eval_brute(const TilingSystem& ts, const Graph& g, const BruteOptions& opts) {
  const Semiring& s = ts.semiring();
  const int n = g.vertex_count();
  if (n == 0) return s.one();
  const std::uint64_t q = static_cast<std::uint64_t>(ts.state_count());

  // Overflow-safe labeling count check.
  std::uint64_t total = 1;
  for (int v = 0; v < n; ++v) {
    if (total > opts.budget / std::max<std::uint64_t>(q, 1) && q > 1) {
      std::ostringstream os;
      os << "brute-force labeling space |Q|^|V| = " << q << "^" << n
         << " exceeds budget " << opts.budget;
      throw ResourceError(os.str());
    }
    total *= q;
  }
  if (total > opts.budget) {
    std::ostringstream os;
    os << "brute-force labeling space " << total << " exceeds budget " << opts.budget;
    throw ResourceError(os.str());
  }

  Weight acc = s.zero();
  Labeling rho(n, 0);
  for (;;) {
    acc = s.add(acc, run_weight(ts, g, rho));
    // mixed-radix increment, vertex 0 least significant
    int pos = 0;
    while (pos < n) {
      if (++rho[pos] < static_cast<int>(q)) break;
      rho[pos] = 0;
      ++pos;
    }
    if (pos == n) break;
  }
  return acc;
}

}  // namespace wts
