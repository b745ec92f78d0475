#include "automata.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>
#include <unordered_set>

namespace wts {

bool PartialTileMap::has(int color) const { return find(color) != nullptr; }

const Tile* PartialTileMap::find(int color) const {
  for (const auto& [c, t] : entries)
    if (c == color) return &t;
  return nullptr;
}

PartialTileMap PartialTileMap::with(int color, Tile t) const {
  PartialTileMap out;
  bool placed = false;
  for (const auto& e : entries) {
    if (e.first == color) {
      out.entries.push_back({color, t});
      placed = true;
    } else {
      if (!placed && e.first > color) {
        out.entries.push_back({color, t});
        placed = true;
      }
      out.entries.push_back(e);
    }
  }
  if (!placed) out.entries.push_back({color, t});
  return out;
}

PartialTileMap PartialTileMap::without(int color) const {
  PartialTileMap out;
  for (const auto& e : entries)
    if (e.first != color) out.entries.push_back(e);
  return out;
}

std::string PartialTileMap::key() const {
  std::string s;
  auto byte = [&s](int x) { s.push_back(static_cast<char>(x & 0xff)); };
  for (const auto& [c, t] : entries) {
    byte(c);
    byte(t.state);
    byte(t.label);
    byte(static_cast<int>(t.fin.size()));
    for (const auto& [nm, st] : t.fin) {
      byte(nm);
      byte(st);
    }
    byte(static_cast<int>(t.fout.size()));
    for (const auto& [nm, st] : t.fout) {
      byte(nm);
      byte(st);
    }
    byte(0x7f);
  }
  return s;
}

std::string PartialTileMap::display(const TilingSystem& ts) const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [c, t] : entries) {
    if (!first) os << "; ";
    first = false;
    os << c << ":" << tile_to_string(t, ts.signature(), ts.states());
  }
  os << "}";
  return os.str();
}

namespace {

bool fits_colors(int color, int k) { return color >= 0 && color <= k; }

void check_letter(const TilingSystem& ts, int k, const TermOp& letter) {
  switch (letter.kind) {
    case TermOp::Kind::Node:
      if (!fits_colors(letter.color, k))
        throw ValidationError("letter color outside [0..k]");
      if (letter.label < 0 || letter.label >= static_cast<int>(ts.signature().sigma.size()))
        throw ValidationError("letter label outside the signature");
      return;
    case TermOp::Kind::Forget:
      if (!fits_colors(letter.color, k))
        throw ValidationError("letter color outside [0..k]");
      return;
    case TermOp::Kind::Add:
      if (!fits_colors(letter.src, k) || !fits_colors(letter.dst, k))
        throw ValidationError("letter color outside [0..k]");
      if (letter.name < 0 || letter.name >= static_cast<int>(ts.signature().gamma.size()))
        throw ValidationError("letter edge name outside the signature");
      return;
  }
}

Tile fresh_tile(int state, int label) {
  Tile t;
  t.state = state;
  t.label = label;
  return t;
}

// Insert into a sorted (name, state) partial map; name must be absent.
void map_insert(std::vector<std::pair<int, int>>& m, int name, int state) {
  auto it = std::lower_bound(m.begin(), m.end(), std::make_pair(name, -1));
  m.insert(it, {name, state});
}

}  // namespace

std::vector<std::pair<PartialTileMap, Weight>> word_transition(
    const TilingSystem& ts, int k, const PartialTileMap& delta, const TermOp& letter,
    const AutomataOptions& opts) {
  check_letter(ts, k, letter);
  const Semiring& s = ts.semiring();
  std::vector<std::pair<PartialTileMap, Weight>> out;
  switch (letter.kind) {
    case TermOp::Kind::Node: {
      if (delta.has(letter.color)) return out;
      for (int q = 0; q < ts.state_count(); ++q) {
        Tile t = fresh_tile(q, letter.label);
        if (opts.prune && !ts.extendable(t)) continue;
        out.push_back({delta.with(letter.color, std::move(t)), s.one()});
      }
      return out;
    }
    case TermOp::Kind::Forget: {
      const Tile* t = delta.find(letter.color);
      if (!t) return out;
      auto w = ts.weight_of(*t);
      if (!w || s.is_zero(*w)) return out;  // unlisted tiles carry weight zero
      out.push_back({delta.without(letter.color), *w});
      return out;
    }
    case TermOp::Kind::Add: {
      if (letter.src == letter.dst) return out;
      const Tile* ti = delta.find(letter.src);
      const Tile* tj = delta.find(letter.dst);
      if (!ti || !tj) return out;
      if (ti->fout_at(letter.name) || tj->fin_at(letter.name)) return out;
      Tile ni = *ti, nj = *tj;
      map_insert(ni.fout, letter.name, tj->state);
      map_insert(nj.fin, letter.name, ti->state);
      if (opts.prune && (!ts.extendable(ni) || !ts.extendable(nj))) return out;
      out.push_back({delta.with(letter.src, std::move(ni)).with(letter.dst, std::move(nj)),
                     s.one()});
      return out;
    }
  }
  return out;
}

std::vector<std::pair<PartialTileMap, Weight>> tree_leaf_transition(
    const TilingSystem& ts, int k, int color, int label, const AutomataOptions& opts) {
  return word_transition(ts, k, PartialTileMap{}, op_node(color, label), opts);
}

std::vector<std::pair<PartialTileMap, Weight>> tree_unary_transition(
    const TilingSystem& ts, int k, const TermOp& letter, const PartialTileMap& child,
    const AutomataOptions& opts) {
  if (letter.kind == TermOp::Kind::Node)
    throw ValidationError("vertex creation is a leaf, not a unary transition");
  return word_transition(ts, k, child, letter, opts);
}

std::optional<std::pair<PartialTileMap, Weight>> tree_merge_transition(
    const TilingSystem& ts, const PartialTileMap& left, const PartialTileMap& right,
    const AutomataOptions& opts) {
  PartialTileMap merged;
  size_t i = 0, j = 0;
  while (i < left.entries.size() || j < right.entries.size()) {
    if (j == right.entries.size() ||
        (i < left.entries.size() && left.entries[i].first < right.entries[j].first)) {
      merged.entries.push_back(left.entries[i++]);
      continue;
    }
    if (i == left.entries.size() || right.entries[j].first < left.entries[i].first) {
      merged.entries.push_back(right.entries[j++]);
      continue;
    }
    // shared color
    const Tile& a = left.entries[i].second;
    const Tile& b = right.entries[j].second;
    if (a.state != b.state || a.label != b.label) return std::nullopt;
    if ((a.in_mask() & b.in_mask()) != 0 || (a.out_mask() & b.out_mask()) != 0)
      return std::nullopt;
    Tile u = a;
    for (const auto& [nm, st] : b.fin) map_insert(u.fin, nm, st);
    for (const auto& [nm, st] : b.fout) map_insert(u.fout, nm, st);
    if (opts.prune && !ts.extendable(u)) return std::nullopt;
    merged.entries.push_back({left.entries[i].first, std::move(u)});
    ++i;
    ++j;
  }
  return std::make_pair(std::move(merged), ts.semiring().one());
}

namespace {

using StateVector = std::map<std::string, std::pair<PartialTileMap, Weight>>;

void vector_accumulate(StateVector& vec, const Semiring& s, PartialTileMap delta, Weight w) {
  std::string key = delta.key();
  auto it = vec.find(key);
  if (it == vec.end())
    vec.emplace(std::move(key), std::make_pair(std::move(delta), std::move(w)));
  else
    it->second.second = s.add(it->second.second, w);
}

Weight empty_state_value(const StateVector& vec, const Semiring& s) {
  auto it = vec.find(std::string());
  return it == vec.end() ? s.zero() : it->second.second;
}

struct StatsTracker {
  EvalStats* stats;
  std::unordered_set<std::string> seen;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  explicit StatsTracker(EvalStats* s) : stats(s) {}
  void note(const StateVector& vec) {
    if (!stats) return;
    for (const auto& [key, entry] : vec) seen.insert(key);
  }
  void finish(long term_size) {
    if (!stats) return;
    stats->term_size = term_size;
    stats->reachable_states = static_cast<long>(seen.size());
    stats->wall_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start)
                         .count();
  }
};

}  // namespace

Weight eval_kword_lazy(const TilingSystem& ts, const KWord& w, const AutomataOptions& opts,
                       EvalStats* stats) {
  const Semiring& s = ts.semiring();
  StatsTracker tracker(stats);
  StateVector vec;
  vec.emplace(std::string(), std::make_pair(PartialTileMap{}, s.one()));
  tracker.note(vec);
  for (const auto& op : w.ops) {
    StateVector next;
    for (const auto& [key, entry] : vec) {
      const auto& [delta, acc] = entry;
      for (auto& [succ, tw] : word_transition(ts, w.k, delta, op, opts))
        vector_accumulate(next, s, std::move(succ), s.mul(acc, tw));
    }
    vec = std::move(next);
    tracker.note(vec);
    if (vec.empty()) break;
  }
  tracker.finish(static_cast<long>(w.ops.size()));
  return empty_state_value(vec, s);
}

Weight eval_ktt_lazy(const TilingSystem& ts, const KTreeTerm& t, const AutomataOptions& opts,
                     EvalStats* stats) {
  const Semiring& s = ts.semiring();
  StatsTracker tracker(stats);
  std::map<int, StateVector> vectors;
  for (int id : ktt_postorder(t)) {
    const auto& node = t.nodes[id];
    StateVector vec;
    switch (node.kind) {
      case KTreeTerm::Node::Kind::Leaf:
        for (auto& [succ, tw] : tree_leaf_transition(ts, t.k, node.color, node.label, opts))
          vector_accumulate(vec, s, std::move(succ), tw);
        break;
      case KTreeTerm::Node::Kind::Add:
      case KTreeTerm::Node::Kind::Forget: {
        TermOp op = node.kind == KTreeTerm::Node::Kind::Add
                        ? op_add(node.name, node.src, node.dst)
                        : op_forget(node.color);
        StateVector child = std::move(vectors.at(node.child0));
        vectors.erase(node.child0);
        for (const auto& [key, entry] : child) {
          const auto& [delta, acc] = entry;
          for (auto& [succ, tw] : tree_unary_transition(ts, t.k, op, delta, opts))
            vector_accumulate(vec, s, std::move(succ), s.mul(acc, tw));
        }
        break;
      }
      case KTreeTerm::Node::Kind::Union: {
        StateVector left = std::move(vectors.at(node.child0));
        vectors.erase(node.child0);
        StateVector right = std::move(vectors.at(node.child1));
        vectors.erase(node.child1);
        for (const auto& [lk, le] : left) {
          for (const auto& [rk, re] : right) {
            auto merged = tree_merge_transition(ts, le.first, re.first, opts);
            if (!merged) continue;
            // value1 * weight * value2
            Weight w = s.mul(s.mul(le.second, merged->second), re.second);
            vector_accumulate(vec, s, std::move(merged->first), std::move(w));
          }
        }
        break;
      }
    }
    tracker.note(vec);
    vectors.emplace(id, std::move(vec));
  }
  tracker.finish(static_cast<long>(t.nodes.size()));
  return empty_state_value(vectors.at(t.root), s);
}

namespace {

void require_same_signature(const TilingSystem& ts, const Graph& g) {
  if (!(ts.signature() == g.signature()))
    throw ValidationError("tiling system and graph have different signatures");
}

}  // namespace

Weight eval_pw(const TilingSystem& ts, const Graph& g, const std::optional<PathDecomposition>& pd,
               const PipelineOptions& opts, EvalStats* stats) {
  require_same_signature(ts, g);
  if (g.vertex_count() == 0) return ts.semiring().one();
  PathDecomposition dec = pd ? *pd : heuristic_path_decomposition(g);
  int width = validate_path_decomposition(g, dec);
  if (opts.max_width && width > *opts.max_width) {
    std::ostringstream os;
    os << "path decomposition width " << width << " exceeds limit " << *opts.max_width;
    throw ResourceError(os.str());
  }
  if (stats) stats->width_used = width;
  KWordBuild kw = kword_from_path_decomposition(g, dec);
  return eval_kword_lazy(ts, kw.word, opts.automata, stats);
}

Weight eval_tw(const TilingSystem& ts, const Graph& g, const std::optional<TreeDecomposition>& td,
               const PipelineOptions& opts, EvalStats* stats) {
  require_same_signature(ts, g);
  if (g.vertex_count() == 0) return ts.semiring().one();
  TreeDecomposition dec = td ? *td : heuristic_tree_decomposition(g, opts.max_width);
  int width = validate_tree_decomposition(g, dec);
  if (opts.max_width && width > *opts.max_width) {
    std::ostringstream os;
    os << "tree decomposition width " << width << " exceeds limit " << *opts.max_width;
    throw ResourceError(os.str());
  }
  if (stats) stats->width_used = width;
  KttBuild kt = ktt_from_tree_decomposition(g, dec);
  return eval_ktt_lazy(ts, kt.term, opts.automata, stats);
}

int WeightedWordAutomaton::state_index(const std::string& s) const {
  for (size_t i = 0; i < states.size(); ++i)
    if (states[i] == s) return static_cast<int>(i);
  throw ParseError("unknown automaton state: \"" + s + "\"");
}

int WeightedWordAutomaton::letter_index(const std::string& l) const {
  for (size_t i = 0; i < alphabet.size(); ++i)
    if (alphabet[i] == l) return static_cast<int>(i);
  throw ValidationError("letter outside the automaton alphabet: \"" + l + "\"");
}

void WeightedWordAutomaton::add_transition(int from, int letter, int to, Weight w) {
  semiring.validate(w);
  transitions[{from, letter}].push_back({to, std::move(w)});
}

Weight eval_word_automaton(const WeightedWordAutomaton& b, const std::vector<std::string>& word) {
  const Semiring& s = b.semiring;
  std::map<int, Weight> vec;
  for (int q : b.initial) vec.emplace(q, s.one());
  for (const auto& letter : word) {
    int l = b.letter_index(letter);
    std::map<int, Weight> next;
    for (const auto& [q, acc] : vec) {
      auto it = b.transitions.find({q, l});
      if (it == b.transitions.end()) continue;
      for (const auto& [to, w] : it->second) {
        Weight v = s.mul(acc, w);
        auto [pos, fresh] = next.emplace(to, v);
        if (!fresh) pos->second = s.add(pos->second, v);
      }
    }
    vec = std::move(next);
    if (vec.empty()) break;
  }
  Weight out = s.zero();
  for (int q : b.final_states) {
    auto it = vec.find(q);
    if (it != vec.end()) out = s.add(out, it->second);
  }
  return out;
}

int WeightedTreeAutomaton::state_index(const std::string& s) const {
  for (size_t i = 0; i < states.size(); ++i)
    if (states[i] == s) return static_cast<int>(i);
  throw ParseError("unknown automaton state: \"" + s + "\"");
}

int WeightedTreeAutomaton::letter_index(const std::string& l) const {
  for (size_t i = 0; i < alphabet.size(); ++i)
    if (alphabet[i].first == l) return static_cast<int>(i);
  throw ValidationError("letter outside the automaton alphabet: \"" + l + "\"");
}

Weight tree_eval(const WeightedTreeAutomaton& b, const TermTree& term) {
  const Semiring& s = b.semiring;
  const int nq = static_cast<int>(b.states.size());
  if (term.root < 0) throw ValidationError("term has no root");

  // post-order
  std::vector<int> order;
  {
    std::vector<std::pair<int, bool>> stack{{term.root, false}};
    while (!stack.empty()) {
      auto [id, expanded] = stack.back();
      stack.pop_back();
      if (expanded) {
        order.push_back(id);
        continue;
      }
      stack.push_back({id, true});
      const auto& n = term.nodes.at(id);
      for (auto it = n.children.rbegin(); it != n.children.rend(); ++it)
        stack.push_back({*it, false});
    }
  }

  std::map<int, std::vector<Weight>> vals;
  for (int id : order) {
    const auto& n = term.nodes[id];
    int l = b.letter_index(n.letter);
    int arity = b.alphabet[l].second;
    if (static_cast<int>(n.children.size()) != arity)
      throw ValidationError("term node arity does not match letter \"" + n.letter + "\"");
    std::vector<Weight> val(nq, s.zero());
    switch (arity) {
      case 0: {
        auto it = b.leaf_transitions.find(l);
        if (it != b.leaf_transitions.end())
          for (const auto& [q, w] : it->second) val[q] = s.add(val[q], w);
        break;
      }
      case 1: {
        std::vector<Weight> v1 = std::move(vals.at(n.children[0]));
        vals.erase(n.children[0]);
        for (int q1 = 0; q1 < nq; ++q1) {
          auto it = b.unary_transitions.find({l, q1});
          if (it == b.unary_transitions.end()) continue;
          for (const auto& [q, w] : it->second)
            val[q] = s.add(val[q], s.mul(v1[q1], w));
        }
        break;
      }
      case 2: {
        std::vector<Weight> v1 = std::move(vals.at(n.children[0]));
        vals.erase(n.children[0]);
        std::vector<Weight> v2 = std::move(vals.at(n.children[1]));
        vals.erase(n.children[1]);
        for (int q1 = 0; q1 < nq; ++q1)
          for (int q2 = 0; q2 < nq; ++q2) {
            auto it = b.binary_transitions.find({l, q1, q2});
            if (it == b.binary_transitions.end()) continue;
            for (const auto& [q, w] : it->second)
              val[q] = s.add(val[q], s.mul(s.mul(v1[q1], w), v2[q2]));
          }
        break;
      }
      default:
        throw ValidationError("unsupported arity");
    }
    vals.emplace(id, std::move(val));
  }

  const auto& root_val = vals.at(term.root);
  Weight out = s.zero();
  for (int q : b.final_states) out = s.add(out, root_val[q]);
  return out;
}

std::string letter_node(int color, const std::string& label) {
  return "(" + std::to_string(color) + "," + label + ")";
}

std::string letter_add(const std::string& name, int src, int dst) {
  return "Add[" + name + "," + std::to_string(src) + "," + std::to_string(dst) + "]";
}

std::string letter_forget(int color) { return "Forget[" + std::to_string(color) + "]"; }

const char* const kUnionLetter = "Union";

namespace {

std::string letter_of_op(const Signature& sig, const TermOp& op) {
  switch (op.kind) {
    case TermOp::Kind::Node: return letter_node(op.color, sig.sigma.at(op.label));
    case TermOp::Kind::Add: return letter_add(sig.gamma.at(op.name), op.src, op.dst);
    case TermOp::Kind::Forget: return letter_forget(op.color);
  }
  throw ValidationError("corrupt op");
}

}  // namespace

std::vector<std::string> word_letters(const KWord& w) {
  std::vector<std::string> out;
  out.reserve(w.ops.size());
  for (const auto& op : w.ops) out.push_back(letter_of_op(w.sig, op));
  return out;
}

TermTree term_tree_of(const KTreeTerm& t) {
  TermTree out;
  out.nodes.resize(t.nodes.size());
  for (size_t i = 0; i < t.nodes.size(); ++i) {
    const auto& n = t.nodes[i];
    auto& m = out.nodes[i];
    switch (n.kind) {
      case KTreeTerm::Node::Kind::Leaf:
        m.letter = letter_node(n.color, t.sig.sigma.at(n.label));
        break;
      case KTreeTerm::Node::Kind::Add:
        m.letter = letter_add(t.sig.gamma.at(n.name), n.src, n.dst);
        m.children = {n.child0};
        break;
      case KTreeTerm::Node::Kind::Forget:
        m.letter = letter_forget(n.color);
        m.children = {n.child0};
        break;
      case KTreeTerm::Node::Kind::Union:
        m.letter = kUnionLetter;
        m.children = {n.child0, n.child1};
        break;
    }
  }
  out.root = t.root;
  return out;
}

namespace {

std::vector<TermOp> all_word_letters(const TilingSystem& ts, int k) {
  std::vector<TermOp> letters;
  const auto& sig = ts.signature();
  for (int i = 0; i <= k; ++i)
    for (int a = 0; a < static_cast<int>(sig.sigma.size()); ++a)
      letters.push_back(op_node(i, a));
  for (int i = 0; i <= k; ++i) letters.push_back(op_forget(i));
  for (int nm = 0; nm < static_cast<int>(sig.gamma.size()); ++nm)
    for (int i = 0; i <= k; ++i)
      for (int j = 0; j <= k; ++j) letters.push_back(op_add(nm, i, j));
  return letters;
}

}  // namespace

WeightedWordAutomaton materialize_word_bk(const TilingSystem& ts, int k,
                                          std::size_t state_budget) {
  WeightedWordAutomaton b;
  b.semiring = ts.semiring();
  const auto letters = all_word_letters(ts, k);
  for (const auto& op : letters) b.alphabet.push_back(letter_of_op(ts.signature(), op));

  std::map<std::string, int> index;          // key -> state id
  std::vector<PartialTileMap> state_maps;
  auto intern = [&](const PartialTileMap& m) {
    std::string key = m.key();
    auto it = index.find(key);
    if (it != index.end()) return it->second;
    if (state_maps.size() >= state_budget)
      throw ResourceError("automaton state budget exceeded while materializing");
    int id = static_cast<int>(state_maps.size());
    index.emplace(std::move(key), id);
    state_maps.push_back(m);
    b.states.push_back(m.display(ts));
    return id;
  };

  AutomataOptions opts;  // subtile-extendable states only
  int start = intern(PartialTileMap{});
  b.initial = {start};
  b.final_states = {start};
  std::vector<int> frontier{start};
  while (!frontier.empty()) {
    int id = frontier.back();
    frontier.pop_back();
    PartialTileMap delta = state_maps[id];  // copy: state_maps may grow
    for (size_t l = 0; l < letters.size(); ++l) {
      for (auto& [succ, w] : word_transition(ts, k, delta, letters[l], opts)) {
        size_t before = state_maps.size();
        int to = intern(succ);
        if (state_maps.size() > before) frontier.push_back(to);
        b.add_transition(id, static_cast<int>(l), to, w);
      }
    }
  }
  return b;
}

WeightedTreeAutomaton materialize_tree_bk(const TilingSystem& ts, int k,
                                          std::size_t state_budget) {
  WeightedTreeAutomaton b;
  b.semiring = ts.semiring();
  const auto& sig = ts.signature();

  std::vector<TermOp> leaf_letters, unary_letters;
  for (int i = 0; i <= k; ++i)
    for (int a = 0; a < static_cast<int>(sig.sigma.size()); ++a)
      leaf_letters.push_back(op_node(i, a));
  for (int i = 0; i <= k; ++i) unary_letters.push_back(op_forget(i));
  for (int nm = 0; nm < static_cast<int>(sig.gamma.size()); ++nm)
    for (int i = 0; i <= k; ++i)
      for (int j = 0; j <= k; ++j) unary_letters.push_back(op_add(nm, i, j));

  for (const auto& op : leaf_letters)
    b.alphabet.push_back({letter_of_op(sig, op), 0});
  for (const auto& op : unary_letters)
    b.alphabet.push_back({letter_of_op(sig, op), 1});
  b.alphabet.push_back({kUnionLetter, 2});
  const int union_letter = static_cast<int>(b.alphabet.size()) - 1;

  std::map<std::string, int> index;
  std::vector<PartialTileMap> state_maps;
  auto intern = [&](const PartialTileMap& m, bool* fresh) {
    std::string key = m.key();
    auto it = index.find(key);
    if (it != index.end()) {
      *fresh = false;
      return it->second;
    }
    if (state_maps.size() >= state_budget)
      throw ResourceError("automaton state budget exceeded while materializing");
    int id = static_cast<int>(state_maps.size());
    index.emplace(std::move(key), id);
    state_maps.push_back(m);
    b.states.push_back(m.display(ts));
    *fresh = true;
    return id;
  };

  AutomataOptions opts;
  bool fresh = false;
  std::vector<int> todo;

  for (size_t l = 0; l < leaf_letters.size(); ++l) {
    for (auto& [succ, w] :
         tree_leaf_transition(ts, k, leaf_letters[l].color, leaf_letters[l].label, opts)) {
      int to = intern(succ, &fresh);
      if (fresh) todo.push_back(to);
      b.leaf_transitions[static_cast<int>(l)].push_back({to, w});
    }
  }

  // Closure under unary letters and binary merges.
  std::set<int> done;
  while (!todo.empty()) {
    int id = todo.back();
    todo.pop_back();
    if (done.count(id)) continue;
    done.insert(id);
    PartialTileMap delta = state_maps[id];
    for (size_t l = 0; l < unary_letters.size(); ++l) {
      int letter = static_cast<int>(leaf_letters.size() + l);
      for (auto& [succ, w] : tree_unary_transition(ts, k, unary_letters[l], delta, opts)) {
        int to = intern(succ, &fresh);
        if (fresh) todo.push_back(to);
        b.unary_transitions[{letter, id}].push_back({to, w});
      }
    }
    // pair with every state discovered so far (including itself)
    for (int other = 0; other < static_cast<int>(state_maps.size()); ++other) {
      for (auto [a, c] : {std::pair{id, other}, std::pair{other, id}}) {
        auto merged = tree_merge_transition(ts, state_maps[a], state_maps[c], opts);
        if (!merged) continue;
        int to = intern(merged->first, &fresh);
        if (fresh) todo.push_back(to);
        auto& list = b.binary_transitions[{union_letter, a, c}];
        bool seen = false;
        for (const auto& [t2, w2] : list) seen = seen || t2 == to;
        if (!seen) list.push_back({to, merged->second});
      }
    }
  }

  bool has_empty = index.count(std::string()) > 0;
  if (has_empty) b.final_states = {index.at(std::string())};
  return b;
}

}  // namespace wts
