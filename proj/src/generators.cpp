#include "generators.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace wts {

namespace {

constexpr int kRight = 0;
constexpr int kDown = 1;

bool has(std::uint32_t mask, int name) { return (mask >> name) & 1u; }

// All partial maps mask -> Q as sorted (name,state) vectors.
std::vector<std::vector<std::pair<int, int>>> all_maps(std::uint32_t mask, int num_names,
                                                       int num_states) {
  std::vector<int> names;
  for (int nm = 0; nm < num_names; ++nm)
    if (has(mask, nm)) names.push_back(nm);
  std::vector<std::vector<std::pair<int, int>>> out;
  std::vector<int> pick(names.size(), 0);
  for (;;) {
    std::vector<std::pair<int, int>> m;
    for (size_t i = 0; i < names.size(); ++i) m.push_back({names[i], pick[i]});
    out.push_back(std::move(m));
    size_t pos = 0;
    while (pos < pick.size()) {
      if (++pick[pos] < num_states) break;
      pick[pos] = 0;
      ++pos;
    }
    if (pos == pick.size()) break;
  }
  return out;
}

int map_at(const std::vector<std::pair<int, int>>& m, int name) {
  for (const auto& [nm, st] : m)
    if (nm == name) return st;
  return -1;
}

}  // namespace

TilingSystem clique_wts() {
  Signature sig = make_signature({kGridRight, kGridDown}, {"0", "1"});
  // "both" marks selected diagonals and cells whose row and column both
  // start selected; "row"/"col" carry one marker; "none" carries neither.
  TilingSystem ts(sig, SemiringId::MaxPlusNat, {"both", "row", "col", "none"});
  const int BOTH = 0, ROW = 1, COL = 2, NONE = 3;
  const int label0 = 0, label1 = 1;
  const Weight zero_nat = Weight::integer(0);
  const Weight one_nat = Weight::integer(1);

  auto add_family = [&](std::uint32_t in_mask, int state, std::vector<int> labels,
                        std::vector<int> right_in, std::vector<int> down_in) {
    for (std::uint32_t out_mask = 0; out_mask < 4; ++out_mask) {
      for (const auto& fout : all_maps(out_mask, 2, 4)) {
        for (int lab : labels) {
          if (in_mask == 0) {
            Tile t;
            t.state = state;
            t.label = lab;
            t.fout = fout;
            ts.add_tile(t, state == BOTH ? one_nat : zero_nat);
          } else {
            for (int r : right_in)
              for (int d : down_in) {
                Tile t;
                t.state = state;
                t.label = lab;
                t.fin = {{kRight, r}, {kDown, d}};
                t.fout = fout;
                ts.add_tile(t, zero_nat);
              }
          }
        }
      }
    }
  };

  // diagonal tiles: label 1, marker chosen freely
  add_family(0, NONE, {label1}, {}, {});
  add_family(0, BOTH, {label1}, {}, {});
  // inner cells: both incoming edges present
  const std::uint32_t inner = 0b11;
  add_family(inner, NONE, {label0, label1}, {COL, NONE}, {ROW, NONE});
  add_family(inner, BOTH, {label1}, {BOTH, ROW}, {BOTH, COL});
  add_family(inner, ROW, {label0, label1}, {BOTH, ROW}, {ROW, NONE});
  add_family(inner, COL, {label0, label1}, {COL, NONE}, {BOTH, COL});
  return ts;
}

namespace {

// Permanent states: the circled cell "o", or a direction pair telling where
// the circles of the own column (n/s) and own row (e/w) lie.
enum PermState { O = 0, NE = 1, NW = 2, SE = 3, SW = 4 };

bool col_north(int s) { return s == NE || s == NW; }
bool col_south(int s) { return s == SE || s == SW; }
bool row_east(int s) { return s == NE || s == SE; }
bool row_west(int s) { return s == NW || s == SW; }

// Legal adjacent pairs along a row, left to right: E..E o W..W.
bool row_pair_ok(int u, int v) {
  if (u == O) return row_west(v);
  if (row_west(u)) return v != O && row_west(v);
  return v == O || row_east(v);  // row_east(u)
}

// Legal adjacent pairs down a column: S..S o N..N.
bool col_pair_ok(int u, int v) {
  if (u == O) return col_north(v);
  if (col_north(u)) return v != O && col_north(v);
  return v == O || col_south(v);  // col_south(u)
}

struct PermRules {
  std::uint32_t in_mask, out_mask;

  bool self_ok(int s) const {
    if (!has(in_mask, kRight) && !(s == O || row_east(s))) return false;
    if (!has(out_mask, kRight) && !(s == O || row_west(s))) return false;
    if (!has(in_mask, kDown) && !(s == O || col_south(s))) return false;
    if (!has(out_mask, kDown) && !(s == O || col_north(s))) return false;
    return true;
  }

  // Row/column borders shared with a neighbor constrain its states too:
  // a same-row neighbor shares top/bottom, a same-column one shares
  // first/last column.
  bool row_neighbor_ok(int u) const {
    if (!has(in_mask, kDown) && !(u == O || col_south(u))) return false;
    if (!has(out_mask, kDown) && !(u == O || col_north(u))) return false;
    return true;
  }
  bool col_neighbor_ok(int u) const {
    if (!has(in_mask, kRight) && !(u == O || row_east(u))) return false;
    if (!has(out_mask, kRight) && !(u == O || row_west(u))) return false;
    return true;
  }

  bool tile_ok(int s, const std::vector<std::pair<int, int>>& fin,
               const std::vector<std::pair<int, int>>& fout) const {
    if (!self_ok(s)) return false;
    if (has(in_mask, kRight)) {
      int u = map_at(fin, kRight);
      if (!row_pair_ok(u, s) || !row_neighbor_ok(u)) return false;
    }
    if (has(out_mask, kRight)) {
      int w = map_at(fout, kRight);
      if (!row_pair_ok(s, w) || !row_neighbor_ok(w)) return false;
    }
    if (has(in_mask, kDown)) {
      int u = map_at(fin, kDown);
      if (!col_pair_ok(u, s) || !col_neighbor_ok(u)) return false;
    }
    if (has(out_mask, kDown)) {
      int w = map_at(fout, kDown);
      if (!col_pair_ok(s, w) || !col_neighbor_ok(w)) return false;
    }
    return true;
  }
};

}  // namespace

TilingSystem permanent_wts() {
  Signature sig = make_signature({kGridRight, kGridDown}, {"0", "1"});
  TilingSystem ts(sig, SemiringId::Natural, {"o", "ne", "nw", "se", "sw"});
  const Weight w0 = Weight::integer(0);
  const Weight w1 = Weight::integer(1);
  for (std::uint32_t in_mask = 0; in_mask < 4; ++in_mask)
    for (std::uint32_t out_mask = 0; out_mask < 4; ++out_mask) {
      PermRules rules{in_mask, out_mask};
      for (const auto& fin : all_maps(in_mask, 2, 5))
        for (const auto& fout : all_maps(out_mask, 2, 5))
          for (int s = 0; s < 5; ++s) {
            if (!rules.tile_ok(s, fin, fout)) continue;
            for (int lab = 0; lab < 2; ++lab) {
              Tile t;
              t.state = s;
              t.label = lab;
              t.fin = fin;
              t.fout = fout;
              ts.add_tile(t, s == O && lab == 0 ? w0 : w1);
            }
          }
    }
  return ts;
}

namespace {

constexpr int kSucc = 0;  // path-graph edge name

}  // namespace

TilingSystem binary_path_wts() {
  Signature sig = make_signature({"succ"}, {"0", "1"});
  TilingSystem ts(sig, SemiringId::Natural, {"q0", "q1", "q2"});
  const int Q0 = 0, Q1 = 1, Q2 = 2;
  const int lab0 = 0, lab1 = 1;
  const Weight w1 = Weight::integer(1);
  auto tile = [&](std::vector<std::pair<int, int>> fin, int st, int lab,
                  std::vector<std::pair<int, int>> fout) {
    Tile t;
    t.fin = std::move(fin);
    t.state = st;
    t.label = lab;
    t.fout = std::move(fout);
    ts.add_tile(t, w1);
  };

  // prefix tiles; the prefix must end on a 1-labeled vertex
  for (std::vector<std::pair<int, int>> fin : {std::vector<std::pair<int, int>>{},
                                               std::vector<std::pair<int, int>>{{kSucc, Q0}}}) {
    for (int lab : {lab0, lab1}) tile(fin, Q0, lab, {{kSucc, Q0}});
    tile(fin, Q0, lab1, {{kSucc, Q1}});
    tile(fin, Q0, lab1, {{kSucc, Q2}});
    tile(fin, Q0, lab1, {});
  }
  // suffix tiles: entered right after the prefix end, states free
  for (int pred : {Q0, Q1, Q2})
    for (int st : {Q1, Q2})
      for (int lab : {lab0, lab1}) {
        tile({{kSucc, pred}}, st, lab, {{kSucc, Q1}});
        tile({{kSucc, pred}}, st, lab, {{kSucc, Q2}});
        tile({{kSucc, pred}}, st, lab, {});
      }
  return ts;
}

Graph nat_to_path_graph(const std::string& bits) {
  if (bits.empty()) throw ValidationError("bit string must be nonempty");
  Signature sig = make_signature({"succ"}, {"0", "1"});
  std::vector<int> labels;
  for (char c : bits) {
    if (c != '0' && c != '1') throw ValidationError("bit string may only contain 0 and 1");
    labels.push_back(c - '0');
  }
  std::vector<EdgeSpec> edges;
  for (int i = 0; i + 1 < static_cast<int>(bits.size()); ++i) edges.push_back({0, i, i + 1});
  return build_graph(std::move(sig), std::move(labels), edges);
}

std::pair<TilingSystem, Graph> binary_path_instance(const std::string& bits) {
  return {binary_path_wts(), nat_to_path_graph(bits)};
}

Cnf parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  Cnf cnf;
  int expected_clauses = -1;
  std::string tok;
  bool have_header = false;
  std::vector<int> current;
  while (in >> tok) {
    if (tok == "c") {
      std::string rest;
      std::getline(in, rest);
      continue;
    }
    if (tok == "p") {
      std::string fmt;
      if (!(in >> fmt) || fmt != "cnf" || !(in >> cnf.num_vars) || !(in >> expected_clauses))
        throw ParseError("bad DIMACS header");
      if (cnf.num_vars < 1) throw ParseError("DIMACS header declares no variables");
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError("DIMACS clauses before header");
    int lit;
    try {
      lit = std::stoi(tok);
    } catch (const std::exception&) {
      throw ParseError("bad DIMACS literal: \"" + tok + "\"");
    }
    if (lit == 0) {
      cnf.clauses.push_back(current);
      current.clear();
    } else {
      if (std::abs(lit) > cnf.num_vars)
        throw ParseError("literal " + tok + " exceeds declared variable count");
      current.push_back(lit);
    }
  }
  if (!have_header) throw ParseError("missing DIMACS header");
  if (!current.empty()) throw ParseError("unterminated clause");
  if (expected_clauses >= 0 && expected_clauses != static_cast<int>(cnf.clauses.size()))
    throw ParseError("clause count does not match header");
  return cnf;
}

std::string dimacs_of(const Cnf& cnf) {
  std::ostringstream os;
  os << "p cnf " << cnf.num_vars << " " << cnf.clauses.size() << "\n";
  for (const auto& cl : cnf.clauses) {
    for (int lit : cl) os << lit << " ";
    os << "0\n";
  }
  return os.str();
}

namespace {

// occurrence of variable i (1-based) in a clause: 'p', 'n' or '*';
// tautological clauses are rejected.
char occurrence(const std::vector<int>& clause, int var) {
  bool pos = false, neg = false;
  for (int lit : clause) {
    if (lit == var) pos = true;
    if (lit == -var) neg = true;
  }
  if (pos && neg) throw ValidationError("tautological clause: variable " + std::to_string(var) +
                                        " occurs with both signs");
  return pos ? 'p' : neg ? 'n' : '*';
}

}  // namespace

Graph cnf_to_grid(const Cnf& cnf) {
  if (cnf.num_vars < 1) throw ValidationError("formula needs at least one variable");
  if (cnf.clauses.empty()) throw ValidationError("formula needs at least one clause");
  std::vector<std::vector<std::string>> labels(cnf.num_vars);
  for (int i = 1; i <= cnf.num_vars; ++i)
    for (const auto& cl : cnf.clauses)
      labels[i - 1].push_back(std::string(1, occurrence(cl, i)));
  return grid_graph(cnf.num_vars, static_cast<int>(cnf.clauses.size()), labels, {"p", "n", "*"});
}

namespace {

struct SatState {
  bool assign_true;
  bool eval_true;
};

bool cond_a(char base, bool assign_true) {
  return (base == 'p' && assign_true) || (base == 'n' && !assign_true);
}

}  // namespace

TilingSystem sharp_sat_wts() {
  Signature sig = make_signature({kGridRight, kGridDown}, {"p", "n", "*"});
  // state = (assignment bit, partial evaluation bit)
  TilingSystem ts(sig, SemiringId::Natural, {"t1", "t0", "f1", "f0"});
  auto assign_of = [](int s) { return s < 2; };
  auto eval_of = [](int s) { return s % 2 == 0; };
  const Weight w0 = Weight::integer(0);
  const Weight w1 = Weight::integer(1);

  for (std::uint32_t in_mask = 0; in_mask < 4; ++in_mask)
    for (std::uint32_t out_mask = 0; out_mask < 4; ++out_mask)
      for (const auto& fin : all_maps(in_mask, 2, 4))
        for (const auto& fout : all_maps(out_mask, 2, 4))
          for (int s = 0; s < 4; ++s)
            for (int lab = 0; lab < 3; ++lab) {
              char base = "pn*"[lab];
              if (has(in_mask, kRight) && assign_of(map_at(fin, kRight)) != assign_of(s))
                continue;  // assignment is row-constant
              bool above_true =
                  has(in_mask, kDown) && eval_of(map_at(fin, kDown));
              bool expected;
              if (has(out_mask, kDown)) {
                // column accumulation outside the last row
                expected = cond_a(base, assign_of(s)) || above_true;
              } else {
                bool left_ok = !has(in_mask, kRight) || eval_of(map_at(fin, kRight));
                expected = left_ok && (cond_a(base, assign_of(s)) || above_true);
              }
              if (eval_of(s) != expected) continue;
              Tile t;
              t.state = s;
              t.label = lab;
              t.fin = fin;
              t.fout = fout;
              // only the bottom-right sink weighs the verdict
              Weight w = out_mask == 0 ? (eval_of(s) ? w1 : w0) : w1;
              ts.add_tile(std::move(t), std::move(w));
            }
  return ts;
}

TilingSystem gap_wts() {
  Signature sig =
      make_signature({kGridRight, kGridDown}, {"p1", "n1", "*1", "p2", "n2", "*2"});
  // pair states carry (assignment, evaluation, region tag); skip states park
  // the region that is not evaluated in this run.
  std::vector<std::string> states;
  for (int tag = 1; tag <= 2; ++tag)
    for (const char* ae : {"t1", "t0", "f1", "f0"})
      states.push_back(std::string(ae) + "@" + std::to_string(tag));
  states.push_back("skip1");
  states.push_back("skip2");
  TilingSystem ts(sig, SemiringId::Integer, states);

  const int kSkip1 = 8, kSkip2 = 9;
  auto is_skip = [&](int s) { return s == kSkip1 || s == kSkip2; };
  auto tag_of = [&](int s) { return is_skip(s) ? (s == kSkip1 ? 1 : 2) : (s < 4 ? 1 : 2); };
  auto assign_of = [&](int s) { return (s % 4) < 2; };
  auto eval_of = [&](int s) { return (s % 4) % 2 == 0; };
  auto label_tag = [](int lab) { return lab < 3 ? 1 : 2; };
  auto label_base = [](int lab) { return "pn*pn*"[lab]; };

  const Weight wm1 = Weight::integer(-1);
  const Weight w0 = Weight::integer(0);
  const Weight w1 = Weight::integer(1);

  const int nstates = 10;
  for (std::uint32_t in_mask = 0; in_mask < 4; ++in_mask)
    for (std::uint32_t out_mask = 0; out_mask < 4; ++out_mask)
      for (const auto& fin : all_maps(in_mask, 2, nstates))
        for (const auto& fout : all_maps(out_mask, 2, nstates))
          for (int s = 0; s < nstates; ++s)
            for (int lab = 0; lab < 6; ++lab) {
              if (tag_of(s) != label_tag(lab)) continue;
              if (has(in_mask, kDown)) {
                int u = map_at(fin, kDown);
                if (tag_of(u) != tag_of(s) || is_skip(u) != is_skip(s)) continue;
              }
              if (has(in_mask, kRight)) {
                int u = map_at(fin, kRight);
                if (tag_of(u) == tag_of(s)) {
                  if (is_skip(u) != is_skip(s)) continue;
                  if (!is_skip(s) && assign_of(u) != assign_of(s)) continue;
                } else if (tag_of(u) == 1 && tag_of(s) == 2) {
                  if (is_skip(u) == is_skip(s)) continue;  // boundary flips regions
                } else {
                  continue;  // a tag-2 cell never precedes a tag-1 cell
                }
              }
              if (!is_skip(s)) {
                bool above_true = false;
                if (has(in_mask, kDown)) {
                  int u = map_at(fin, kDown);
                  above_true = !is_skip(u) && eval_of(u);
                }
                bool expected;
                if (has(out_mask, kDown)) {
                  expected = cond_a(label_base(lab), assign_of(s)) || above_true;
                } else {
                  bool left_ok = true;
                  if (has(in_mask, kRight)) {
                    int u = map_at(fin, kRight);
                    left_ok = is_skip(u) || eval_of(u);
                  }
                  expected = left_ok && (cond_a(label_base(lab), assign_of(s)) || above_true);
                }
                if (eval_of(s) != expected) continue;
              }

              Weight w = w1;
              if (out_mask == 0) {
                // bottom-right corner of the whole layout (second region)
                if (tag_of(s) != 2) continue;
                w = is_skip(s) ? w1 : (eval_of(s) ? wm1 : w0);
              } else if (!has(out_mask, kDown) && tag_of(s) == 1 && has(out_mask, kRight) &&
                         tag_of(map_at(fout, kRight)) == 2) {
                // last cell of the first region in the bottom row
                w = is_skip(s) ? w1 : (eval_of(s) ? w1 : w0);
              }
              Tile t;
              t.state = s;
              t.label = lab;
              t.fin = fin;
              t.fout = fout;
              ts.add_tile(std::move(t), std::move(w));
            }
  return ts;
}

Graph gap_encoding(const Cnf& phi1, const Cnf& phi2) {
  if (phi1.num_vars != phi2.num_vars)
    throw ValidationError("the two formulas must share a variable set");
  if (phi1.clauses.empty() || phi2.clauses.empty())
    throw ValidationError("both formulas need at least one clause");
  const int n = phi1.num_vars;
  if (n < 1) throw ValidationError("formula needs at least one variable");
  std::vector<std::vector<std::string>> labels(n);
  for (int i = 1; i <= n; ++i) {
    for (const auto& cl : phi1.clauses)
      labels[i - 1].push_back(std::string(1, occurrence(cl, i)) + "1");
    for (const auto& cl : phi2.clauses)
      labels[i - 1].push_back(std::string(1, occurrence(cl, i)) + "2");
  }
  return grid_graph(n, static_cast<int>(phi1.clauses.size() + phi2.clauses.size()), labels,
                    {"p1", "n1", "*1", "p2", "n2", "*2"});
}

std::pair<TilingSystem, Graph> natural_permanent_instance(
    const std::vector<std::vector<long>>& matrix) {
  const int n = static_cast<int>(matrix.size());
  if (n < 1) throw ValidationError("matrix must be nonempty");
  for (const auto& row : matrix) {
    if (static_cast<int>(row.size()) != n) throw ValidationError("matrix must be square");
    for (long e : row)
      if (e < 0) throw ValidationError("matrix entries must be natural numbers");
  }

  Signature sig = make_signature({kGridRight, kGridDown, "succ"}, {"X", "0", "1"});
  // permanent states on the grid, binary-counter states on the paths
  TilingSystem ts(sig, SemiringId::Natural,
                  {"o", "ne", "nw", "se", "sw", "q0", "q1", "q2", "q4"});
  const int Q0 = 5, Q1 = 6, Q2 = 7, Q4 = 8;
  const int succ = 2;
  const int labX = 0, lab0 = 1, lab1 = 2;
  const Weight w1 = Weight::integer(1);

  // grid tiles: permanent rules over right/down, neutral label, and the
  // attached path starts the counter exactly below a circle
  for (std::uint32_t in_mask = 0; in_mask < 4; ++in_mask)
    for (std::uint32_t out_mask = 0; out_mask < 4; ++out_mask) {
      PermRules rules{in_mask, out_mask};
      for (const auto& fin : all_maps(in_mask, 2, 5))
        for (const auto& fout_grid : all_maps(out_mask, 2, 5))
          for (int s = 0; s < 5; ++s) {
            if (!rules.tile_ok(s, fin, fout_grid)) continue;
            Tile t;
            t.state = s;
            t.label = labX;
            t.fin = fin;
            t.fout = fout_grid;
            t.fout.push_back({succ, s == O ? Q0 : Q4});
            ts.add_tile(std::move(t), w1);
          }
    }

  // path tiles: the counter behind a circle, frozen q4 elsewhere
  auto tile = [&](int fin_state, int st, int lab, int fout_state /* -1 for none */) {
    Tile t;
    t.fin = {{succ, fin_state}};
    t.state = st;
    t.label = lab;
    if (fout_state >= 0) t.fout = {{succ, fout_state}};
    ts.add_tile(std::move(t), w1);
  };
  for (int grid_state : {(int)O, (int)NE, (int)NW, (int)SE, (int)SW}) {
    if (grid_state == O) {
      for (int lab : {lab0, lab1}) tile(O, Q0, lab, Q0);
      tile(O, Q0, lab1, Q1);
      tile(O, Q0, lab1, Q2);
      tile(O, Q0, lab1, -1);
    } else {
      for (int lab : {lab0, lab1}) {
        tile(grid_state, Q4, lab, Q4);
        tile(grid_state, Q4, lab, -1);
      }
    }
  }
  for (int pred : {Q0, Q1, Q2}) {
    if (pred == Q0) {
      for (int lab : {lab0, lab1}) tile(Q0, Q0, lab, Q0);
      tile(Q0, Q0, lab1, Q1);
      tile(Q0, Q0, lab1, Q2);
      tile(Q0, Q0, lab1, -1);
    }
    for (int st : {Q1, Q2})
      for (int lab : {lab0, lab1}) {
        tile(pred, st, lab, Q1);
        tile(pred, st, lab, Q2);
        tile(pred, st, lab, -1);
      }
  }
  for (int lab : {lab0, lab1}) {
    tile(Q4, Q4, lab, Q4);
    tile(Q4, Q4, lab, -1);
  }

  // graph: grid cells row-major, then each cell's bit path
  auto bits_of = [](long value) {
    if (value == 0) return std::string("0");
    std::string b;
    for (long v = value; v > 0; v >>= 1) b.push_back('0' + (v & 1));
    std::reverse(b.begin(), b.end());
    return b;
  };
  std::vector<int> labels;
  std::vector<EdgeSpec> edges;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) labels.push_back(labX);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j + 1 < n; ++j)
      edges.push_back({kRight, grid_vertex(n, i, j), grid_vertex(n, i, j + 1)});
  for (int i = 0; i + 1 < n; ++i)
    for (int j = 0; j < n; ++j)
      edges.push_back({kDown, grid_vertex(n, i, j), grid_vertex(n, i + 1, j)});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::string bits = bits_of(matrix[i][j]);
      int prev = grid_vertex(n, i, j);
      for (char c : bits) {
        int v = static_cast<int>(labels.size());
        labels.push_back(c == '0' ? lab0 : lab1);
        edges.push_back({succ, prev, v});
        prev = v;
      }
    }
  Graph g = build_graph(sig, labels, edges);
  return {std::move(ts), std::move(g)};
}

mpz_class permanent_oracle(const std::vector<std::vector<int>>& matrix) {
  const int n = static_cast<int>(matrix.size());
  if (n > 9) throw ResourceError("permanent oracle is limited to 9x9 matrices");
  for (const auto& row : matrix)
    if (static_cast<int>(row.size()) != n) throw ValidationError("matrix must be square");
  std::vector<std::vector<long>> m(n, std::vector<long>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = matrix[i][j];
  return natural_permanent_oracle(m);
}

mpz_class natural_permanent_oracle(const std::vector<std::vector<long>>& matrix) {
  const int n = static_cast<int>(matrix.size());
  if (n > 9) throw ResourceError("permanent oracle is limited to 9x9 matrices");
  for (const auto& row : matrix)
    if (static_cast<int>(row.size()) != n) throw ValidationError("matrix must be square");
  mpz_class total = 0;
  std::vector<int> cols(n);
  for (int j = 0; j < n; ++j) cols[j] = j;
  // iterate permutations in lexicographic order
  do {
    mpz_class prod = 1;
    for (int i = 0; i < n; ++i) prod *= matrix[i][cols[i]];
    total += prod;
  } while (std::next_permutation(cols.begin(), cols.end()));
  return total;
}

int clique_oracle(const std::vector<std::vector<bool>>& adjacency) {
  const int n = static_cast<int>(adjacency.size());
  if (n > 10) throw ResourceError("clique oracle is limited to 10 vertices");
  for (const auto& row : adjacency)
    if (static_cast<int>(row.size()) != n) throw ValidationError("adjacency must be square");
  int best = 0;
  for (std::uint32_t subset = 0; subset < (1u << n); ++subset) {
    bool ok = true;
    int size = 0;
    for (int i = 0; i < n && ok; ++i) {
      if (!((subset >> i) & 1)) continue;
      ++size;
      for (int j = i + 1; j < n && ok; ++j)
        if (((subset >> j) & 1) && !adjacency[i][j]) ok = false;
    }
    if (ok) best = std::max(best, size);
  }
  return best;
}

mpz_class count_sat_oracle(const Cnf& cnf) {
  if (cnf.num_vars > 20) throw ResourceError("truth-table oracle is limited to 20 variables");
  mpz_class count = 0;
  for (std::uint64_t assign = 0; assign < (1ull << cnf.num_vars); ++assign) {
    bool sat = true;
    for (const auto& cl : cnf.clauses) {
      bool clause_true = false;
      for (int lit : cl) {
        bool v = (assign >> (std::abs(lit) - 1)) & 1;
        if ((lit > 0 && v) || (lit < 0 && !v)) {
          clause_true = true;
          break;
        }
      }
      if (!clause_true) {
        sat = false;
        break;
      }
    }
    if (sat) ++count;
  }
  return count;
}

}  // namespace wts
