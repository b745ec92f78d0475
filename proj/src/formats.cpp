#include "formats.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

namespace wts {

using json = nlohmann::ordered_json;

namespace {

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const std::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

const json& need(const json& j, const char* field) {
  if (!j.is_object() || !j.contains(field))
    throw ParseError(std::string("missing field \"") + field + "\"");
  return j.at(field);
}

std::string need_string(const json& j, const char* field) {
  const json& v = need(j, field);
  if (!v.is_string()) throw ParseError(std::string("field \"") + field + "\" must be a string");
  return v.get<std::string>();
}

int need_int(const json& j, const char* field) {
  const json& v = need(j, field);
  if (!v.is_number_integer()) throw ParseError(std::string("field \"") + field + "\" must be an integer");
  return v.get<int>();
}

std::vector<std::string> need_string_array(const json& j, const char* field) {
  const json& v = need(j, field);
  if (!v.is_array()) throw ParseError(std::string("field \"") + field + "\" must be an array");
  std::vector<std::string> out;
  for (const auto& e : v) {
    if (!e.is_string()) throw ParseError(std::string("field \"") + field + "\" must hold strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

}  // namespace

std::string graph_to_json(const Graph& g) {
  json j;
  j["sigma"] = g.signature().sigma;
  j["gamma"] = g.signature().gamma;
  json vertices = json::array();
  for (int v = 0; v < g.vertex_count(); ++v)
    vertices.push_back({{"id", v}, {"label", g.label_name(v)}});
  j["vertices"] = std::move(vertices);
  json edges = json::array();
  for (const auto& e : g.edges())
    edges.push_back(
        {{"name", g.signature().gamma[e.name]}, {"src", e.src}, {"dst", e.dst}});
  j["edges"] = std::move(edges);
  return j.dump(2) + "\n";
}

Graph graph_from_json(const std::string& text) {
  json j = parse_json(text);
  Signature sig = make_signature(need_string_array(j, "gamma"), need_string_array(j, "sigma"));
  const json& vs = need(j, "vertices");
  if (!vs.is_array()) throw ParseError("\"vertices\" must be an array");
  std::vector<int> labels(vs.size(), -1);
  for (const auto& v : vs) {
    int id = need_int(v, "id");
    if (id < 0 || id >= static_cast<int>(vs.size()))
      throw ParseError("vertex ids must be dense 0..n-1, got " + std::to_string(id));
    if (labels[id] != -1) throw ParseError("duplicate vertex id " + std::to_string(id));
    labels[id] = sig.label_index(need_string(v, "label"));
  }
  const json& es = need(j, "edges");
  if (!es.is_array()) throw ParseError("\"edges\" must be an array");
  std::vector<EdgeSpec> edges;
  for (const auto& e : es)
    edges.push_back({sig.name_index(need_string(e, "name")), need_int(e, "src"), need_int(e, "dst")});
  return build_graph(std::move(sig), std::move(labels), edges);
}

std::string wts_to_json(const TilingSystem& ts) {
  json j;
  j["semiring"] = ts.semiring().name();
  j["sigma"] = ts.signature().sigma;
  j["gamma"] = ts.signature().gamma;
  j["states"] = ts.states();
  json tiles = json::array();
  for (size_t i = 0; i < ts.tiles().size(); ++i) {
    const Tile& t = ts.tiles()[i];
    json in = json::object(), out = json::object();
    for (const auto& [nm, st] : t.fin) in[ts.signature().gamma[nm]] = ts.states()[st];
    for (const auto& [nm, st] : t.fout) out[ts.signature().gamma[nm]] = ts.states()[st];
    tiles.push_back({{"in", std::move(in)},
                     {"state", ts.states()[t.state]},
                     {"label", ts.signature().sigma[t.label]},
                     {"out", std::move(out)},
                     {"weight", ts.semiring().render(ts.tile_weight(static_cast<int>(i)))}});
  }
  j["tiles"] = std::move(tiles);
  return j.dump(2) + "\n";
}

TilingSystem wts_from_json(const std::string& text) {
  json j = parse_json(text);
  Signature sig = make_signature(need_string_array(j, "gamma"), need_string_array(j, "sigma"));
  Semiring sr = make_semiring(need_string(j, "semiring"));
  TilingSystem ts(sig, sr.id(), need_string_array(j, "states"));
  const json& tiles = need(j, "tiles");
  if (!tiles.is_array()) throw ParseError("\"tiles\" must be an array");
  for (const auto& tj : tiles) {
    Tile t;
    t.state = ts.state_index(need_string(tj, "state"));
    t.label = sig.label_index(need_string(tj, "label"));
    auto read_map = [&](const char* field, std::vector<std::pair<int, int>>& m) {
      const json& mj = need(tj, field);
      if (!mj.is_object()) throw ParseError(std::string("tile \"") + field + "\" must be an object");
      for (const auto& [nm, st] : mj.items()) {
        if (!st.is_string()) throw ParseError("tile map values must be state names");
        m.push_back({sig.name_index(nm), ts.state_index(st.get<std::string>())});
      }
    };
    read_map("in", t.fin);
    read_map("out", t.fout);
    Weight w = sr.parse(need_string(tj, "weight"));
    ts.add_tile(std::move(t), std::move(w));
  }
  return ts;
}

namespace {

json op_to_json(const Signature& sig, const TermOp& op) {
  switch (op.kind) {
    case TermOp::Kind::Node:
      return {{"op", "node"}, {"color", op.color}, {"label", sig.sigma.at(op.label)}};
    case TermOp::Kind::Add:
      return {{"op", "add"}, {"name", sig.gamma.at(op.name)}, {"src", op.src}, {"dst", op.dst}};
    case TermOp::Kind::Forget:
      return {{"op", "forget"}, {"color", op.color}};
  }
  throw ValidationError("corrupt op");
}

// Signature synthesis for term files: labels and names indexed in order of
// first appearance.
struct SigBuilder {
  std::vector<std::string> gamma, sigma;
  int label(const std::string& l) {
    for (size_t i = 0; i < sigma.size(); ++i)
      if (sigma[i] == l) return static_cast<int>(i);
    sigma.push_back(l);
    return static_cast<int>(sigma.size()) - 1;
  }
  int name(const std::string& n) {
    for (size_t i = 0; i < gamma.size(); ++i)
      if (gamma[i] == n) return static_cast<int>(i);
    gamma.push_back(n);
    return static_cast<int>(gamma.size()) - 1;
  }
  Signature finish() {
    if (gamma.empty()) gamma.push_back("e");
    if (sigma.empty()) sigma.push_back("a");
    return make_signature(std::move(gamma), std::move(sigma));
  }
};

TermOp op_from_json(const json& oj, SigBuilder& sb) {
  std::string kind = need_string(oj, "op");
  if (kind == "node") return op_node(need_int(oj, "color"), sb.label(need_string(oj, "label")));
  if (kind == "add")
    return op_add(sb.name(need_string(oj, "name")), need_int(oj, "src"), need_int(oj, "dst"));
  if (kind == "forget") return op_forget(need_int(oj, "color"));
  throw ParseError("unknown op \"" + kind + "\"");
}

}  // namespace

std::string kword_to_json(const KWord& w) {
  json j;
  j["k"] = w.k;
  json ops = json::array();
  for (const auto& op : w.ops) ops.push_back(op_to_json(w.sig, op));
  j["ops"] = std::move(ops);
  return j.dump(2) + "\n";
}

KWord kword_from_json(const std::string& text) {
  json j = parse_json(text);
  KWord w;
  w.k = need_int(j, "k");
  if (w.k < 0) throw ParseError("k must be nonnegative");
  const json& ops = need(j, "ops");
  if (!ops.is_array()) throw ParseError("\"ops\" must be an array");
  SigBuilder sb;
  for (const auto& oj : ops) w.ops.push_back(op_from_json(oj, sb));
  w.sig = sb.finish();
  for (const auto& op : w.ops)
    if ((op.kind == TermOp::Kind::Node && op.color > w.k) ||
        (op.kind == TermOp::Kind::Forget && op.color > w.k) ||
        (op.kind == TermOp::Kind::Add && (op.src > w.k || op.dst > w.k)))
      throw ParseError("op uses a color beyond k");
  return w;
}

namespace {

json ktt_node_to_json(const KTreeTerm& t, int id) {
  // iterative bottom-up rendering
  std::vector<json> rendered(t.nodes.size());
  for (int nid : ktt_postorder(t)) {
    const auto& n = t.nodes[nid];
    switch (n.kind) {
      case KTreeTerm::Node::Kind::Leaf:
        rendered[nid] = {{"op", "node"}, {"color", n.color}, {"label", t.sig.sigma.at(n.label)}};
        break;
      case KTreeTerm::Node::Kind::Add:
        rendered[nid] = {{"op", "add"},
                         {"name", t.sig.gamma.at(n.name)},
                         {"src", n.src},
                         {"dst", n.dst},
                         {"child", std::move(rendered[n.child0])}};
        break;
      case KTreeTerm::Node::Kind::Forget:
        rendered[nid] = {{"op", "forget"}, {"color", n.color}, {"child", std::move(rendered[n.child0])}};
        break;
      case KTreeTerm::Node::Kind::Union:
        rendered[nid] = {{"op", "union"},
                         {"left", std::move(rendered[n.child0])},
                         {"right", std::move(rendered[n.child1])}};
        break;
    }
  }
  return rendered[id];
}

int ktt_node_from_json(const json& nj, KTreeTerm& t, SigBuilder& sb) {
  std::string kind = need_string(nj, "op");
  if (kind == "node")
    return ktt_make_leaf(t, need_int(nj, "color"), sb.label(need_string(nj, "label")));
  if (kind == "add") {
    int child = ktt_node_from_json(need(nj, "child"), t, sb);
    return ktt_make_add(t, sb.name(need_string(nj, "name")), need_int(nj, "src"),
                        need_int(nj, "dst"), child);
  }
  if (kind == "forget") {
    int child = ktt_node_from_json(need(nj, "child"), t, sb);
    return ktt_make_forget(t, need_int(nj, "color"), child);
  }
  if (kind == "union") {
    int left = ktt_node_from_json(need(nj, "left"), t, sb);
    int right = ktt_node_from_json(need(nj, "right"), t, sb);
    return ktt_make_union(t, left, right);
  }
  throw ParseError("unknown op \"" + kind + "\"");
}

}  // namespace

std::string ktt_to_json(const KTreeTerm& t) {
  if (t.root < 0) throw ValidationError("term has no root");
  return ktt_node_to_json(t, t.root).dump(2) + "\n";
}

KTreeTerm ktt_from_json(const std::string& text) {
  json j = parse_json(text);
  KTreeTerm t;
  SigBuilder sb;
  t.root = ktt_node_from_json(j, t, sb);
  t.sig = sb.finish();
  int max_color = 0;
  for (const auto& n : t.nodes) {
    if (n.color >= 0) max_color = std::max(max_color, n.color);
    max_color = std::max({max_color, n.src, n.dst});
  }
  t.k = max_color;
  return t;
}

std::string path_decomposition_to_json(const PathDecomposition& pd) {
  json j;
  j["bags"] = pd.bags;
  return j.dump(2) + "\n";
}

PathDecomposition path_decomposition_from_json(const std::string& text) {
  json j = parse_json(text);
  const json& bags = need(j, "bags");
  if (!bags.is_array()) throw ParseError("\"bags\" must be an array");
  PathDecomposition pd;
  for (const auto& b : bags) {
    if (!b.is_array()) throw ParseError("each bag must be an array of vertex ids");
    std::vector<int> bag;
    for (const auto& v : b) {
      if (!v.is_number_integer()) throw ParseError("bag entries must be integers");
      bag.push_back(v.get<int>());
    }
    std::sort(bag.begin(), bag.end());
    pd.bags.push_back(std::move(bag));
  }
  return pd;
}

std::string tree_decomposition_to_json(const TreeDecomposition& td) {
  json j;
  json nodes = json::array();
  for (size_t i = 0; i < td.nodes.size(); ++i)
    nodes.push_back({{"id", static_cast<int>(i)},
                     {"bag", td.nodes[i].bag},
                     {"children", td.nodes[i].children}});
  j["nodes"] = std::move(nodes);
  j["root"] = td.root;
  return j.dump(2) + "\n";
}

TreeDecomposition tree_decomposition_from_json(const std::string& text) {
  json j = parse_json(text);
  const json& nodes = need(j, "nodes");
  if (!nodes.is_array()) throw ParseError("\"nodes\" must be an array");
  TreeDecomposition td;
  td.nodes.resize(nodes.size());
  std::vector<bool> seen(nodes.size(), false);
  for (const auto& nj : nodes) {
    int id = need_int(nj, "id");
    if (id < 0 || id >= static_cast<int>(nodes.size()))
      throw ParseError("node ids must be dense 0..n-1");
    if (seen[id]) throw ParseError("duplicate node id " + std::to_string(id));
    seen[id] = true;
    const json& bag = need(nj, "bag");
    if (!bag.is_array()) throw ParseError("\"bag\" must be an array");
    for (const auto& v : bag) {
      if (!v.is_number_integer()) throw ParseError("bag entries must be integers");
      td.nodes[id].bag.push_back(v.get<int>());
    }
    std::sort(td.nodes[id].bag.begin(), td.nodes[id].bag.end());
    const json& ch = need(nj, "children");
    if (!ch.is_array()) throw ParseError("\"children\" must be an array");
    for (const auto& c : ch) {
      if (!c.is_number_integer()) throw ParseError("children entries must be integers");
      td.nodes[id].children.push_back(c.get<int>());
    }
  }
  td.root = need_int(j, "root");
  return td;
}

std::string word_automaton_to_json(const WeightedWordAutomaton& b) {
  json j;
  j["semiring"] = b.semiring.name();
  j["states"] = b.states;
  j["alphabet"] = b.alphabet;
  json initial = json::array(), fin = json::array();
  for (int q : b.initial) initial.push_back(b.states[q]);
  for (int q : b.final_states) fin.push_back(b.states[q]);
  j["initial"] = std::move(initial);
  j["final"] = std::move(fin);
  json trans = json::array();
  for (const auto& [key, list] : b.transitions)
    for (const auto& [to, w] : list)
      trans.push_back({{"from", b.states[key.first]},
                       {"letter", b.alphabet[key.second]},
                       {"to", b.states[to]},
                       {"weight", b.semiring.render(w)}});
  j["transitions"] = std::move(trans);
  return j.dump(2) + "\n";
}

std::string tree_automaton_to_json(const WeightedTreeAutomaton& b) {
  json j;
  j["semiring"] = b.semiring.name();
  j["states"] = b.states;
  json alphabet = json::array();
  for (const auto& [l, arity] : b.alphabet)
    alphabet.push_back({{"letter", l}, {"arity", arity}});
  j["alphabet"] = std::move(alphabet);
  json fin = json::array();
  for (int q : b.final_states) fin.push_back(b.states[q]);
  j["final"] = std::move(fin);
  json trans = json::array();
  for (const auto& [l, list] : b.leaf_transitions)
    for (const auto& [to, w] : list)
      trans.push_back({{"from", json::array()},
                       {"letter", b.alphabet[l].first},
                       {"to", b.states[to]},
                       {"weight", b.semiring.render(w)}});
  for (const auto& [key, list] : b.unary_transitions)
    for (const auto& [to, w] : list)
      trans.push_back({{"from", {b.states[key.second]}},
                       {"letter", b.alphabet[key.first].first},
                       {"to", b.states[to]},
                       {"weight", b.semiring.render(w)}});
  for (const auto& [key, list] : b.binary_transitions)
    for (const auto& [to, w] : list)
      trans.push_back({{"from", {b.states[std::get<1>(key)], b.states[std::get<2>(key)]}},
                       {"letter", b.alphabet[std::get<0>(key)].first},
                       {"to", b.states[to]},
                       {"weight", b.semiring.render(w)}});
  j["transitions"] = std::move(trans);
  return j.dump(2) + "\n";
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ParseError("cannot open \"" + path + "\"");
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ParseError("cannot open \"" + path + "\" for writing");
  f << content;
  if (!f) throw ParseError("write to \"" + path + "\" failed");
}

}  // namespace wts
