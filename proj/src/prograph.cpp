#include "svyt/prograph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace svyt {

namespace {

void check_params(int arity, int inputs) {
  if (arity < 2) throw std::invalid_argument("arity must be at least 2");
  if (inputs < 1) throw std::invalid_argument("need at least one input strand");
}

}  // namespace

ExpandedPrograph expand(int arity, int inputs,
                        const std::vector<PrographOp>& word) {
  check_params(arity, inputs);
  ExpandedPrograph g;
  g.arity = arity;
  g.inputs = inputs;
  std::vector<int> frontier(inputs);
  for (int i = 0; i < inputs; ++i) {
    frontier[i] = i;
    g.input_edges.push_back(i);
    g.producer.push_back(-1);
    g.consumer.push_back(-1);
  }
  g.edge_count = inputs;
  auto new_edge = [&](int node) {
    g.producer.push_back(node);
    g.consumer.push_back(-1);
    return g.edge_count++;
  };
  for (const PrographOp& op : word) {
    int node = static_cast<int>(g.nodes.size());
    ExpandedPrograph::Node n;
    int size = static_cast<int>(frontier.size());
    if (op.kind == 'C') {
      if (op.pos < 1 || op.pos > size)
        throw std::invalid_argument("coproduct position out of range");
      n.is_product = false;
      n.in.push_back(frontier[op.pos - 1]);
      g.consumer[frontier[op.pos - 1]] = node;
      std::vector<int> outs;
      for (int i = 0; i < arity; ++i) outs.push_back(new_edge(node));
      n.out = outs;
      frontier.erase(frontier.begin() + (op.pos - 1));
      frontier.insert(frontier.begin() + (op.pos - 1), outs.begin(),
                      outs.end());
    } else if (op.kind == 'P') {
      if (op.pos < 1 || op.pos + arity - 1 > size)
        throw std::invalid_argument("product position out of range");
      n.is_product = true;
      for (int i = 0; i < arity; ++i) {
        int e = frontier[op.pos - 1 + i];
        n.in.push_back(e);
        g.consumer[e] = node;
      }
      int out = new_edge(node);
      n.out.push_back(out);
      frontier.erase(frontier.begin() + (op.pos - 1),
                     frontier.begin() + (op.pos - 1 + arity));
      frontier.insert(frontier.begin() + (op.pos - 1), out);
    } else {
      throw std::invalid_argument("unknown op kind");
    }
    g.nodes.push_back(std::move(n));
  }
  g.output_edges = frontier;
  return g;
}

ExpandedPrograph expand(const Prograph& g) {
  return expand(g.arity(), g.inputs(), g.word());
}

bool validate_graph(const ExpandedPrograph& g, std::string* why) {
  auto fail = [&](const std::string& reason) {
    if (why) *why = reason;
    return false;
  };
  if (g.arity < 2) return fail("arity must be at least 2");
  if (g.inputs < 1) return fail("need at least one input strand");
  if (g.edge_count != static_cast<int>(g.producer.size()) ||
      g.edge_count != static_cast<int>(g.consumer.size()))
    return fail("edge table sizes disagree");
  // Producer/consumer tables must match node ports and strand lists exactly.
  std::vector<int> prod(g.edge_count, -2), cons(g.edge_count, -2);
  if (static_cast<int>(g.input_edges.size()) != g.inputs)
    return fail("input strand list has wrong length");
  for (int e : g.input_edges) {
    if (e < 0 || e >= g.edge_count) return fail("input edge id out of range");
    if (prod[e] != -2) return fail("edge has two producers");
    prod[e] = -1;
  }
  for (size_t v = 0; v < g.nodes.size(); ++v) {
    const auto& n = g.nodes[v];
    size_t want_in = n.is_product ? g.arity : 1;
    size_t want_out = n.is_product ? 1 : g.arity;
    if (n.in.size() != want_in || n.out.size() != want_out)
      return fail("node has wrong port count");
    for (int e : n.out) {
      if (e < 0 || e >= g.edge_count) return fail("edge id out of range");
      if (prod[e] != -2) return fail("edge has two producers");
      prod[e] = static_cast<int>(v);
    }
    for (int e : n.in) {
      if (e < 0 || e >= g.edge_count) return fail("edge id out of range");
      if (cons[e] != -2) return fail("edge has two consumers");
      cons[e] = static_cast<int>(v);
    }
  }
  for (int e : g.output_edges) {
    if (e < 0 || e >= g.edge_count) return fail("output edge id out of range");
    if (cons[e] != -2) return fail("edge has two consumers");
    cons[e] = -1;
  }
  for (int e = 0; e < g.edge_count; ++e) {
    if (prod[e] == -2) return fail("edge " + std::to_string(e) + " never produced");
    if (cons[e] == -2) return fail("edge " + std::to_string(e) + " never consumed");
    if (prod[e] != g.producer[e] || cons[e] != g.consumer[e])
      return fail("producer/consumer tables inconsistent with ports");
  }
  // Replay the construction: each node must consume consecutive strands of
  // the frontier current at its position in the node order.
  std::vector<int> frontier = g.input_edges;
  for (size_t v = 0; v < g.nodes.size(); ++v) {
    const auto& n = g.nodes[v];
    auto it = std::search(frontier.begin(), frontier.end(), n.in.begin(),
                          n.in.end());
    if (it == frontier.end())
      return fail("node " + std::to_string(v) +
                  " does not consume consecutive frontier strands");
    size_t at = static_cast<size_t>(it - frontier.begin());
    frontier.erase(frontier.begin() + at, frontier.begin() + at + n.in.size());
    frontier.insert(frontier.begin() + at, n.out.begin(), n.out.end());
  }
  if (frontier != g.output_edges)
    return fail("final frontier does not match output strand list");
  return true;
}

std::vector<PrographOp> canonical_word(const ExpandedPrograph& g) {
  std::vector<int> frontier = g.input_edges;
  std::vector<char> fired(g.nodes.size(), 0);
  std::vector<PrographOp> word;
  size_t remaining = g.nodes.size();
  std::vector<int> pos_of_edge(g.edge_count);
  while (remaining > 0) {
    std::fill(pos_of_edge.begin(), pos_of_edge.end(), -1);
    for (size_t i = 0; i < frontier.size(); ++i)
      pos_of_edge[frontier[i]] = static_cast<int>(i);
    int best_node = -1;
    int best_pos = -1;
    for (size_t v = 0; v < g.nodes.size(); ++v) {
      if (fired[v]) continue;
      int leftmost = -1;
      bool ready = true;
      for (int e : g.nodes[v].in) {
        int p = pos_of_edge[e];
        if (p < 0) {
          ready = false;
          break;
        }
        if (leftmost < 0 || p < leftmost) leftmost = p;
      }
      if (!ready) continue;
      if (best_node < 0 || leftmost < best_pos) {
        best_node = static_cast<int>(v);
        best_pos = leftmost;
      }
    }
    if (best_node < 0)
      throw std::logic_error("no fireable node; graph is not well-formed");
    const auto& n = g.nodes[best_node];
    // Inputs of a ready node are consecutive in the frontier by planarity.
    for (size_t i = 0; i < n.in.size(); ++i)
      if (frontier[best_pos + i] != n.in[i])
        throw std::logic_error("ready node inputs not consecutive");
    word.push_back(PrographOp{n.is_product ? 'P' : 'C', best_pos + 1});
    frontier.erase(frontier.begin() + best_pos,
                   frontier.begin() + best_pos + n.in.size());
    frontier.insert(frontier.begin() + best_pos, n.out.begin(), n.out.end());
    fired[best_node] = 1;
    --remaining;
  }
  return word;
}

Prograph::Prograph(int arity, int inputs, std::vector<PrographOp> word)
    : arity_(arity), inputs_(inputs) {
  word_ = canonical_word(expand(arity, inputs, word));
}

int Prograph::coproducts() const {
  return static_cast<int>(
      std::count_if(word_.begin(), word_.end(),
                    [](const PrographOp& op) { return op.kind == 'C'; }));
}

int Prograph::products() const {
  return static_cast<int>(word_.size()) - coproducts();
}

int Prograph::outputs() const {
  return inputs_ + (coproducts() - products()) * (arity_ - 1);
}

int Prograph::edge_count() const {
  return inputs_ + coproducts() * arity_ + products();
}

namespace {

EdgeLabelling run_search(const ExpandedPrograph& g, bool xfold) {
  if (!xfold && g.inputs != 1)
    throw std::invalid_argument(
        "depth_left_search needs a single input strand; use the x-fold search");
  EdgeLabelling lab;
  lab.label_of_edge.assign(g.edge_count, -1);
  lab.edge_of_label.assign(g.edge_count, -1);
  int next = 0;
  auto assign = [&](int edge) {
    lab.label_of_edge[edge] = next;
    lab.edge_of_label[next] = edge;
    ++next;
  };
  assign(g.input_edges[0]);
  int unlabelled_input = 1;
  while (next < g.edge_count) {
    // Nodes whose inputs are all labelled and with an unlabelled output,
    // keyed by their highest-labelled incoming edge.
    int best_node = -1;
    int best_key = -1;
    for (size_t v = 0; v < g.nodes.size(); ++v) {
      const auto& n = g.nodes[v];
      int key = -1;
      bool ready = true;
      for (int e : n.in) {
        int l = lab.label_of_edge[e];
        if (l < 0) {
          ready = false;
          break;
        }
        key = std::max(key, l);
      }
      if (!ready) continue;
      bool has_unlabelled_out = false;
      for (int e : n.out)
        if (lab.label_of_edge[e] < 0) {
          has_unlabelled_out = true;
          break;
        }
      if (!has_unlabelled_out) continue;
      if (key > best_key) {
        best_key = key;
        best_node = static_cast<int>(v);
      }
    }
    if (best_node >= 0) {
      for (int e : g.nodes[best_node].out)
        if (lab.label_of_edge[e] < 0) {
          assign(e);
          break;
        }
      continue;
    }
    if (xfold && unlabelled_input < g.inputs) {
      assign(g.input_edges[unlabelled_input++]);
      continue;
    }
    throw std::logic_error("search stalled before labelling every edge");
  }
  return lab;
}

}  // namespace

EdgeLabelling depth_left_search(const ExpandedPrograph& g) {
  return run_search(g, false);
}

EdgeLabelling depth_left_search(const Prograph& g) {
  return run_search(expand(g), false);
}

EdgeLabelling xfold_depth_left_search(const ExpandedPrograph& g) {
  return run_search(g, true);
}

EdgeLabelling xfold_depth_left_search(const Prograph& g) {
  return run_search(expand(g), true);
}

int output_strand_count(int k, int n, int m, int x) {
  if (k < 2 || n < 0 || m < 0 || x < 1)
    throw std::invalid_argument("bad prograph parameters");
  int y = (n - m) * (k - 1) + x;
  if (y < 1)
    throw std::invalid_argument("no such prograph: it would have " +
                                std::to_string(y) + " output strands");
  return y;
}

std::vector<PrographOp> rotated_word(int arity, int inputs,
                                     const std::vector<PrographOp>& word) {
  check_params(arity, inputs);
  // Frontier sizes before each op.
  std::vector<int> size_before(word.size());
  int size = inputs;
  for (size_t i = 0; i < word.size(); ++i) {
    size_before[i] = size;
    size += word[i].kind == 'C' ? arity - 1 : -(arity - 1);
  }
  std::vector<PrographOp> out;
  for (size_t i = word.size(); i-- > 0;) {
    int s = size_before[i];
    if (word[i].kind == 'C')
      out.push_back(PrographOp{'P', s + 1 - word[i].pos});
    else
      out.push_back(PrographOp{'C', s - arity + 2 - word[i].pos});
  }
  return out;
}

Prograph rotate(const Prograph& g) {
  return Prograph(g.arity(), g.outputs(),
                  rotated_word(g.arity(), g.inputs(), g.word()));
}

std::vector<int> rotation_edge_map(const ExpandedPrograph& g,
                                   const ExpandedPrograph& rg) {
  // Node j of g corresponds to node T-1-j of rg; its inputs become the
  // corresponding node's outputs in reverse port order, and vice versa.
  int t = static_cast<int>(g.nodes.size());
  std::vector<int> map(g.edge_count, -1);
  for (int e = 0; e < g.edge_count; ++e) {
    int c = g.consumer[e];
    if (c >= 0) {
      const auto& n = g.nodes[c];
      size_t port =
          std::find(n.in.begin(), n.in.end(), e) - n.in.begin();
      const auto& rn = rg.nodes[t - 1 - c];
      map[e] = rn.out[n.in.size() - 1 - port];
    } else {
      const auto& outs = g.output_edges;
      size_t port = std::find(outs.begin(), outs.end(), e) - outs.begin();
      map[e] = rg.input_edges[outs.size() - 1 - port];
    }
  }
  return map;
}

Prograph justify(const Prograph& g) {
  int k = g.arity();
  int x = g.inputs();
  if ((x - 1) % (k - 1) != 0)
    throw std::invalid_argument("justification needs x = 1 mod (k-1)");
  int q = (x - 1) / (k - 1);
  int y = g.outputs();
  int p = (y - 1) / (k - 1);
  std::vector<PrographOp> word;
  for (int i = 0; i < q; ++i) word.push_back(PrographOp{'C', 1});
  word.insert(word.end(), g.word().begin(), g.word().end());
  for (int s = y; s >= k; s -= k - 1) word.push_back(PrographOp{'P', s - k + 1});
  Prograph out(k, 1, std::move(word));
  if (out.outputs() != 1 || out.products() != g.products() + p)
    throw std::logic_error("justification did not close the graph");
  return out;
}

Prograph unjustify(const Prograph& g, int x, int y) {
  int k = g.arity();
  if (g.inputs() != 1 || g.outputs() != 1)
    throw std::invalid_argument("unjustify needs a closed prograph");
  if (x < 1 || (x - 1) % (k - 1) != 0 || y < 1 || (y - 1) % (k - 1) != 0)
    throw std::invalid_argument("x and y must be 1 mod (k-1)");
  int q = (x - 1) / (k - 1);
  int p = (y - 1) / (k - 1);
  int total = static_cast<int>(g.word().size());
  if (q + p > total)
    throw std::invalid_argument("not in the image of justify: too few nodes");
  for (int i = 0; i < q; ++i)
    if (g.word()[i] != PrographOp{'C', 1})
      throw std::invalid_argument(
          "not in the image of justify: missing left-aligned coproducts");
  // Suffix must be right-aligned products; frontier sizes determine where.
  int size = 1;
  std::vector<int> size_before(total);
  for (int i = 0; i < total; ++i) {
    size_before[i] = size;
    size += g.word()[i].kind == 'C' ? k - 1 : -(k - 1);
  }
  for (int i = 0; i < p; ++i) {
    const PrographOp& op = g.word()[total - p + i];
    if (op != PrographOp{'P', size_before[total - p + i] - k + 1})
      throw std::invalid_argument(
          "not in the image of justify: missing right-aligned products");
  }
  std::vector<PrographOp> middle(g.word().begin() + q,
                                 g.word().end() - p);
  Prograph out(k, x, std::move(middle));
  if (out.outputs() != y)
    throw std::invalid_argument("stripped graph does not have y outputs");
  if (justify(out) != g)
    throw std::logic_error("unjustify round-trip failed");
  return out;
}

Prograph left_weighted_justify(const Prograph& g) {
  int k = g.arity();
  int x = g.inputs();
  int a = x % (k - 1) == 0 ? k - 1 : x % (k - 1);
  if (a == 1)
    throw std::invalid_argument(
        "x = 1 mod (k-1): use justify, not the left-weighted variant");
  std::vector<PrographOp> shifted = g.word();
  for (PrographOp& op : shifted) op.pos += k - a;
  return justify(Prograph(k, x + k - a, std::move(shifted)));
}

namespace {

struct EnumState {
  int k, n, m, x;
  std::function<bool(const Prograph&)> const* visit;
  std::vector<PrographOp> word;
  bool stopped = false;
};

// Depth-first over valid words; a leaf is emitted only when it equals its own
// canonicalization, so each plane class surfaces exactly once.  The adjacent
// inversion test prunes most non-canonical prefixes early: an op whose whole
// interval lies strictly left of its predecessor's position is independent of
// it and would have fired first under the greedy order.  (An op to the right
// always maps back to a position past its predecessor's, so only the left
// side can invert.)
bool prefix_ok(const EnumState& st) {
  size_t i = st.word.size();
  if (i < 2) return true;
  const PrographOp& prev = st.word[i - 2];
  const PrographOp& cur = st.word[i - 1];
  int cur_consumed = cur.kind == 'C' ? 1 : st.k;
  return cur.pos + cur_consumed - 1 >= prev.pos;
}

void enum_rec(EnumState& st, int coproducts_left, int products_left,
              int frontier) {
  if (st.stopped) return;
  if (coproducts_left == 0 && products_left == 0) {
    Prograph g(st.k, st.x, st.word);
    if (g.word() == st.word)
      if (!(*st.visit)(g)) st.stopped = true;
    return;
  }
  if (coproducts_left > 0) {
    for (int pos = 1; pos <= frontier && !st.stopped; ++pos) {
      st.word.push_back(PrographOp{'C', pos});
      if (prefix_ok(st))
        enum_rec(st, coproducts_left - 1, products_left, frontier + st.k - 1);
      st.word.pop_back();
    }
  }
  if (products_left > 0 && frontier >= st.k) {
    for (int pos = 1; pos + st.k - 1 <= frontier && !st.stopped; ++pos) {
      st.word.push_back(PrographOp{'P', pos});
      if (prefix_ok(st))
        enum_rec(st, coproducts_left, products_left - 1, frontier - st.k + 1);
      st.word.pop_back();
    }
  }
}

}  // namespace

void for_each_prograph(int k, int n, int m, int x,
                       const std::function<bool(const Prograph&)>& visit,
                       const PrographEnumLimits& limits) {
  output_strand_count(k, n, m, x);  // validates parameters
  if (n + m > limits.max_nodes)
    throw BudgetExceeded("prograph enumeration budget exceeded: " +
                         std::to_string(n + m) + " nodes, cap " +
                         std::to_string(limits.max_nodes));
  EnumState st;
  st.k = k;
  st.n = n;
  st.m = m;
  st.x = x;
  st.visit = &visit;
  enum_rec(st, n, m, x);
}

std::vector<Prograph> all_prographs(int k, int n, int m, int x,
                                    const PrographEnumLimits& limits) {
  std::vector<Prograph> out;
  for_each_prograph(
      k, n, m, x,
      [&](const Prograph& g) {
        out.push_back(g);
        return true;
      },
      limits);
  return out;
}

Int count_prographs(int k, int n, int m, int x,
                    const PrographEnumLimits& limits) {
  Int c = 0;
  for_each_prograph(
      k, n, m, x,
      [&](const Prograph&) {
        c += 1;
        return true;
      },
      limits);
  return c;
}

std::string to_text(const Prograph& g) {
  std::string out = "k=" + std::to_string(g.arity()) +
                    ";x=" + std::to_string(g.inputs()) + ";word=";
  for (size_t i = 0; i < g.word().size(); ++i) {
    if (i) out += ',';
    out += g.word()[i].kind;
    out += '@';
    out += std::to_string(g.word()[i].pos);
  }
  return out;
}

Prograph prograph_from_text(const std::string& text) {
  int k = -1, x = -1;
  std::vector<PrographOp> word;
  std::stringstream in(text);
  std::string field;
  bool saw_word = false;
  while (std::getline(in, field, ';')) {
    if (field.rfind("k=", 0) == 0)
      k = std::stoi(field.substr(2));
    else if (field.rfind("x=", 0) == 0)
      x = std::stoi(field.substr(2));
    else if (field.rfind("word=", 0) == 0) {
      saw_word = true;
      std::string rest = field.substr(5);
      if (!rest.empty()) {
        std::stringstream win(rest);
        std::string item;
        while (std::getline(win, item, ',')) {
          size_t at = item.find('@');
          if (at == std::string::npos || at == 0)
            throw std::invalid_argument("malformed op: " + item);
          char kind = item[0];
          if ((kind != 'C' && kind != 'P') || at != 1)
            throw std::invalid_argument("malformed op: " + item);
          word.push_back(PrographOp{kind, std::stoi(item.substr(at + 1))});
        }
      }
    } else {
      throw std::invalid_argument("unknown field: " + field);
    }
  }
  if (k < 0 || x < 0 || !saw_word)
    throw std::invalid_argument("prograph text needs k=, x= and word= fields");
  return Prograph(k, x, std::move(word));
}

std::string to_dot(const Prograph& g) {
  ExpandedPrograph e = expand(g);
  EdgeLabelling lab = xfold_depth_left_search(e);
  std::ostringstream out;
  out << "digraph prograph {\n  rankdir=BT;\n";
  for (int i = 0; i < e.inputs; ++i)
    out << "  in" << i << " [shape=point];\n";
  for (size_t v = 0; v < e.nodes.size(); ++v)
    out << "  n" << v << " [shape=" << (e.nodes[v].is_product ? "invtriangle" : "triangle")
        << ", label=\"\"];\n";
  for (size_t o = 0; o < e.output_edges.size(); ++o)
    out << "  out" << o << " [shape=point];\n";
  auto endpoint_name = [&](int node, int strand_kind, int idx) {
    std::ostringstream s;
    if (node >= 0)
      s << "n" << node;
    else
      s << (strand_kind == 0 ? "in" : "out") << idx;
    return s.str();
  };
  for (int edge = 0; edge < e.edge_count; ++edge) {
    int from = e.producer[edge];
    int to = e.consumer[edge];
    int in_idx = 0, out_idx = 0;
    if (from < 0)
      in_idx = static_cast<int>(std::find(e.input_edges.begin(),
                                          e.input_edges.end(), edge) -
                                e.input_edges.begin());
    if (to < 0)
      out_idx = static_cast<int>(std::find(e.output_edges.begin(),
                                           e.output_edges.end(), edge) -
                                 e.output_edges.begin());
    out << "  " << endpoint_name(from, 0, in_idx) << " -> "
        << endpoint_name(to, 1, out_idx) << " [label=\""
        << lab.label_of_edge[edge] << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace svyt
