#include "svyt/bijections.hpp"

#include <algorithm>
#include <stdexcept>

#include "svyt/counting.hpp"

namespace svyt {

namespace {

enum class RowClass { Top, Middle, Bottom, Ignored };

// Builds a three-row tableau from classified, sorted labels.
SetValuedTableau assemble_three_row(const SkewShape& shape, int k,
                                    std::vector<int> top,
                                    std::vector<int> middle,
                                    std::vector<int> bottom) {
  std::sort(top.begin(), top.end());
  std::sort(middle.begin(), middle.end());
  std::sort(bottom.begin(), bottom.end());
  Density density(std::vector<int>{1, k - 1, 1});
  std::vector<std::vector<std::vector<int>>> rows(shape.rows());
  auto fill_row = [&](int row, const std::vector<int>& values, int per_cell) {
    int cells = shape.row_end(row) - shape.row_begin(row);
    if (per_cell * cells != static_cast<int>(values.size()))
      throw std::logic_error("row content does not match shape");
    rows[row].resize(cells);
    for (int c = 0; c < cells; ++c)
      rows[row][c] = std::vector<int>(values.begin() + c * per_cell,
                                      values.begin() + (c + 1) * per_cell);
  };
  if (shape.rows() >= 1) fill_row(0, top, 1);
  if (shape.rows() >= 2) fill_row(1, middle, k - 1);
  if (shape.rows() >= 3) fill_row(2, bottom, 1);
  SetValuedTableau t(shape, density, std::move(rows));
  if (auto why = standardness_violation(t))
    throw std::logic_error("constructed tableau not standard: " + *why);
  return t;
}

RowClass classify_edge(const ExpandedPrograph& g, const EdgeLabelling& lab,
                       int edge) {
  if (lab.label_of_edge[edge] == 0) return RowClass::Ignored;
  int p = g.producer[edge];
  if (p < 0) return RowClass::Middle;  // non-leftmost initial input
  const auto& node = g.nodes[p];
  if (node.is_product) return RowClass::Bottom;
  return node.out[0] == edge ? RowClass::Top : RowClass::Middle;
}

}  // namespace

SetValuedTableau phi_k_tree(const Prograph& g) {
  if (g.inputs() != 1)
    throw std::invalid_argument("phi_k_tree needs a single input strand");
  if (g.products() != 0)
    throw std::invalid_argument("phi_k_tree is defined for coproduct-only prographs");
  int k = g.arity();
  int n = g.coproducts();
  if (n < 1) throw std::invalid_argument("tree must have at least one node");
  ExpandedPrograph e = expand(g);
  EdgeLabelling lab = depth_left_search(e);
  std::vector<int> top, bottom;
  for (int edge = 0; edge < e.edge_count; ++edge) {
    if (lab.label_of_edge[edge] == 0) continue;
    const auto& node = e.nodes[e.producer[edge]];
    if (node.out.back() == edge)
      bottom.push_back(lab.label_of_edge[edge]);
    else
      top.push_back(lab.label_of_edge[edge]);
  }
  std::sort(top.begin(), top.end());
  std::sort(bottom.begin(), bottom.end());
  SkewShape shape(Shape({n, n}));
  std::vector<std::vector<std::vector<int>>> rows(2);
  for (int c = 0; c < n; ++c) {
    rows[0].push_back(std::vector<int>(top.begin() + c * (k - 1),
                                       top.begin() + (c + 1) * (k - 1)));
    rows[1].push_back({bottom[c]});
  }
  SetValuedTableau t(shape, Density({k - 1, 1}), std::move(rows));
  if (auto why = standardness_violation(t))
    throw std::logic_error("phi_k image not standard: " + *why);
  return t;
}

SetValuedTableau phi(const Prograph& g) {
  if (g.inputs() != 1 || g.outputs() != 1)
    throw std::invalid_argument("phi is defined for closed prographs");
  int n = g.coproducts();
  ExpandedPrograph e = expand(g);
  EdgeLabelling lab = depth_left_search(e);
  std::vector<int> top, middle, bottom;
  for (int edge = 0; edge < e.edge_count; ++edge) {
    switch (classify_edge(e, lab, edge)) {
      case RowClass::Top: top.push_back(lab.label_of_edge[edge]); break;
      case RowClass::Middle: middle.push_back(lab.label_of_edge[edge]); break;
      case RowClass::Bottom: bottom.push_back(lab.label_of_edge[edge]); break;
      case RowClass::Ignored: break;
    }
  }
  return assemble_three_row(SkewShape(Shape({n, n, n})), g.arity(),
                            std::move(top), std::move(middle),
                            std::move(bottom));
}

namespace {

// Incrementally built edge-labelled prograph for the phi inverse.
struct GraphBuilder {
  int k;
  std::vector<ExpandedPrograph::Node> nodes;
  std::vector<int> frontier;       // edge ids, left to right
  std::vector<int> label_of_edge;  // -1 while unlabelled
  std::vector<int> edge_of_label;
  std::vector<PrographOp> word;

  explicit GraphBuilder(int arity, int total_labels) : k(arity) {
    frontier.push_back(new_edge());
    bind(0, 0);
    edge_of_label.resize(total_labels + 1, -1);
    edge_of_label[0] = 0;
  }

  int new_edge() {
    label_of_edge.push_back(-1);
    return static_cast<int>(label_of_edge.size()) - 1;
  }

  void bind(int edge, int label) {
    label_of_edge[edge] = label;
    if (label < static_cast<int>(edge_of_label.size()))
      edge_of_label[label] = edge;
  }

  int frontier_index(int edge) const {
    auto it = std::find(frontier.begin(), frontier.end(), edge);
    if (it == frontier.end())
      throw std::invalid_argument("edge no longer on the frontier");
    return static_cast<int>(it - frontier.begin());
  }

  // New coproduct consuming the edge with the given label; the leftmost
  // child is labelled `next`.
  void add_coproduct(int input_label, int next) {
    int edge = edge_of_label[input_label];
    int at = frontier_index(edge);
    ExpandedPrograph::Node node;
    node.is_product = false;
    node.in.push_back(edge);
    std::vector<int> outs;
    for (int i = 0; i < k; ++i) outs.push_back(new_edge());
    node.out = outs;
    nodes.push_back(node);
    frontier.erase(frontier.begin() + at);
    frontier.insert(frontier.begin() + at, outs.begin(), outs.end());
    word.push_back(PrographOp{'C', at + 1});
    bind(outs[0], next);
  }

  // New product whose rightmost input is the edge labelled `input_label` and
  // whose other inputs are the k-1 frontier edges immediately to its left.
  void add_product(int input_label, int next) {
    int edge = edge_of_label[input_label];
    int at = frontier_index(edge);
    if (at < k - 1)
      throw std::invalid_argument("not enough frontier edges for a product");
    ExpandedPrograph::Node node;
    node.is_product = true;
    for (int i = at - k + 1; i <= at; ++i) {
      if (label_of_edge[frontier[i]] < 0)
        throw std::invalid_argument("product would consume an unlabelled edge");
      node.in.push_back(frontier[i]);
    }
    int out = new_edge();
    node.out.push_back(out);
    nodes.push_back(node);
    frontier.erase(frontier.begin() + (at - k + 1), frontier.begin() + at + 1);
    frontier.insert(frontier.begin() + (at - k + 1), out);
    word.push_back(PrographOp{'P', at - k + 2});
    bind(out, next);
  }

  // One step of the depth-left first search over the partial graph: the
  // ready node with the highest-labelled incoming edge labels its leftmost
  // unlabelled output.
  void label_next_by_search(int next) {
    int best_node = -1, best_key = -1;
    for (size_t v = 0; v < nodes.size(); ++v) {
      int key = -1;
      bool ready = true;
      for (int e : nodes[v].in) {
        if (label_of_edge[e] < 0) {
          ready = false;
          break;
        }
        key = std::max(key, label_of_edge[e]);
      }
      if (!ready) continue;
      bool has_unlabelled = false;
      for (int e : nodes[v].out)
        if (label_of_edge[e] < 0) {
          has_unlabelled = true;
          break;
        }
      if (!has_unlabelled) continue;
      if (key > best_key) {
        best_key = key;
        best_node = static_cast<int>(v);
      }
    }
    if (best_node < 0)
      throw std::invalid_argument("search step found no candidate edge");
    for (int e : nodes[best_node].out)
      if (label_of_edge[e] < 0) {
        bind(e, next);
        return;
      }
  }
};

}  // namespace

Prograph phi_inverse(const SetValuedTableau& t) {
  if (auto why = standardness_violation(t))
    throw std::invalid_argument("tableau not standard: " + *why);
  const SkewShape& s = t.shape();
  if (!s.straight() || s.rows() != 3 || !s.outer().rectangular())
    throw std::invalid_argument("phi_inverse needs shape n^3");
  if (t.density().at(0) != 1 || t.density().at(2) != 1)
    throw std::invalid_argument("phi_inverse needs density (1,k-1,1)");
  int k = t.density().at(1) + 1;
  if (k < 2) throw std::invalid_argument("phi_inverse needs k >= 2");
  int n = s.outer().part(0);
  long long m = t.entry_count();

  std::vector<int> row_of_value(m + 1, -1);
  for (int i = 0; i < 3; ++i)
    for (int col = 0; col < n; ++col)
      for (int v : t.cell(i, col)) row_of_value[v] = i;

  GraphBuilder builder(k, static_cast<int>(m));
  for (int v = 1; v <= m; ++v) {
    switch (row_of_value[v]) {
      case 0: builder.add_coproduct(v - 1, v); break;
      case 1: builder.label_next_by_search(v); break;
      case 2: builder.add_product(v - 1, v); break;
      default: throw std::logic_error("value missing from tableau");
    }
  }
  if (builder.frontier.size() != 1)
    throw std::logic_error("phi_inverse did not close the graph");
  Prograph g(k, 1, builder.word);
  if (phi(g) != t)
    throw std::logic_error("phi_inverse round-trip check failed");
  return g;
}

namespace {

struct PsiShapeInfo {
  int q = 0;  // deleted top cells
  int p = 0;  // deleted bottom cells
  SkewShape shape;
};

PsiShapeInfo psi_shape(const Prograph& g) {
  int k = g.arity();
  int x = g.inputs();
  if ((x - 1) % (k - 1) != 0)
    throw std::invalid_argument("psi needs x = 1 mod (k-1)");
  PsiShapeInfo info;
  info.q = (x - 1) / (k - 1);
  info.p = (g.outputs() - 1) / (k - 1);
  int n = g.coproducts();
  int m = g.products();
  info.shape = SkewShape(Shape({n + info.q, n + info.q, m}),
                         Shape({info.q, 0, 0}));
  return info;
}

}  // namespace

SetValuedTableau psi(const Prograph& g) {
  PsiShapeInfo info = psi_shape(g);
  int k = g.arity();
  SetValuedTableau full = phi(justify(g));
  long long m_full = full.entry_count();
  int n_full = full.shape().outer().part(0);

  // Justification scaffolding pins the deleted entries to the extremal
  // runs: 1..q in the top row and the final p entries of the bottom row.
  // Assert it rather than assume it.
  for (int c = 0; c < info.q; ++c)
    if (full.cell(0, c) != std::vector<int>{c + 1})
      throw std::logic_error("justified image does not start with 1..q");
  for (int c = 0; c < info.p; ++c) {
    int col = n_full - 1 - c;
    if (full.cell(2, col) != std::vector<int>{static_cast<int>(m_full) - c})
      throw std::logic_error("justified image does not end with the top run");
  }

  std::vector<std::vector<std::vector<int>>> rows(info.shape.rows());
  auto reindexed = [&](const std::vector<int>& cell) {
    std::vector<int> out(cell.size());
    for (size_t i = 0; i < cell.size(); ++i) out[i] = cell[i] - info.q;
    return out;
  };
  if (info.shape.rows() >= 1)
    for (int c = info.q; c < n_full; ++c)
      rows[0].push_back(reindexed(full.cell(0, c)));
  if (info.shape.rows() >= 2)
    for (int c = 0; c < n_full; ++c)
      rows[1].push_back(reindexed(full.cell(1, c)));
  if (info.shape.rows() >= 3)
    for (int c = 0; c < n_full - info.p; ++c)
      rows[2].push_back(reindexed(full.cell(2, c)));

  SetValuedTableau t(info.shape, Density({1, k - 1, 1}), std::move(rows));
  if (auto why = standardness_violation(t))
    throw std::logic_error("psi image not standard: " + *why);
  return t;
}

SetValuedTableau tau(const Prograph& g) {
  PsiShapeInfo info = psi_shape(g);
  ExpandedPrograph e = expand(g);
  EdgeLabelling lab = xfold_depth_left_search(e);
  std::vector<int> top, middle, bottom;
  for (int edge = 0; edge < e.edge_count; ++edge) {
    switch (classify_edge(e, lab, edge)) {
      case RowClass::Top: top.push_back(lab.label_of_edge[edge]); break;
      case RowClass::Middle: middle.push_back(lab.label_of_edge[edge]); break;
      case RowClass::Bottom: bottom.push_back(lab.label_of_edge[edge]); break;
      case RowClass::Ignored: break;
    }
  }
  return assemble_three_row(info.shape, g.arity(), std::move(top),
                            std::move(middle), std::move(bottom));
}

nlohmann::ordered_json VerifyReport::to_json() const {
  nlohmann::ordered_json j;
  j["identity"] = identity;
  j["grid"] = grid;
  j["cases_checked"] = cases_checked;
  j["counterexamples"] = counterexamples;
  return j;
}

VerifyReport verify_schutzenberger_square(int k, int n) {
  VerifyReport report;
  report.identity = "phi(rotate(G)) == schutzenberger(phi(G))";
  report.grid = "k=" + std::to_string(k) + ",n=" + std::to_string(n);
  for_each_prograph(k, n, n, 1, [&](const Prograph& g) {
    ++report.cases_checked;
    if (phi(rotate(g)) != schutzenberger(phi(g)))
      report.counterexamples.push_back(to_text(g));
    return true;
  });
  return report;
}

VerifyReport verify_skew_square(int k, int x, int n, int m) {
  VerifyReport report;
  report.identity = "psi(rotate(G)) == skew_schutzenberger(psi(G))";
  report.grid = "k=" + std::to_string(k) + ",x=" + std::to_string(x) +
                ",n=" + std::to_string(n) + ",m=" + std::to_string(m);
  for_each_prograph(k, n, m, x, [&](const Prograph& g) {
    ++report.cases_checked;
    if (psi(rotate(g)) != skew_schutzenberger(psi(g)))
      report.counterexamples.push_back(to_text(g));
    return true;
  });
  return report;
}

VerifyReport verify_roundtrip(int k, int n) {
  VerifyReport report;
  report.identity = "phi_inverse(phi(G)) == G and phi(phi_inverse(T)) == T";
  report.grid = "k=" + std::to_string(k) + ",n=" + std::to_string(n);
  for_each_prograph(k, n, n, 1, [&](const Prograph& g) {
    ++report.cases_checked;
    if (phi_inverse(phi(g)) != g)
      report.counterexamples.push_back(to_text(g));
    return true;
  });
  for_each_svt(SkewShape(Shape({n, n, n})), density_1k1(k),
               [&](const SetValuedTableau& t) {
                 ++report.cases_checked;
                 if (phi(phi_inverse(t)) != t)
                   report.counterexamples.push_back(to_text(t));
                 return true;
               });
  return report;
}

VerifyReport verify_cardinality(int k, int n) {
  VerifyReport report;
  report.identity = "|PC^k(n)| == |SVT(n^3,(1,k-1,1))|";
  report.grid = "k=" + std::to_string(k) + ",n=" + std::to_string(n);
  Int lhs = count_prographs(k, n, n, 1);
  Int rhs = count_svt(SkewShape(Shape({n, n, n})), density_1k1(k));
  report.cases_checked = 1;
  if (lhs != rhs)
    report.counterexamples.push_back("|PC|=" + lhs.get_str() +
                                     " but |SVT|=" + rhs.get_str());
  return report;
}

VerifyReport verify_tau_psi(int k, int x, int n, int m) {
  VerifyReport report;
  report.identity = "tau(G) == psi(G)";
  report.grid = "k=" + std::to_string(k) + ",x=" + std::to_string(x) +
                ",n=" + std::to_string(n) + ",m=" + std::to_string(m);
  for_each_prograph(k, n, m, x, [&](const Prograph& g) {
    ++report.cases_checked;
    if (tau(g) != psi(g)) report.counterexamples.push_back(to_text(g));
    return true;
  });
  return report;
}

}  // namespace svyt
