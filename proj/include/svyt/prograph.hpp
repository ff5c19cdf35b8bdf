#pragma once

#include <functional>
#include <string>
#include <vector>

#include "svyt/numeric.hpp"
#include "svyt/tableau.hpp"

namespace svyt {

// One construction step applied to the frontier of strands, 1-based position.
// 'C' replaces the strand at pos with k strands; 'P' consumes the k strands
// at pos..pos+k-1 and replaces them with one.
struct PrographOp {
  char kind = 'C';
  int pos = 1;
  friend bool operator==(const PrographOp&, const PrographOp&) = default;
  friend auto operator<=>(const PrographOp& a, const PrographOp& b) {
    if (auto c = a.pos <=> b.pos; c != 0) return c;
    return a.kind <=> b.kind;
  }
};

// Fully expanded view: explicit edges with one producer and one consumer
// each.  Edge ids follow creation order (input strands first).
struct ExpandedPrograph {
  struct Node {
    bool is_product = false;
    std::vector<int> in;   // edge ids, left to right
    std::vector<int> out;  // edge ids, left to right
  };
  int arity = 2;
  int inputs = 1;
  std::vector<Node> nodes;        // construction order
  std::vector<int> input_edges;   // 0..inputs-1
  std::vector<int> output_edges;  // final frontier, left to right
  int edge_count = 0;
  std::vector<int> producer;  // per edge: node index, or -1 for input strand
  std::vector<int> consumer;  // per edge: node index, or -1 for output strand
};

// A planar k-ary product-coproduct prograph.  Identity is plane isotopy;
// the stored word is the canonical (greedy leftmost-position) representative
// of the construction-word trace class, so equality of words is equality of
// plane graphs.
class Prograph {
 public:
  Prograph() = default;
  Prograph(int arity, int inputs, std::vector<PrographOp> word);

  int arity() const { return arity_; }
  int inputs() const { return inputs_; }
  const std::vector<PrographOp>& word() const { return word_; }
  int coproducts() const;
  int products() const;
  int outputs() const;
  int edge_count() const;

  friend bool operator==(const Prograph&, const Prograph&) = default;

 private:
  int arity_ = 2;
  int inputs_ = 1;
  std::vector<PrographOp> word_;
};

// Simulates the word from `inputs` strands; throws on malformed words.
ExpandedPrograph expand(int arity, int inputs,
                        const std::vector<PrographOp>& word);
ExpandedPrograph expand(const Prograph& g);

// Full invariant check on an explicit graph, including the planarity
// requirement that every node consumes consecutive frontier strands.
bool validate_graph(const ExpandedPrograph& g, std::string* why = nullptr);

// Greedy leftmost-position construction word; the canonical representative.
std::vector<PrographOp> canonical_word(const ExpandedPrograph& g);

struct EdgeLabelling {
  std::vector<int> label_of_edge;  // edge id -> label
  std::vector<int> edge_of_label;  // label -> edge id
};

// Depth-left first search for single-input graphs: the leftmost
// input strand gets 0, then repeatedly the node all of whose inputs are
// labelled and whose labelled incoming edge is highest labels its leftmost
// unlabelled output next.  Terminal endpoints never enter the candidate set,
// so non-closed single-input graphs label fully as well.
EdgeLabelling depth_left_search(const ExpandedPrograph& g);
EdgeLabelling depth_left_search(const Prograph& g);

// x-fold variant: when no node is ready, the leftmost unlabelled input
// strand receives the next label.  Coincides with depth_left_search at x=1.
EdgeLabelling xfold_depth_left_search(const ExpandedPrograph& g);
EdgeLabelling xfold_depth_left_search(const Prograph& g);

// y = (n-m)(k-1)+x.  Throws when the result would be < 1.
int output_strand_count(int k, int n, int m, int x);

// 180-degree rotation with all edge orientations reversed; products and
// coproducts swap roles.
Prograph rotate(const Prograph& g);

// Word of the rotated graph, without canonicalization.  Node j of the input
// corresponds to node word.size()-1-j of the result; used together with
// rotation_edge_map when label correspondences matter.
std::vector<PrographOp> rotated_word(int arity, int inputs,
                                     const std::vector<PrographOp>& word);

// Edge correspondence g -> r(g) where rg = expand(rotated_word(...)).
std::vector<int> rotation_edge_map(const ExpandedPrograph& g,
                                   const ExpandedPrograph& rg);

// Closes an x-fold graph (x = 1 mod k-1) by joining input strands with
// coproducts left to right in sets of k and output strands with products
// right to left in sets of k.
Prograph justify(const Prograph& g);

// Inverse of justify on its image; checks the image characterization (the
// first (x-1)/(k-1) nodes are left-aligned coproducts, the last (y-1)/(k-1)
// right-aligned products) and strips them.
Prograph unjustify(const Prograph& g, int x, int y);

// For x = a mod (k-1) with 2 <= a <= k-1: adds k-a free strands on the left,
// then justifies.
Prograph left_weighted_justify(const Prograph& g);

struct PrographEnumLimits {
  int max_nodes = 16;
};

// Streams every plane-equivalence class in PC^k_x(n,m) exactly once, as
// canonical words in lexicographic order.
void for_each_prograph(int k, int n, int m, int x,
                       const std::function<bool(const Prograph&)>& visit,
                       const PrographEnumLimits& limits = {});
std::vector<Prograph> all_prographs(int k, int n, int m, int x,
                                    const PrographEnumLimits& limits = {});
Int count_prographs(int k, int n, int m, int x,
                    const PrographEnumLimits& limits = {});

// Canonical text encoding: k=K;x=X;word=C@p1,P@p2,...
std::string to_text(const Prograph& g);
Prograph prograph_from_text(const std::string& text);

// Graphviz rendering with edges labelled by the x-fold depth-left search.
std::string to_dot(const Prograph& g);

}  // namespace svyt
