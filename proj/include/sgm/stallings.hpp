// Stallings subgroup graphs of finitely generated subgroups of free groups,
// Marshall Hall completion and the induced virtual retraction.
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sgm/words.hpp"

namespace sgm {

class NotInSubgroup : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr int kNoVertex = -1;

// A based graph labelled by the positive letters of an alphabet. Each letter
// acts as a partial injection on vertices. Graphs produced by build_graph are
// folded, trimmed to their core and numbered breadth-first from the
// basepoint 0, so isomorphic based graphs compare equal.
class SubgroupGraph {
 public:
  SubgroupGraph(AlphabetPtr alphabet, std::size_t num_vertices);

  AlphabetPtr const& alphabet() const noexcept { return _alphabet; }
  std::size_t num_vertices() const noexcept { return _num_vertices; }
  std::size_t num_edges() const;
  static constexpr int basepoint() noexcept { return 0; }

  // Endpoint of the edge labelled x leaving v (traversing backwards for
  // inverse letters), or kNoVertex.
  int target(int v, Letter x) const {
    auto const& table = x.is_inverse() ? _in[x.index()] : _out[x.index()];
    return table[static_cast<std::size_t>(v)];
  }
  // Adds v --x--> w for a positive generator index x. Both slots must be free.
  void add_edge(int v, std::size_t x, int w);

  // Endpoint of the path reading w from v, or kNoVertex if it leaves the graph.
  int trace(int v, std::span<Letter const> w) const;

  bool is_folded() const;
  bool is_core() const;
  bool is_connected() const;
  bool letter_is_total(std::size_t x) const;

  // One line per edge "v --x--> w", preceded by "basepoint 0".
  std::string dump() const;

  friend bool operator==(SubgroupGraph const& x, SubgroupGraph const& y) {
    return same_alphabet(*x._alphabet, *y._alphabet) &&
           x._num_vertices == y._num_vertices && x._out == y._out;
  }

 private:
  AlphabetPtr _alphabet;
  std::size_t _num_vertices;
  std::vector<std::vector<int>> _out;  // [letter][vertex]
  std::vector<std::vector<int>> _in;
};

SubgroupGraph build_graph(std::vector<Letters> const& generators,
                          AlphabetPtr const& alphabet);
SubgroupGraph build_graph(std::vector<Word> const& generators);

bool graph_member(SubgroupGraph const& g, Word const& w);

// Vertex count when every letter acts as a permutation, otherwise nullopt
// (infinite index).
std::optional<std::size_t> graph_index(SubgroupGraph const& g);

// Free rank E - V + 1 of the subgroup read by a connected graph.
std::size_t graph_rank(SubgroupGraph const& g);

// A spanning tree of the core graph, reused for the completed graph so that
// the basis of V extends the basis of H.
struct SpanningTree {
  std::vector<int> parent;          // kNoVertex at the basepoint
  std::vector<Letter> parent_edge;  // letter read from parent to child
  std::vector<Letters> path;        // basepoint -> vertex along the tree

  bool is_tree_edge(int v, std::size_t x, int w) const;
};

SpanningTree bfs_tree(SubgroupGraph const& g);

// Free basis of the subgroup read by g: one word per non-tree edge, in the
// order (letter, source vertex).
std::vector<Letters> graph_basis(SubgroupGraph const& g, SpanningTree const& tree);

// Marshall Hall completion of a core graph of H to a finite-index V >= H with
// H a free factor of V, and the retraction V -> H killing the complementary
// basis elements.
class HallCompletion {
 public:
  explicit HallCompletion(SubgroupGraph const& core);

  SubgroupGraph const& core() const noexcept { return _core; }
  SubgroupGraph const& completed() const noexcept { return _completed; }
  std::size_t index() const noexcept { return _completed.num_vertices(); }
  std::size_t rank() const noexcept {
    return _subgroup_basis.size() + _complement_basis.size();
  }
  std::vector<Letters> const& subgroup_basis() const noexcept {
    return _subgroup_basis;
  }
  std::vector<Letters> const& complement_basis() const noexcept {
    return _complement_basis;
  }
  // Basis of V: the subgroup basis followed by the complement.
  std::vector<Letters> basis() const;

  bool in_completion(Word const& w) const;
  // rho(w) for w in V; throws NotInSubgroup otherwise.
  Word retract(Word const& w) const;

 private:
  SubgroupGraph _core;
  SubgroupGraph _completed;
  SpanningTree _tree;
  std::vector<Letters> _subgroup_basis;
  std::vector<Letters> _complement_basis;
  // For every edge (letter, source): index into the combined basis, or -1
  // for tree edges; complement edges are offset past the subgroup basis.
  std::vector<std::vector<int>> _edge_basis;
};

HallCompletion hall_completion(SubgroupGraph const& core);
Word virtual_retraction(SubgroupGraph const& core, Word const& w);

// Completes every letter's partial injection to a permutation by matching the
// vertices without an outgoing edge to those without an incoming edge, both
// in increasing order.
void complete_partial_injections(std::vector<std::vector<int>>& maps);

}  // namespace sgm
