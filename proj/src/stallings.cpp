#include "sgm/stallings.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

namespace sgm {

SubgroupGraph::SubgroupGraph(AlphabetPtr alphabet, std::size_t num_vertices)
    : _alphabet(std::move(alphabet)),
      _num_vertices(num_vertices),
      _out(_alphabet->size(), std::vector<int>(num_vertices, kNoVertex)),
      _in(_alphabet->size(), std::vector<int>(num_vertices, kNoVertex)) {
  if (num_vertices == 0) {
    throw std::invalid_argument("a subgroup graph needs a basepoint");
  }
}

std::size_t SubgroupGraph::num_edges() const {
  std::size_t n = 0;
  for (auto const& row : _out) {
    n += static_cast<std::size_t>(
        std::count_if(row.begin(), row.end(), [](int t) { return t != kNoVertex; }));
  }
  return n;
}

void SubgroupGraph::add_edge(int v, std::size_t x, int w) {
  auto& out = _out.at(x).at(static_cast<std::size_t>(v));
  auto& in = _in.at(x).at(static_cast<std::size_t>(w));
  if (out != kNoVertex || in != kNoVertex) {
    throw std::logic_error("edge slot already occupied; graph would not be folded");
  }
  out = w;
  in = v;
}

int SubgroupGraph::trace(int v, std::span<Letter const> w) const {
  for (Letter x : w) {
    if (v == kNoVertex) {
      break;
    }
    v = target(v, x);
  }
  return v;
}

bool SubgroupGraph::is_folded() const {
  // Partial injectivity is enforced by construction; check _in mirrors _out.
  for (std::size_t x = 0; x < _out.size(); ++x) {
    for (std::size_t v = 0; v < _num_vertices; ++v) {
      int w = _out[x][v];
      if (w != kNoVertex && _in[x][static_cast<std::size_t>(w)] != static_cast<int>(v)) {
        return false;
      }
    }
  }
  return true;
}

bool SubgroupGraph::is_core() const {
  std::vector<std::size_t> degree(_num_vertices, 0);
  for (auto const& row : _out) {
    for (std::size_t v = 0; v < _num_vertices; ++v) {
      if (row[v] != kNoVertex) {
        ++degree[v];
        ++degree[static_cast<std::size_t>(row[v])];
      }
    }
  }
  for (std::size_t v = 1; v < _num_vertices; ++v) {
    if (degree[v] < 2) {
      return false;
    }
  }
  return true;
}

bool SubgroupGraph::is_connected() const {
  std::vector<bool> seen(_num_vertices, false);
  std::deque<int> queue{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (std::size_t r = 0; r < 2 * _alphabet->size(); ++r) {
      int w = target(v, Letter::from_rank(r));
      if (w != kNoVertex && !seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        ++count;
        queue.push_back(w);
      }
    }
  }
  return count == _num_vertices;
}

bool SubgroupGraph::letter_is_total(std::size_t x) const {
  auto const& row = _out.at(x);
  return std::none_of(row.begin(), row.end(), [](int t) { return t == kNoVertex; });
}

std::string SubgroupGraph::dump() const {
  std::ostringstream out;
  out << "basepoint 0\n";
  for (std::size_t x = 0; x < _out.size(); ++x) {
    for (std::size_t v = 0; v < _num_vertices; ++v) {
      if (_out[x][v] != kNoVertex) {
        out << v << " --" << _alphabet->name(x) << "--> " << _out[x][v] << '\n';
      }
    }
  }
  return out.str();
}

namespace {

struct Edge {
  int from;
  std::size_t letter;
  int to;
  auto operator<=>(Edge const&) const = default;
};

class UnionFind {
 public:
  int add() {
    _parent.push_back(static_cast<int>(_parent.size()));
    return _parent.back();
  }
  int find(int v) {
    while (_parent[static_cast<std::size_t>(v)] != v) {
      auto& p = _parent[static_cast<std::size_t>(v)];
      p = _parent[static_cast<std::size_t>(p)];
      v = p;
    }
    return v;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) {
      return false;
    }
    if (b < a) {
      std::swap(a, b);
    }
    _parent[static_cast<std::size_t>(b)] = a;
    return true;
  }
  std::size_t size() const { return _parent.size(); }

 private:
  std::vector<int> _parent;
};

// Identifies endpoints of equally labelled edges until no two edges with the
// same label share a source or a target.
std::vector<Edge> fold(UnionFind& uf, std::vector<Edge> edges, std::size_t letters) {
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<int> out(uf.size() * letters, kNoVertex);
    std::vector<int> in(uf.size() * letters, kNoVertex);
    for (auto const& e : edges) {
      int u = uf.find(e.from);
      int v = uf.find(e.to);
      auto& o = out[static_cast<std::size_t>(u) * letters + e.letter];
      if (o == kNoVertex) {
        o = v;
      } else if (uf.find(o) != v) {
        changed |= uf.unite(o, v);
        v = uf.find(v);
        u = uf.find(u);
      }
      auto& i = in[static_cast<std::size_t>(v) * letters + e.letter];
      if (i == kNoVertex) {
        i = u;
      } else if (uf.find(i) != u) {
        changed |= uf.unite(i, u);
      }
    }
  }
  std::set<Edge> unique;
  for (auto const& e : edges) {
    unique.insert({uf.find(e.from), e.letter, uf.find(e.to)});
  }
  return {unique.begin(), unique.end()};
}

// Removes hanging trees away from the basepoint.
std::vector<Edge> trim(std::vector<Edge> edges, int base) {
  while (true) {
    std::map<int, std::size_t> degree;
    for (auto const& e : edges) {
      ++degree[e.from];
      ++degree[e.to];
    }
    auto leaf = std::find_if(degree.begin(), degree.end(), [&](auto const& kv) {
      return kv.first != base && kv.second <= 1;
    });
    if (leaf == degree.end()) {
      return edges;
    }
    int v = leaf->first;
    std::erase_if(edges, [v](Edge const& e) { return e.from == v || e.to == v; });
  }
}

SubgroupGraph canonical_graph(std::vector<Edge> const& edges, int base,
                              AlphabetPtr const& alphabet) {
  std::size_t k = alphabet->size();
  std::map<std::pair<int, std::size_t>, int> out_map;  // (vertex, rank) -> vertex
  for (auto const& e : edges) {
    out_map[{e.from, 2 * e.letter}] = e.to;
    out_map[{e.to, 2 * e.letter + 1}] = e.from;
  }
  std::map<int, int> number{{base, 0}};
  std::deque<int> queue{base};
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (std::size_t r = 0; r < 2 * k; ++r) {
      auto it = out_map.find({v, r});
      if (it != out_map.end() && !number.contains(it->second)) {
        number.emplace(it->second, static_cast<int>(number.size()));
        queue.push_back(it->second);
      }
    }
  }
  SubgroupGraph g(alphabet, number.size());
  for (auto const& e : edges) {
    g.add_edge(number.at(e.from), e.letter, number.at(e.to));
  }
  return g;
}

}  // namespace

SubgroupGraph build_graph(std::vector<Letters> const& generators,
                          AlphabetPtr const& alphabet) {
  UnionFind uf;
  int base = uf.add();
  std::vector<Edge> edges;
  for (auto const& raw : generators) {
    Word checked(alphabet, free_reduce(raw));
    auto const& w = checked.letters();
    if (w.empty()) {
      continue;
    }
    int prev = base;
    for (std::size_t i = 0; i < w.size(); ++i) {
      int next = (i + 1 == w.size()) ? base : uf.add();
      if (w[i].is_inverse()) {
        edges.push_back({next, w[i].index(), prev});
      } else {
        edges.push_back({prev, w[i].index(), next});
      }
      prev = next;
    }
  }
  edges = fold(uf, std::move(edges), alphabet->size());
  edges = trim(std::move(edges), uf.find(base));
  return canonical_graph(edges, uf.find(base), alphabet);
}

SubgroupGraph build_graph(std::vector<Word> const& generators) {
  if (generators.empty()) {
    throw std::invalid_argument("alphabet required for an empty generator list");
  }
  std::vector<Letters> raw;
  for (auto const& g : generators) {
    require_same_alphabet(g, generators.front());
    raw.push_back(g.letters());
  }
  return build_graph(raw, generators.front().alphabet());
}

bool graph_member(SubgroupGraph const& g, Word const& w) {
  if (!same_alphabet(*g.alphabet(), *w.alphabet())) {
    throw AlphabetMismatch("word and graph use different alphabets");
  }
  return g.trace(SubgroupGraph::basepoint(), free_reduce(w.letters())) ==
         SubgroupGraph::basepoint();
}

std::optional<std::size_t> graph_index(SubgroupGraph const& g) {
  for (std::size_t x = 0; x < g.alphabet()->size(); ++x) {
    if (!g.letter_is_total(x)) {
      return std::nullopt;
    }
  }
  return g.num_vertices();
}

std::size_t graph_rank(SubgroupGraph const& g) {
  return g.num_edges() + 1 - g.num_vertices();
}

bool SpanningTree::is_tree_edge(int v, std::size_t x, int w) const {
  auto uv = static_cast<std::size_t>(v);
  auto uw = static_cast<std::size_t>(w);
  return (parent[uw] == v && parent_edge[uw] == Letter::generator(x)) ||
         (parent[uv] == w && parent_edge[uv] == Letter::generator(x, true));
}

SpanningTree bfs_tree(SubgroupGraph const& g) {
  std::size_t n = g.num_vertices();
  SpanningTree t{std::vector<int>(n, kNoVertex), std::vector<Letter>(n),
                 std::vector<Letters>(n)};
  std::vector<bool> seen(n, false);
  seen[0] = true;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (std::size_t r = 0; r < 2 * g.alphabet()->size(); ++r) {
      Letter x = Letter::from_rank(r);
      int w = g.target(v, x);
      if (w == kNoVertex || seen[static_cast<std::size_t>(w)]) {
        continue;
      }
      auto uw = static_cast<std::size_t>(w);
      seen[uw] = true;
      t.parent[uw] = v;
      t.parent_edge[uw] = x;
      t.path[uw] = t.path[static_cast<std::size_t>(v)];
      t.path[uw].push_back(x);
      queue.push_back(w);
    }
  }
  return t;
}

namespace {

Letters edge_word(SpanningTree const& t, int v, std::size_t x, int w) {
  Letters word = t.path[static_cast<std::size_t>(v)];
  word.push_back(Letter::generator(x));
  return concat_reduced(word, invert(t.path[static_cast<std::size_t>(w)]));
}

}  // namespace

std::vector<Letters> graph_basis(SubgroupGraph const& g, SpanningTree const& tree) {
  std::vector<Letters> basis;
  for (std::size_t x = 0; x < g.alphabet()->size(); ++x) {
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
      int w = g.target(static_cast<int>(v), Letter::generator(x));
      if (w != kNoVertex && !tree.is_tree_edge(static_cast<int>(v), x, w)) {
        basis.push_back(edge_word(tree, static_cast<int>(v), x, w));
      }
    }
  }
  return basis;
}

void complete_partial_injections(std::vector<std::vector<int>>& maps) {
  for (auto& map : maps) {
    std::size_t n = map.size();
    std::vector<bool> hit(n, false);
    for (int t : map) {
      if (t != kNoVertex) {
        hit[static_cast<std::size_t>(t)] = true;
      }
    }
    std::vector<int> free_in;
    for (std::size_t v = 0; v < n; ++v) {
      if (!hit[v]) {
        free_in.push_back(static_cast<int>(v));
      }
    }
    std::size_t next = 0;
    for (auto& t : map) {
      if (t == kNoVertex) {
        t = free_in.at(next++);
      }
    }
  }
}

HallCompletion::HallCompletion(SubgroupGraph const& core)
    : _core(core), _completed(core), _tree(bfs_tree(core)) {
  std::size_t k = core.alphabet()->size();
  std::size_t n = core.num_vertices();
  std::vector<std::vector<int>> maps(k, std::vector<int>(n));
  for (std::size_t x = 0; x < k; ++x) {
    for (std::size_t v = 0; v < n; ++v) {
      maps[x][v] = core.target(static_cast<int>(v), Letter::generator(x));
    }
  }
  complete_partial_injections(maps);
  for (std::size_t x = 0; x < k; ++x) {
    for (std::size_t v = 0; v < n; ++v) {
      if (core.target(static_cast<int>(v), Letter::generator(x)) == kNoVertex) {
        _completed.add_edge(static_cast<int>(v), x, maps[x][v]);
      }
    }
  }

  _edge_basis.assign(k, std::vector<int>(n, -1));
  std::vector<std::tuple<std::size_t, std::size_t, int>> complement_edges;
  for (std::size_t x = 0; x < k; ++x) {
    for (std::size_t v = 0; v < n; ++v) {
      int vi = static_cast<int>(v);
      int w = _completed.target(vi, Letter::generator(x));
      if (_tree.is_tree_edge(vi, x, w)) {
        continue;
      }
      if (core.target(vi, Letter::generator(x)) != kNoVertex) {
        _edge_basis[x][v] = static_cast<int>(_subgroup_basis.size());
        _subgroup_basis.push_back(edge_word(_tree, vi, x, w));
      } else {
        complement_edges.emplace_back(x, v, w);
      }
    }
  }
  for (auto const& [x, v, w] : complement_edges) {
    _edge_basis[x][v] =
        static_cast<int>(_subgroup_basis.size() + _complement_basis.size());
    _complement_basis.push_back(edge_word(_tree, static_cast<int>(v), x, w));
  }
}

std::vector<Letters> HallCompletion::basis() const {
  auto all = _subgroup_basis;
  all.insert(all.end(), _complement_basis.begin(), _complement_basis.end());
  return all;
}

bool HallCompletion::in_completion(Word const& w) const {
  return graph_member(_completed, w);
}

Word HallCompletion::retract(Word const& w) const {
  if (!same_alphabet(*w.alphabet(), *_core.alphabet())) {
    throw AlphabetMismatch("word and graph use different alphabets");
  }
  Letters image;
  int v = SubgroupGraph::basepoint();
  auto h = static_cast<int>(_subgroup_basis.size());
  for (Letter x : free_reduce(w.letters())) {
    int next = _completed.target(v, x);
    int source = x.is_inverse() ? next : v;
    int index = _edge_basis[x.index()][static_cast<std::size_t>(source)];
    if (index >= 0 && index < h) {
      auto const& b = _subgroup_basis[static_cast<std::size_t>(index)];
      image = x.is_inverse() ? concat_reduced(image, invert(b))
                             : concat_reduced(image, b);
    }
    v = next;
  }
  if (v != SubgroupGraph::basepoint()) {
    throw NotInSubgroup("word does not lie in the finite-index completion");
  }
  return Word(_core.alphabet(), std::move(image));
}

HallCompletion hall_completion(SubgroupGraph const& core) {
  return HallCompletion(core);
}

Word virtual_retraction(SubgroupGraph const& core, Word const& w) {
  return HallCompletion(core).retract(w);
}

}  // namespace sgm
