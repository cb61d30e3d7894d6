#include "harmcov/graph.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace harmcov {

template <bool L>
BasicGraph<L>::BasicGraph(int num_vertices) {
  for (int i = 0; i < num_vertices; ++i) add_vertex();
}

template <bool L>
Vertex BasicGraph<L>::add_vertex(std::string label) {
  // A label equal to the identifier is the default; store it as such so that
  // equality does not depend on how the label was spelled.
  if (label == std::to_string(num_vertices())) label.clear();
  incidence_.emplace_back();
  vertex_labels_.push_back(std::move(label));
  return num_vertices() - 1;
}

template <bool L>
EdgeId BasicGraph<L>::add_edge(Vertex u, Vertex v, std::string label) {
  if (!has_vertex(u) || !has_vertex(v)) {
    throw Error(ErrorCode::kUnknownVertex, "edge endpoint out of range");
  }
  if (!L && u == v) {
    throw Error(ErrorCode::kInvalidInput, "loop edge in a graph that does not allow loops",
                vertex_label(u));
  }
  EdgeId e = num_edges();
  if (label == std::to_string(e)) label.clear();
  ends_.push_back({u, v});
  edge_labels_.push_back(std::move(label));
  incidence_[u].push_back(e);
  if (u != v) incidence_[v].push_back(e);
  return e;
}

template <bool L>
Vertex BasicGraph<L>::other_end(EdgeId e, Vertex v) const {
  const EdgeEnds& ee = ends(e);
  if (ee.u == v) return ee.v;
  if (ee.v == v) return ee.u;
  throw Error(ErrorCode::kInvalidInput, "vertex is not an endpoint of edge");
}

template <bool L>
std::string BasicGraph<L>::vertex_label(Vertex v) const {
  const std::string& s = vertex_labels_.at(v);
  return s.empty() ? std::to_string(v) : s;
}

template <bool L>
std::string BasicGraph<L>::edge_label(EdgeId e) const {
  const std::string& s = edge_labels_.at(e);
  return s.empty() ? std::to_string(e) : s;
}

template <bool L>
std::optional<Vertex> BasicGraph<L>::find_vertex(const std::string& label) const {
  for (Vertex v = 0; v < num_vertices(); ++v) {
    if (vertex_label(v) == label) return v;
  }
  return std::nullopt;
}

template <bool L>
std::optional<EdgeId> BasicGraph<L>::find_edge(const std::string& label) const {
  for (EdgeId e = 0; e < num_edges(); ++e) {
    if (edge_label(e) == label) return e;
  }
  return std::nullopt;
}

template class BasicGraph<false>;
template class BasicGraph<true>;

LoopGraph to_loop_graph(const Graph& g) {
  LoopGraph w;
  for (Vertex v = 0; v < g.num_vertices(); ++v) w.add_vertex(g.vertex_label(v));
  for (EdgeId e = 0; e < g.num_edges(); ++e) w.add_edge(g.ends(e).u, g.ends(e).v, g.edge_label(e));
  return w;
}

// -- Morphisms ---------------------------------------------------------------

template <bool L>
BasicMorphism<L>::BasicMorphism(GraphType source, GraphType target, std::vector<Vertex> vertex_map,
                                std::vector<EdgeImage> edge_map)
    : source_(std::move(source)),
      target_(std::move(target)),
      vertex_map_(std::move(vertex_map)),
      edge_map_(std::move(edge_map)) {
  if (static_cast<int>(vertex_map_.size()) != source_.num_vertices() ||
      static_cast<int>(edge_map_.size()) != source_.num_edges()) {
    throw Error(ErrorCode::kInvalidInput, "morphism map sizes do not match the source");
  }
  for (Vertex v : vertex_map_) {
    if (!target_.has_vertex(v)) throw Error(ErrorCode::kInvalidInput, "vertex image out of range");
  }
  for (EdgeId e = 0; e < source_.num_edges(); ++e) {
    Vertex a = vertex_map_[source_.ends(e).u];
    Vertex b = vertex_map_[source_.ends(e).v];
    if (const auto* to_v = std::get_if<ToVertex>(&edge_map_[e])) {
      if (to_v->vertex != a || to_v->vertex != b) {
        throw Error(ErrorCode::kInvalidInput, "vertical edge endpoints are not collapsed",
                    source_.edge_label(e));
      }
    } else {
      EdgeId t = std::get<ToEdge>(edge_map_[e]).edge;
      if (!target_.has_edge(t)) throw Error(ErrorCode::kInvalidInput, "edge image out of range");
      const EdgeEnds& te = target_.ends(t);
      bool ok = (te.u == a && te.v == b) || (te.u == b && te.v == a);
      if (!ok) {
        throw Error(ErrorCode::kInvalidInput, "edge image does not match endpoint images",
                    source_.edge_label(e));
      }
    }
  }
}

template class BasicMorphism<false>;
template class BasicMorphism<true>;

GraphMorphism identity_morphism(const Graph& g) {
  std::vector<Vertex> vm(g.num_vertices());
  std::vector<EdgeImage> em;
  for (Vertex v = 0; v < g.num_vertices(); ++v) vm[v] = v;
  for (EdgeId e = 0; e < g.num_edges(); ++e) em.push_back(ToEdge{e});
  return GraphMorphism(g, g, std::move(vm), std::move(em));
}

// -- Components, genus, neighbourhoods ---------------------------------------

template <bool L>
std::vector<int> component_index(const BasicGraph<L>& g) {
  std::vector<int> comp(g.num_vertices(), -1);
  int next = 0;
  for (Vertex s = 0; s < g.num_vertices(); ++s) {
    if (comp[s] >= 0) continue;
    std::vector<Vertex> stack{s};
    comp[s] = next;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (EdgeId e : g.incident(v)) {
        Vertex w = g.other_end(e, v);
        if (comp[w] < 0) {
          comp[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return comp;
}

template <bool L>
std::vector<std::vector<Vertex>> connected_components(const BasicGraph<L>& g) {
  std::vector<int> comp = component_index(g);
  int count = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
  std::vector<std::vector<Vertex>> blocks(count);
  for (Vertex v = 0; v < g.num_vertices(); ++v) blocks[comp[v]].push_back(v);
  return blocks;
}

template <bool L>
bool is_connected(const BasicGraph<L>& g) {
  return g.num_vertices() > 0 && connected_components(g).size() == 1;
}

template std::vector<int> component_index(const Graph&);
template std::vector<int> component_index(const LoopGraph&);
template std::vector<std::vector<Vertex>> connected_components(const Graph&);
template std::vector<std::vector<Vertex>> connected_components(const LoopGraph&);
template bool is_connected(const Graph&);
template bool is_connected(const LoopGraph&);

int genus(const Graph& g) {
  if (!is_connected(g)) throw Error(ErrorCode::kDisconnectedGraph, "genus needs a connected graph");
  return g.num_edges() - g.num_vertices() + 1;
}

template <bool L>
Neighborhood<L> neighborhood(const BasicGraph<L>& g, Vertex y) {
  if (!g.has_vertex(y)) throw Error(ErrorCode::kUnknownVertex, "vertex not in graph", std::to_string(y));
  Neighborhood<L> nb;
  std::vector<Vertex> verts{y};
  for (EdgeId e : g.incident(y)) {
    Vertex w = g.other_end(e, y);
    if (w != y) verts.push_back(w);
  }
  std::sort(verts.begin() + 1, verts.end());
  verts.erase(std::unique(verts.begin() + 1, verts.end()), verts.end());
  std::map<Vertex, Vertex> local;
  for (Vertex v : verts) {
    local[v] = nb.graph.add_vertex(g.vertex_label(v));
    nb.vertex_origin.push_back(v);
  }
  for (EdgeId e : g.incident(y)) {
    nb.graph.add_edge(local[g.ends(e).u], local[g.ends(e).v], g.edge_label(e));
    nb.edge_origin.push_back(e);
  }
  return nb;
}

template Neighborhood<false> neighborhood(const Graph&, Vertex);
template Neighborhood<true> neighborhood(const LoopGraph&, Vertex);

// -- Harmonic calculus -------------------------------------------------------

bool is_harmonic(const GraphMorphism& phi) {
  const Graph& src = phi.source();
  const Graph& tgt = phi.target();
  std::vector<int> count(tgt.num_edges(), 0);
  for (Vertex y = 0; y < src.num_vertices(); ++y) {
    for (EdgeId e : src.incident(y)) {
      if (const auto* t = std::get_if<ToEdge>(&phi.edge_image(e))) ++count[t->edge];
    }
    Vertex x = phi(y);
    std::optional<int> common;
    bool harmonic_here = true;
    for (EdgeId t : tgt.incident(x)) {
      if (!common) common = count[t];
      else if (*common != count[t]) harmonic_here = false;
    }
    for (EdgeId e : src.incident(y)) {
      if (const auto* t = std::get_if<ToEdge>(&phi.edge_image(e))) count[t->edge] = 0;
    }
    if (!harmonic_here) return false;
  }
  return true;
}

int degree(const GraphMorphism& phi) {
  if (!is_connected(phi.source()) || !is_connected(phi.target())) {
    throw Error(ErrorCode::kDisconnectedGraph, "degree needs connected source and target");
  }
  if (!is_harmonic(phi)) throw Error(ErrorCode::kNotHarmonic, "degree of a non-harmonic morphism");
  const Graph& tgt = phi.target();
  if (tgt.num_vertices() == 1) return phi.source().num_vertices();
  std::vector<int> preimages(tgt.num_edges(), 0);
  for (const EdgeImage& im : phi.edge_map()) {
    if (const auto* t = std::get_if<ToEdge>(&im)) ++preimages[t->edge];
  }
  for (int c : preimages) {
    if (c != preimages.front()) {
      throw Error(ErrorCode::kNotHarmonic, "edge preimage counts differ");
    }
  }
  return preimages.front();
}

bool is_degenerate_at(const GraphMorphism& phi, Vertex y) {
  if (!phi.source().has_vertex(y)) {
    throw Error(ErrorCode::kUnknownVertex, "vertex not in source", std::to_string(y));
  }
  for (EdgeId e : phi.source().incident(y)) {
    if (!is_vertical(phi.edge_image(e))) return false;
  }
  return true;
}

// -- Spanning trees ----------------------------------------------------------

SpanningTree spanning_tree(const Graph& g, Vertex root) {
  if (!g.has_vertex(root)) throw Error(ErrorCode::kUnknownVertex, "root not in graph", std::to_string(root));
  if (!is_connected(g)) throw Error(ErrorCode::kDisconnectedGraph, "spanning tree of a disconnected graph");
  SpanningTree t;
  t.root = root;
  t.is_tree_edge.assign(g.num_edges(), 0);
  std::vector<char> seen(g.num_vertices(), 0);
  std::queue<Vertex> queue;
  queue.push(root);
  seen[root] = 1;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop();
    for (EdgeId e : g.incident(v)) {
      Vertex w = g.other_end(e, v);
      if (!seen[w]) {
        seen[w] = 1;
        t.is_tree_edge[e] = 1;
        queue.push(w);
      }
    }
  }
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (t.is_tree_edge[e]) {
      t.tree_edges.push_back(e);
    } else {
      const EdgeEnds& ee = g.ends(e);
      t.nontree.push_back({e, std::min(ee.u, ee.v), std::max(ee.u, ee.v)});
    }
  }
  return t;
}

SpanningTree SpanningTree::from_nontree(const Graph& base, Vertex root, std::vector<OrientedEdge> nontree) {
  if (!base.has_vertex(root)) throw Error(ErrorCode::kUnknownVertex, "tree root not in base");
  SpanningTree t;
  t.root = root;
  t.is_tree_edge.assign(base.num_edges(), 1);
  std::sort(nontree.begin(), nontree.end(),
            [](const OrientedEdge& a, const OrientedEdge& b) { return a.edge < b.edge; });
  for (const OrientedEdge& oe : nontree) {
    if (!base.has_edge(oe.edge)) throw Error(ErrorCode::kInvalidInput, "non-tree edge out of range");
    if (!t.is_tree_edge[oe.edge]) throw Error(ErrorCode::kInvalidInput, "non-tree edge listed twice");
    const EdgeEnds& ee = base.ends(oe.edge);
    bool ok = (ee.u == oe.from && ee.v == oe.to) || (ee.u == oe.to && ee.v == oe.from);
    if (!ok) throw Error(ErrorCode::kInvalidInput, "orientation does not match edge endpoints");
    t.is_tree_edge[oe.edge] = 0;
  }
  Graph tree(base.num_vertices());
  for (EdgeId e = 0; e < base.num_edges(); ++e) {
    if (t.is_tree_edge[e]) {
      t.tree_edges.push_back(e);
      tree.add_edge(base.ends(e).u, base.ends(e).v);
    }
  }
  if (!is_connected(tree) || tree.num_edges() != base.num_vertices() - 1) {
    throw Error(ErrorCode::kInvalidInput, "complement of the non-tree edges is not a spanning tree");
  }
  t.nontree = std::move(nontree);
  return t;
}

Graph contract_loops(const LoopGraph& w) {
  Graph g;
  for (Vertex v = 0; v < w.num_vertices(); ++v) g.add_vertex(w.vertex_label(v));
  for (EdgeId e = 0; e < w.num_edges(); ++e) {
    if (!w.is_loop(e)) g.add_edge(w.ends(e).u, w.ends(e).v, w.edge_label(e));
  }
  return g;
}

// -- Isomorphism -------------------------------------------------------------

namespace {

class IsoSearch {
 public:
  IsoSearch(const Graph& a, const Graph& b) : a_(a), b_(b) {
    mult_a_ = multiplicities(a);
    mult_b_ = multiplicities(b);
  }

  std::optional<std::vector<Vertex>> run() {
    int n = a_.num_vertices();
    // Visit vertices component by component in breadth-first order so every
    // choice after the first in a component is constrained by adjacency.
    std::vector<char> seen(n, 0);
    for (Vertex s = 0; s < n; ++s) {
      if (seen[s]) continue;
      std::queue<Vertex> q;
      q.push(s);
      seen[s] = 1;
      while (!q.empty()) {
        Vertex v = q.front();
        q.pop();
        order_.push_back(v);
        for (EdgeId e : a_.incident(v)) {
          Vertex w = a_.other_end(e, v);
          if (!seen[w]) {
            seen[w] = 1;
            q.push(w);
          }
        }
      }
    }
    map_.assign(n, -1);
    used_.assign(n, 0);
    if (extend(0)) return map_;
    return std::nullopt;
  }

 private:
  static std::vector<std::map<Vertex, int>> multiplicities(const Graph& g) {
    std::vector<std::map<Vertex, int>> m(g.num_vertices());
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      ++m[g.ends(e).u][g.ends(e).v];
      ++m[g.ends(e).v][g.ends(e).u];
    }
    return m;
  }

  bool consistent(Vertex v, Vertex w) const {
    if (a_.degree(v) != b_.degree(w)) return false;
    if (mult_a_[v].size() != mult_b_[w].size()) return false;
    for (const auto& [nv, c] : mult_a_[v]) {
      if (map_[nv] < 0) continue;
      auto it = mult_b_[w].find(map_[nv]);
      if (it == mult_b_[w].end() || it->second != c) return false;
    }
    for (const auto& [nw, c] : mult_b_[w]) {
      (void)c;
      if (!used_[nw]) continue;
      // every mapped neighbour of w must be the image of a neighbour of v
      bool found = false;
      for (const auto& [nv, cv] : mult_a_[v]) {
        (void)cv;
        if (map_[nv] == nw) found = true;
      }
      if (!found) return false;
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    Vertex v = order_[depth];
    for (Vertex w = 0; w < b_.num_vertices(); ++w) {
      if (used_[w] || !consistent(v, w)) continue;
      map_[v] = w;
      used_[w] = 1;
      if (extend(depth + 1)) return true;
      map_[v] = -1;
      used_[w] = 0;
    }
    return false;
  }

  const Graph& a_;
  const Graph& b_;
  std::vector<std::map<Vertex, int>> mult_a_, mult_b_;
  std::vector<Vertex> order_;
  std::vector<Vertex> map_;
  std::vector<char> used_;
};

}  // namespace

std::optional<GraphIsomorphism> graphs_isomorphic(const Graph& a, const Graph& b) {
  if (a.num_vertices() > kIsomorphismVertexLimit || b.num_vertices() > kIsomorphismVertexLimit) {
    throw Error(ErrorCode::kSizeLimitExceeded, "graph isomorphism is limited to " +
                                                   std::to_string(kIsomorphismVertexLimit) + " vertices");
  }
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return std::nullopt;
  auto vmap = IsoSearch(a, b).run();
  if (!vmap) return std::nullopt;
  GraphIsomorphism iso;
  iso.vertex_map = *vmap;
  iso.edge_map.assign(a.num_edges(), -1);
  // Multi-edges between the same pair are matched in identifier order.
  std::map<std::pair<Vertex, Vertex>, std::vector<EdgeId>> pool;
  for (EdgeId e = 0; e < b.num_edges(); ++e) {
    auto [u, v] = b.ends(e);
    pool[{std::min(u, v), std::max(u, v)}].push_back(e);
  }
  std::map<std::pair<Vertex, Vertex>, std::size_t> next;
  for (EdgeId e = 0; e < a.num_edges(); ++e) {
    Vertex u = iso.vertex_map[a.ends(e).u];
    Vertex v = iso.vertex_map[a.ends(e).v];
    std::pair<Vertex, Vertex> key{std::min(u, v), std::max(u, v)};
    iso.edge_map[e] = pool.at(key).at(next[key]++);
  }
  return iso;
}

}  // namespace harmcov
