#ifndef HARMCOV_GRAPH_HPP_
#define HARMCOV_GRAPH_HPP_

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "harmcov/error.hpp"

namespace harmcov {

using Vertex = int;
using EdgeId = int;

struct EdgeEnds {
  Vertex u;
  Vertex v;
  bool operator==(const EdgeEnds&) const = default;
};

// Finite multigraph with stable vertex and edge identifiers 0..n-1 / 0..m-1.
// Identifier order is the canonical order used by every deterministic choice
// in the library. Optional string labels are carried for I/O only.
//
// `Graph` rejects loops, `LoopGraph` allows them.
template <bool AllowLoops>
class BasicGraph {
 public:
  static constexpr bool kAllowsLoops = AllowLoops;

  BasicGraph() = default;
  explicit BasicGraph(int num_vertices);

  Vertex add_vertex(std::string label = {});
  EdgeId add_edge(Vertex u, Vertex v, std::string label = {});

  int num_vertices() const { return static_cast<int>(incidence_.size()); }
  int num_edges() const { return static_cast<int>(ends_.size()); }

  const EdgeEnds& ends(EdgeId e) const { return ends_.at(e); }
  bool is_loop(EdgeId e) const { return ends_.at(e).u == ends_.at(e).v; }
  // The endpoint of `e` opposite to `v`; `v` itself for a loop.
  Vertex other_end(EdgeId e, Vertex v) const;
  // Incident edges in identifier order; a loop is listed once.
  const std::vector<EdgeId>& incident(Vertex v) const { return incidence_.at(v); }
  int degree(Vertex v) const { return static_cast<int>(incident(v).size()); }

  bool has_vertex(Vertex v) const { return v >= 0 && v < num_vertices(); }
  bool has_edge(EdgeId e) const { return e >= 0 && e < num_edges(); }

  std::string vertex_label(Vertex v) const;
  std::string edge_label(EdgeId e) const;
  void set_vertex_label(Vertex v, std::string label) {
    vertex_labels_.at(v) = label == std::to_string(v) ? std::string() : std::move(label);
  }
  void set_edge_label(EdgeId e, std::string label) {
    edge_labels_.at(e) = label == std::to_string(e) ? std::string() : std::move(label);
  }
  std::optional<Vertex> find_vertex(const std::string& label) const;
  std::optional<EdgeId> find_edge(const std::string& label) const;

  // Same incidence structure, labels ignored.
  bool same_structure(const BasicGraph& other) const {
    return ends_ == other.ends_ && num_vertices() == other.num_vertices();
  }
  bool operator==(const BasicGraph& other) const = default;

 private:
  std::vector<EdgeEnds> ends_;
  std::vector<std::vector<EdgeId>> incidence_;
  std::vector<std::string> vertex_labels_;
  std::vector<std::string> edge_labels_;
};

using Graph = BasicGraph<false>;
using LoopGraph = BasicGraph<true>;

extern template class BasicGraph<false>;
extern template class BasicGraph<true>;

LoopGraph to_loop_graph(const Graph& g);

// -- Morphisms ---------------------------------------------------------------

struct ToEdge {
  EdgeId edge;
  bool operator==(const ToEdge&) const = default;
};
struct ToVertex {
  Vertex vertex;
  bool operator==(const ToVertex&) const = default;
};
// Image of an edge: a target edge, or a target vertex for a vertical edge.
using EdgeImage = std::variant<ToEdge, ToVertex>;

inline bool is_vertical(const EdgeImage& image) { return std::holds_alternative<ToVertex>(image); }

template <bool AllowLoops>
class BasicMorphism {
 public:
  using GraphType = BasicGraph<AllowLoops>;

  // Throws kInvalidInput unless the maps are compatible with endpoints.
  BasicMorphism(GraphType source, GraphType target, std::vector<Vertex> vertex_map,
                std::vector<EdgeImage> edge_map);

  const GraphType& source() const { return source_; }
  const GraphType& target() const { return target_; }
  Vertex operator()(Vertex v) const { return vertex_map_.at(v); }
  const EdgeImage& edge_image(EdgeId e) const { return edge_map_.at(e); }
  const std::vector<Vertex>& vertex_map() const { return vertex_map_; }
  const std::vector<EdgeImage>& edge_map() const { return edge_map_; }

  bool operator==(const BasicMorphism&) const = default;

 private:
  GraphType source_;
  GraphType target_;
  std::vector<Vertex> vertex_map_;
  std::vector<EdgeImage> edge_map_;
};

using GraphMorphism = BasicMorphism<false>;
using LoopGraphMorphism = BasicMorphism<true>;

extern template class BasicMorphism<false>;
extern template class BasicMorphism<true>;

GraphMorphism identity_morphism(const Graph& g);

// -- Spanning trees ----------------------------------------------------------

struct OrientedEdge {
  EdgeId edge;
  Vertex from;
  Vertex to;
  bool operator==(const OrientedEdge&) const = default;
};

// A spanning tree of a connected graph, rooted at the basepoint. The oriented
// non-tree edges form the free basis of the fundamental group at `root`.
struct SpanningTree {
  Vertex root = 0;
  std::vector<EdgeId> tree_edges;        // sorted
  std::vector<OrientedEdge> nontree;     // sorted by edge identifier
  std::vector<char> is_tree_edge;        // indexed by edge identifier

  // Validates that the complement of `nontree` is a spanning tree of `base`.
  static SpanningTree from_nontree(const Graph& base, Vertex root, std::vector<OrientedEdge> nontree);

  bool operator==(const SpanningTree&) const = default;
};

// -- Operations --------------------------------------------------------------

template <bool L>
std::vector<std::vector<Vertex>> connected_components(const BasicGraph<L>& g);
template <bool L>
bool is_connected(const BasicGraph<L>& g);

// |E| - |V| + 1. Throws kDisconnectedGraph.
int genus(const Graph& g);

template <bool L>
struct Neighborhood {
  BasicGraph<L> graph;                 // vertex 0 is the centre
  std::vector<Vertex> vertex_origin;   // subgraph vertex -> original vertex
  std::vector<EdgeId> edge_origin;     // subgraph edge -> original edge
};

// The smallest neighbourhood y(1): y, its neighbours, and its incident edges.
template <bool L>
Neighborhood<L> neighborhood(const BasicGraph<L>& g, Vertex y);

bool is_harmonic(const GraphMorphism& phi);
// Degree as a harmonic morphism; |V(source)| when the target is the point.
int degree(const GraphMorphism& phi);
bool is_degenerate_at(const GraphMorphism& phi, Vertex y);

// Breadth-first tree from `root`, scanning incident edges in identifier order.
SpanningTree spanning_tree(const Graph& g, Vertex root);

Graph contract_loops(const LoopGraph& w);

struct GraphIsomorphism {
  std::vector<Vertex> vertex_map;
  std::vector<EdgeId> edge_map;
};

inline constexpr int kIsomorphismVertexLimit = 64;

// Backtracking isomorphism search. Throws kSizeLimitExceeded beyond
// kIsomorphismVertexLimit vertices.
std::optional<GraphIsomorphism> graphs_isomorphic(const Graph& a, const Graph& b);

// Vertex -> component index, components numbered by smallest vertex.
template <bool L>
std::vector<int> component_index(const BasicGraph<L>& g);

}  // namespace harmcov

#endif  // HARMCOV_GRAPH_HPP_
