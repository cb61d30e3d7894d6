#ifndef HARMCOV_TESTS_ORACLES_HPP_
#define HARMCOV_TESTS_ORACLES_HPP_

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "harmcov/action.hpp"

// Brute-force reference implementations written straight from the
// definitions. They share nothing with the library beyond the plain data
// accessors of Graph, FiniteGroup and GraphAction.
namespace harmcov::oracle {

// Harmonic: at every source vertex, each edge at the image vertex has the
// same number of preimages among the incident edges.
inline bool harmonic(const GraphMorphism& phi) {
  const Graph& y = phi.source();
  const Graph& x = phi.target();
  for (Vertex w = 0; w < y.num_vertices(); ++w) {
    std::map<EdgeId, int> count;
    for (EdgeId e : x.incident(phi(w))) count[e] = 0;
    for (EdgeId e : y.incident(w)) {
      if (const auto* t = std::get_if<ToEdge>(&phi.edge_image(e))) ++count.at(t->edge);
    }
    std::set<int> values;
    for (const auto& [e, c] : count) values.insert(c);
    if (values.size() > 1) return false;
  }
  return true;
}

// Every subgroup, by testing every subset for closure. Fine up to order 12.
inline std::vector<std::vector<Element>> subgroups(const FiniteGroup& g) {
  const int n = g.order();
  std::vector<std::vector<Element>> out;
  for (unsigned mask = 1; mask < (1u << n); mask += 2) {  // identity bit always set
    std::vector<Element> s;
    for (int i = 0; i < n; ++i) {
      if (mask >> i & 1u) s.push_back(i);
    }
    bool closed = true;
    for (Element a : s) {
      for (Element b : s) {
        if (!(mask >> g.mul(a, b) & 1u)) closed = false;
      }
    }
    if (closed) out.push_back(s);
  }
  return out;
}

inline int find_root(std::vector<int>& parent, int a) {
  while (parent[a] != a) a = parent[a] = parent[parent[a]];
  return a;
}

// H-orbit index of every vertex and edge.
struct Orbits {
  std::vector<int> vertex;
  std::vector<int> edge;
};

inline Orbits orbits(const GraphAction& a, const std::vector<Element>& h) {
  const Graph& y = a.carrier();
  std::vector<int> pv(y.num_vertices()), pe(y.num_edges());
  std::iota(pv.begin(), pv.end(), 0);
  std::iota(pe.begin(), pe.end(), 0);
  for (Element g : h) {
    for (Vertex v = 0; v < y.num_vertices(); ++v) pv[find_root(pv, v)] = find_root(pv, a.act(g, v));
    for (EdgeId e = 0; e < y.num_edges(); ++e) pe[find_root(pe, e)] = find_root(pe, a.act_edge(g, e));
  }
  Orbits o{std::vector<int>(y.num_vertices()), std::vector<int>(y.num_edges())};
  for (Vertex v = 0; v < y.num_vertices(); ++v) o.vertex[v] = find_root(pv, v);
  for (EdgeId e = 0; e < y.num_edges(); ++e) o.edge[e] = find_root(pe, e);
  return o;
}

// The quotient morphism by H is harmonic; checked on orbit indices without
// building the quotient graph.
inline bool quotient_harmonic(const GraphAction& a, const std::vector<Element>& h) {
  const Graph& y = a.carrier();
  Orbits o = orbits(a, h);
  auto vertical = [&](EdgeId e) { return o.vertex[y.ends(e).u] == o.vertex[y.ends(e).v]; };
  // Edge orbits at each vertex orbit.
  std::map<int, std::set<int>> at;
  for (EdgeId e = 0; e < y.num_edges(); ++e) {
    if (vertical(e)) continue;
    at[o.vertex[y.ends(e).u]].insert(o.edge[e]);
    at[o.vertex[y.ends(e).v]].insert(o.edge[e]);
  }
  for (Vertex w = 0; w < y.num_vertices(); ++w) {
    std::map<int, int> count;
    for (int eo : at[o.vertex[w]]) count[eo] = 0;
    for (EdgeId e : y.incident(w)) {
      if (!vertical(e)) ++count[o.edge[e]];
    }
    std::set<int> values;
    for (const auto& [eo, c] : count) values.insert(c);
    if (values.size() > 1) return false;
  }
  return true;
}

inline bool harmonic_action_by_definition(const GraphAction& a) {
  for (const std::vector<Element>& h : subgroups(a.group())) {
    if (!quotient_harmonic(a, h)) return false;
  }
  return true;
}

inline std::vector<Element> stabilizer(const GraphAction& a, Vertex v) {
  std::vector<Element> s;
  for (Element g = 0; g < a.group().order(); ++g) {
    if (a.act(g, v) == v) s.push_back(g);
  }
  return s;
}

inline std::vector<Element> edge_stabilizer(const GraphAction& a, EdgeId e) {
  std::vector<Element> s;
  for (Element g = 0; g < a.group().order(); ++g) {
    if (a.act_edge(g, e) == e) s.push_back(g);
  }
  return s;
}

// Stabilizer of the connected component of w inside the fiber over f(w),
// where the fiber is the subgraph of vertical edges.
inline std::vector<Element> decomposition_group(const PointedCover& c, Vertex w) {
  const Graph& y = c.carrier();
  std::vector<int> parent(y.num_vertices());
  std::iota(parent.begin(), parent.end(), 0);
  for (EdgeId e = 0; e < y.num_edges(); ++e) {
    if (is_vertical(c.projection().edge_image(e))) parent[find_root(parent, y.ends(e).u)] = find_root(parent, y.ends(e).v);
  }
  std::vector<Element> s;
  for (Element g = 0; g < c.group().order(); ++g) {
    if (find_root(parent, c.action().act(g, w)) == find_root(parent, w)) s.push_back(g);
  }
  return s;
}

inline bool connected(const Graph& y) {
  if (y.num_vertices() == 0) return true;
  std::vector<int> parent(y.num_vertices());
  std::iota(parent.begin(), parent.end(), 0);
  for (EdgeId e = 0; e < y.num_edges(); ++e) parent[find_root(parent, y.ends(e).u)] = find_root(parent, y.ends(e).v);
  for (Vertex v = 0; v < y.num_vertices(); ++v) {
    if (find_root(parent, v) != find_root(parent, 0)) return false;
  }
  return true;
}

inline std::vector<int> degree_sequence(const Graph& y) {
  std::vector<int> d;
  for (Vertex v = 0; v < y.num_vertices(); ++v) d.push_back(y.degree(v));
  std::sort(d.begin(), d.end());
  return d;
}

// I d I as a sorted set, by direct enumeration.
inline std::vector<Element> double_coset(const FiniteGroup& g, const std::vector<Element>& i, Element d) {
  std::set<Element> s;
  for (Element a : i) {
    for (Element b : i) s.insert(g.mul(g.mul(a, d), b));
  }
  return {s.begin(), s.end()};
}

}  // namespace harmcov::oracle

#endif  // HARMCOV_TESTS_ORACLES_HPP_
