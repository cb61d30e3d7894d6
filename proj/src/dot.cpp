#include "harmcov/dot.hpp"

#include <sstream>

namespace harmcov {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

const char* const kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

template <bool L>
std::string plain(const BasicGraph<L>& g) {
  std::ostringstream os;
  os << "graph G {\n";
  for (Vertex v = 0; v < g.num_vertices(); ++v) os << "  v" << v << " [label=" << quoted(g.vertex_label(v)) << "];\n";
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    os << "  v" << g.ends(e).u << " -- v" << g.ends(e).v << " [label=" << quoted(g.edge_label(e)) << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace

std::string to_dot(const Graph& g) { return plain(g); }
std::string to_dot(const LoopGraph& g) { return plain(g); }

std::string to_dot(const GraphAction& a) {
  const Graph& y = a.carrier();
  const std::vector<int> orbit = a.vertex_orbit_index();
  std::ostringstream os;
  os << "graph G {\n  node [style=filled, fontcolor=white];\n";
  for (Vertex v = 0; v < y.num_vertices(); ++v) {
    os << "  v" << v << " [label=" << quoted(y.vertex_label(v)) << ", fillcolor=\"" << kPalette[orbit[v] % 10]
       << "\"];\n";
  }
  for (EdgeId e = 0; e < y.num_edges(); ++e) {
    os << "  v" << y.ends(e).u << " -- v" << y.ends(e).v << " [label=" << quoted(y.edge_label(e)) << "];\n";
  }
  os << "}\n";
  return os.str();
}

std::string to_dot(const PointedCover& c) {
  const Graph& y = c.carrier();
  const Graph& x = c.base();
  std::ostringstream os;
  os << "graph G {\n  compound=true;\n";
  for (Vertex z = 0; z < x.num_vertices(); ++z) {
    os << "  subgraph cluster_" << z << " {\n    label=" << quoted(x.vertex_label(z)) << ";\n";
    for (Vertex w : c.fiber_vertices(z)) {
      os << "    v" << w << " [label=" << quoted(y.vertex_label(w));
      if (w == c.cover_point()) os << ", peripheries=2";
      os << "];\n";
    }
    os << "  }\n";
  }
  for (EdgeId e = 0; e < y.num_edges(); ++e) {
    os << "  v" << y.ends(e).u << " -- v" << y.ends(e).v;
    if (is_vertical(c.projection().edge_image(e))) os << " [style=dashed]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace harmcov
