#include "fixtures.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace harmcov::testing {

Graph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph point() { return Graph(1); }

Graph segment() {
  Graph g;
  g.add_vertex("u");
  g.add_vertex("v");
  g.add_edge(0, 1);
  return g;
}

FiniteGroup s3() { return FiniteGroup::symmetric(3); }

Element el(const FiniteGroup& g, const std::string& name) {
  auto found = g.find(name);
  if (!found) throw std::invalid_argument("no element named " + name);
  return *found;
}

namespace {

// Left-regular action on a graph whose vertices are the group elements and
// whose edges come in blocks of |G|, edge (block, g) joining g and g*d.
GraphAction regular_blocks(const FiniteGroup& g, const std::vector<Element>& steps) {
  const int n = g.order();
  Graph y(n);
  for (Element d : steps) {
    for (Element a = 0; a < n; ++a) y.add_edge(a, g.mul(a, d));
  }
  std::vector<std::vector<Vertex>> vp(n, std::vector<Vertex>(n));
  std::vector<std::vector<EdgeId>> ep(n, std::vector<EdgeId>(y.num_edges()));
  for (Element h = 0; h < n; ++h) {
    for (Element a = 0; a < n; ++a) vp[h][a] = g.mul(h, a);
    for (std::size_t b = 0; b < steps.size(); ++b) {
      for (Element a = 0; a < n; ++a) ep[h][b * n + a] = static_cast<EdgeId>(b * n + g.mul(h, a));
    }
  }
  return GraphAction(g, y, vp, ep);
}

// Vertices G and edges g -- g*d for each step, then one single edge
// {a, a*i} per left coset of <i>: those edges are flipped by a*i*a^-1.
GraphAction regular_with_single_rungs(const FiniteGroup& g, const std::vector<Element>& steps, Element i) {
  GraphAction base = regular_blocks(g, steps);
  const int n = g.order();
  Graph y = base.carrier();
  std::vector<EdgeId> rung_of(n, -1);
  for (Element a = 0; a < n; ++a) {
    if (rung_of[a] >= 0) continue;
    rung_of[a] = rung_of[g.mul(a, i)] = y.add_edge(a, g.mul(a, i));
  }
  std::vector<std::vector<EdgeId>> ep = base.edge_perms();
  for (Element h = 0; h < n; ++h) {
    ep[h].resize(y.num_edges());
    for (Element a = 0; a < n; ++a) ep[h][rung_of[a]] = rung_of[g.mul(h, a)];
  }
  return GraphAction(g, y, base.vertex_perms(), ep);
}

// Action on the cosets of {e, i} where i is an involution, with edge a
// joining the cosets of a and a*d.
GraphAction coset_edges(const FiniteGroup& g, Element i, Element d) {
  const int n = g.order();
  std::vector<int> coset(n, -1);
  int next = 0;
  for (Element a = 0; a < n; ++a) {
    if (coset[a] >= 0) continue;
    coset[a] = coset[g.mul(a, i)] = next++;
  }
  Graph y(next);
  for (Element a = 0; a < n; ++a) y.add_edge(coset[a], coset[g.mul(a, d)]);
  std::vector<std::vector<Vertex>> vp(n, std::vector<Vertex>(next));
  std::vector<std::vector<EdgeId>> ep(n, std::vector<EdgeId>(n));
  for (Element h = 0; h < n; ++h) {
    for (Element a = 0; a < n; ++a) {
      vp[h][coset[a]] = coset[g.mul(h, a)];
      ep[h][a] = g.mul(h, a);
    }
  }
  return GraphAction(g, y, vp, ep);
}

}  // namespace

GraphAction s3_cayley_by_hand() {
  FiniteGroup g = s3();
  // The τ block already doubles every rung: g -- gτ and gτ -- g are not
  // identified for an involution.
  return regular_blocks(g, {el(g, "σ"), el(g, "τ")});
}

GraphAction z6_cayley_by_hand() {
  FiniteGroup g = FiniteGroup::cyclic(6);
  return regular_blocks(g, {2, 3});
}

GraphAction s3_double_triangle() {
  FiniteGroup g = s3();
  return coset_edges(g, el(g, "τ"), el(g, "σ"));
}

GraphAction z6_double_triangle() { return coset_edges(FiniteGroup::cyclic(6), 3, 2); }

namespace {

PointedCover z2_segment(int left_pairs, int right_pairs) {
  FiniteGroup g = FiniteGroup::cyclic(2);
  Graph y;
  for (const char* name : {"u0", "u1", "v0", "v1"}) y.add_vertex(name);
  std::vector<EdgeImage> em;
  std::vector<EdgeId> swap;
  y.add_edge(0, 2);
  y.add_edge(1, 3);
  em = {ToEdge{0}, ToEdge{0}};
  swap = {1, 0};
  auto add_pairs = [&](int pairs, Vertex a, Vertex b, Vertex over) {
    for (int k = 0; k < pairs; ++k) {
      EdgeId e = y.add_edge(a, b);
      y.add_edge(b, a);
      em.push_back(ToVertex{over});
      em.push_back(ToVertex{over});
      swap.push_back(e + 1);
      swap.push_back(e);
    }
  };
  add_pairs(left_pairs, 0, 1, 0);
  add_pairs(right_pairs, 2, 3, 1);
  std::vector<EdgeId> id(y.num_edges());
  std::iota(id.begin(), id.end(), 0);
  GraphAction a(g, y, {{0, 1, 2, 3}, {1, 0, 3, 2}}, {id, swap});
  GraphMorphism proj(y, segment(), {0, 0, 1, 1}, em);
  return PointedCover(a, segment(), 0, proj, 0);
}

}  // namespace

PointedCover z2_segment_cover_with_loops() { return z2_segment(2, 1); }
PointedCover z2_segment_cover() { return z2_segment(1, 0); }

GraphAction z2_flip_edge() {
  Graph y(2);
  y.add_edge(0, 1);
  return GraphAction(FiniteGroup::cyclic(2), y, {{0, 1}, {1, 0}}, {{0}, {0}});
}

// -- Random families ---------------------------------------------------------

namespace {

FiniteGroup q8() {
  FiniteGroup g = FiniteGroup::from_permutations({{1, 2, 3, 0, 5, 6, 7, 4}, {4, 7, 6, 5, 2, 1, 0, 3}}, {"i", "j"});
  if (g.order() != 8) throw std::logic_error("quaternion generators are wrong");
  return g;
}

FiniteGroup a4() {
  return FiniteGroup::from_permutations({{1, 2, 0, 3}, {1, 0, 3, 2}}, {"c", "d"});
}

}  // namespace

std::vector<NamedGroup> descriptor_groups() {
  using G = FiniteGroup;
  return {
      {"Z2", G::cyclic(2)},
      {"Z3", G::cyclic(3)},
      {"Z4", G::cyclic(4)},
      {"Z2xZ2", G::dihedral(2)},
      {"Z6", G::cyclic(6)},
      {"S3", G::symmetric(3)},
      {"Z8", G::cyclic(8)},
      {"D4", G::dihedral(4)},
      {"Q8", q8()},
      {"Z2xZ4", G::product(G::cyclic(2), G::cyclic(4))},
      {"Z12", G::cyclic(12)},
      {"D6", G::dihedral(6)},
      {"A4", a4()},
  };
}

std::vector<NamedGroup> small_groups() {
  using G = FiniteGroup;
  std::vector<NamedGroup> out = descriptor_groups();
  out.push_back({"Z5", G::cyclic(5)});
  out.push_back({"D5", G::dihedral(5)});
  out.push_back({"Z2^3", G::product(G::cyclic(2), G::dihedral(2))});
  out.push_back({"Z3xZ3", G::product(G::cyclic(3), G::cyclic(3))});
  return out;
}

Graph random_connected_graph(std::mt19937& rng, int max_vertices, int max_genus) {
  std::uniform_int_distribution<int> nv_dist(1, max_vertices);
  const int nv = nv_dist(rng);
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < nv; ++v) {
    int p = std::uniform_int_distribution<int>(0, v - 1)(rng);
    edges.emplace_back(p, v);
  }
  if (nv >= 2) {
    const int extra = std::uniform_int_distribution<int>(0, max_genus)(rng);
    std::uniform_int_distribution<int> vd(0, nv - 1);
    for (int k = 0; k < extra; ++k) {
      int a = vd(rng), b = vd(rng);
      while (b == a) b = vd(rng);
      edges.emplace_back(a, b);
    }
  }
  std::shuffle(edges.begin(), edges.end(), rng);
  Graph g(nv);
  for (auto [a, b] : edges) {
    if (rng() % 2) std::swap(a, b);
    g.add_edge(a, b);
  }
  return g;
}

CoverDescriptor random_descriptor(std::mt19937& rng, const FiniteGroup& g, int max_vertices, int max_genus,
                                  int max_multiset) {
  std::uniform_int_distribution<int> elt(0, g.order() - 1);
  std::uniform_int_distribution<int> nonid(1, g.order() - 1);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    Graph base = random_connected_graph(rng, max_vertices, max_genus);
    Vertex root = std::uniform_int_distribution<int>(0, base.num_vertices() - 1)(rng);
    CoverDescriptor d = trivial_descriptor(base, root, g);
    for (Element& m : d.monodromy) m = elt(rng);
    for (SymmetricMultiset& s : d.multisets) {
      const int target = std::uniform_int_distribution<int>(0, max_multiset)(rng);
      for (int tries = 0; tries < 8 && s.size() < target; ++tries) {
        Element u = nonid(rng);
        const int cost = g.is_involution(u) ? 1 : 2;
        if (s.size() + cost <= target) s.add_unit(u);
      }
    }
    if (subgroup_generated(g, d.generators()).is_whole()) return d;
  }
  throw std::runtime_error("could not sample a generating descriptor");
}

InertiaStructure random_inertia(std::mt19937& rng, const FiniteGroup& g, int num_vertices) {
  std::vector<Subgroup> subs = all_subgroups(g);
  InertiaStructure inertia = InertiaStructure::trivial(g, num_vertices);
  for (Subgroup& s : inertia.subgroups) {
    if (rng() % 2) s = subs[std::uniform_int_distribution<std::size_t>(0, subs.size() - 1)(rng)];
  }
  return inertia;
}

namespace {

struct CosetSpace {
  std::vector<std::vector<Element>> cosets;
  std::vector<int> coset_of;
};

CosetSpace coset_space(const Subgroup& h) {
  CosetSpace cs;
  cs.cosets = left_cosets(h);
  cs.coset_of.assign(h.group().order(), -1);
  for (std::size_t i = 0; i < cs.cosets.size(); ++i) {
    for (Element a : cs.cosets[i]) cs.coset_of[a] = static_cast<int>(i);
  }
  return cs;
}

// One random action assembled from transitive G-sets, or nullopt when the
// draw is unusable.
std::optional<GraphAction> random_gset_action(std::mt19937& rng, const FiniteGroup& g) {
  const std::vector<Subgroup> subs = all_subgroups(g);
  auto pick = [&](const std::vector<Subgroup>& from) {
    return from[std::uniform_int_distribution<std::size_t>(0, from.size() - 1)(rng)];
  };
  // Vertex orbits.
  std::vector<CosetSpace> vorbits;
  std::vector<int> offset;
  int nv = 0;
  const int orbit_count = std::uniform_int_distribution<int>(1, 3)(rng);
  for (int k = 0; k < orbit_count; ++k) {
    Subgroup h = pick(subs);
    if (nv + h.index() > 12) continue;
    offset.push_back(nv);
    nv += h.index();
    vorbits.push_back(coset_space(h));
  }
  if (nv < 2) return std::nullopt;
  auto vertex_act = [&](Element x, Vertex v) {
    for (std::size_t i = vorbits.size(); i-- > 0;) {
      if (v >= offset[i]) {
        const Element rep = vorbits[i].cosets[v - offset[i]].front();
        return offset[i] + vorbits[i].coset_of[g.mul(x, rep)];
      }
    }
    return -1;
  };
  auto stabilizer = [&](Vertex v) {
    std::vector<Element> s;
    for (Element x = 0; x < g.order(); ++x) {
      if (vertex_act(x, v) == v) s.push_back(x);
    }
    return Subgroup(g, s);
  };

  Graph y(nv);
  struct EdgeOrbit {
    CosetSpace space;
    Vertex a, b;
    EdgeId first;
  };
  std::vector<EdgeOrbit> eorbits;
  const int edge_orbit_count = std::uniform_int_distribution<int>(1, 4)(rng);
  for (int k = 0; k < edge_orbit_count; ++k) {
    const std::size_t i = std::uniform_int_distribution<std::size_t>(0, vorbits.size() - 1)(rng);
    const Vertex a = offset[i];
    const Vertex b = std::uniform_int_distribution<int>(0, nv - 1)(rng);
    if (a == b) continue;
    std::vector<Element> common;
    Subgroup sa = stabilizer(a), sb = stabilizer(b);
    for (Element x : sa.elements()) {
      if (sb.contains(x)) common.push_back(x);
    }
    Subgroup meet(g, common);
    std::vector<Subgroup> inside;
    for (const Subgroup& s : subs) {
      if (s.is_subset_of(meet)) inside.push_back(s);
    }
    Subgroup k0 = (rng() % 2) ? Subgroup::trivial(g) : pick(inside);
    Subgroup kk = k0;
    if (rng() % 3 == 0) {
      // Try a flipped orbit: add an element exchanging a and b.
      std::vector<Element> swaps;
      for (Element x = 0; x < g.order(); ++x) {
        if (vertex_act(x, a) == b && vertex_act(x, b) == a) swaps.push_back(x);
      }
      if (!swaps.empty()) {
        std::vector<Element> seeds = k0.elements();
        seeds.push_back(swaps[std::uniform_int_distribution<std::size_t>(0, swaps.size() - 1)(rng)]);
        Subgroup cand = subgroup_generated(g, seeds);
        bool preserves = true;
        for (Element x : cand.elements()) {
          const Vertex xa = vertex_act(x, a), xb = vertex_act(x, b);
          preserves = preserves && ((xa == a && xb == b) || (xa == b && xb == a));
        }
        if (preserves) kk = cand;
      }
    }
    EdgeOrbit eo{coset_space(kk), a, b, y.num_edges()};
    for (const auto& c : eo.space.cosets) y.add_edge(vertex_act(c.front(), a), vertex_act(c.front(), b));
    eorbits.push_back(std::move(eo));
  }
  if (y.num_edges() == 0) return std::nullopt;
  std::vector<std::vector<Vertex>> vp(g.order(), std::vector<Vertex>(nv));
  std::vector<std::vector<EdgeId>> ep(g.order(), std::vector<EdgeId>(y.num_edges()));
  for (Element x = 0; x < g.order(); ++x) {
    for (Vertex v = 0; v < nv; ++v) vp[x][v] = vertex_act(x, v);
    for (const EdgeOrbit& eo : eorbits) {
      for (std::size_t c = 0; c < eo.space.cosets.size(); ++c) {
        ep[x][eo.first + c] = eo.first + eo.space.coset_of[g.mul(x, eo.space.cosets[c].front())];
      }
    }
  }
  GraphAction act(g, y, vp, ep);
  if (!is_faithful(act)) return std::nullopt;
  return act;
}

}  // namespace

std::vector<LabeledAction> oracle_family(std::uint32_t seed, int random_count) {
  std::vector<LabeledAction> out;
  auto add = [&](std::string name, const GraphAction& a) { out.push_back({std::move(name), a}); };
  FiniteGroup g3 = s3();

  add("s3-cayley", s3_cayley_by_hand());
  add("z6-cayley", z6_cayley_by_hand());
  add("s3-cayley-single-rungs", regular_with_single_rungs(g3, {el(g3, "σ")}, el(g3, "τ")));
  add("z6-cayley-single-rungs", regular_with_single_rungs(FiniteGroup::cyclic(6), {2}, 3));
  add("s3-double-triangle", s3_double_triangle());
  add("z6-double-triangle", z6_double_triangle());
  add("z2-segment-with-loops", z2_segment_cover_with_loops().action());
  add("z2-segment", z2_segment_cover().action());
  add("z2-flip-edge", z2_flip_edge());
  add("trivial-triangle", GraphAction::trivial(cycle_graph(3)));
  {
    // Z/2 fixing one vertex of a path and swapping its neighbours.
    Graph y = path_graph(3);
    add("z2-path-reflection", GraphAction(FiniteGroup::cyclic(2), y, {{0, 1, 2}, {2, 1, 0}}, {{0, 1}, {1, 0}}));
  }
  {
    // S3 on the cosets of <τ> with one edge per pair of cosets: the
    // triangle with its full symmetry group, every edge flipped.
    GraphAction dt = s3_double_triangle();
    Graph y = cycle_graph(3);
    auto edge_of = [&](Vertex u, Vertex v) {
      for (EdgeId j = 0; j < 3; ++j) {
        const EdgeEnds& ee = y.ends(j);
        if ((ee.u == u && ee.v == v) || (ee.u == v && ee.v == u)) return j;
      }
      return -1;
    };
    std::vector<std::vector<EdgeId>> ep;
    for (Element x = 0; x < g3.order(); ++x) {
      std::vector<EdgeId> e(3);
      for (EdgeId j = 0; j < 3; ++j) e[j] = edge_of(dt.act(x, y.ends(j).u), dt.act(x, y.ends(j).v));
      ep.push_back(e);
    }
    add("s3-single-triangle", GraphAction(g3, y, dt.vertex_perms(), ep));
  }

  const std::size_t fixed = out.size();
  for (std::size_t i = 0; i < fixed; ++i) {
    try {
      if (is_harmonic_action(out[i].action) && !is_unflipped(out[i].action)) {
        add(out[i].name + "-unflipped", unflipped_model(out[i].action));
      }
    } catch (const Error&) {
    }
  }

  std::mt19937 rng(seed);
  std::vector<NamedGroup> groups = small_groups();
  int made = 0;
  for (int attempt = 0; made < random_count && attempt < 200 * random_count; ++attempt) {
    const NamedGroup& ng = groups[attempt % groups.size()];
    std::optional<GraphAction> a = random_gset_action(rng, ng.group);
    if (!a) continue;
    add("random-" + ng.name + "-" + std::to_string(made), *a);
    ++made;
  }
  return out;
}

}  // namespace harmcov::testing
