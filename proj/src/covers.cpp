#include "harmcov/covers.hpp"

#include <map>
#include <queue>

namespace harmcov {

namespace {

std::string subgroup_witness(const Subgroup& h) {
  std::string s = "{";
  for (std::size_t i = 0; i < h.elements().size(); ++i) {
    if (i) s += ",";
    s += h.group().name(h.elements()[i]);
  }
  return s + "}";
}

// Element g with g * from == to in a vertex-free action, or -1.
Element translating_element(const GraphAction& a, Vertex from, Vertex to) {
  for (Element g = 0; g < a.group().order(); ++g) {
    if (a.act(g, from) == to) return g;
  }
  return -1;
}

}  // namespace

// -- Descriptors ---------------------------------------------------------------

void CoverDescriptor::validate() const {
  // Rebuilding the tree checks that the non-tree edges leave a spanning tree.
  SpanningTree rebuilt = SpanningTree::from_nontree(base, tree.root, tree.nontree);
  if (!(rebuilt == tree)) throw Error(ErrorCode::kInvalidInput, "spanning tree data is inconsistent");
  if (monodromy.size() != tree.nontree.size()) {
    throw Error(ErrorCode::kInvalidInput, "one monodromy value is needed per non-tree edge");
  }
  for (Element g : monodromy) {
    if (!group.valid(g)) throw Error(ErrorCode::kInvalidInput, "monodromy value out of range", std::to_string(g));
  }
  if (static_cast<int>(multisets.size()) != base.num_vertices()) {
    throw Error(ErrorCode::kInvalidInput, "one multiset is needed per base vertex");
  }
  for (const SymmetricMultiset& s : multisets) {
    if (!(s.group() == group)) throw Error(ErrorCode::kGroupMismatch, "multiset over a different group");
  }
}

std::vector<Element> CoverDescriptor::generators() const {
  std::vector<Element> out = monodromy;
  for (const SymmetricMultiset& s : multisets) {
    for (Element a : s.elements()) out.push_back(a);
  }
  return out;
}

bool CoverDescriptor::operator==(const CoverDescriptor& other) const {
  return base.same_structure(other.base) && tree == other.tree && group == other.group &&
         monodromy == other.monodromy && multisets == other.multisets;
}

CoverDescriptor trivial_descriptor(const Graph& base, Vertex basepoint, const FiniteGroup& group) {
  SpanningTree t = spanning_tree(base, basepoint);
  std::vector<Element> mono(t.nontree.size(), FiniteGroup::kIdentity);
  std::vector<SymmetricMultiset> ms(base.num_vertices(), SymmetricMultiset(group));
  return CoverDescriptor{base, std::move(t), group, std::move(mono), std::move(ms)};
}

InertiaStructure InertiaStructure::trivial(const FiniteGroup& group, int num_vertices) {
  return InertiaStructure{group, std::vector<Subgroup>(num_vertices, Subgroup::trivial(group))};
}

// -- Tree lift -----------------------------------------------------------------

TreeLift tree_lift(const PointedCover& c, const SpanningTree& t) {
  const Graph& x = c.base();
  const Graph& y = c.carrier();
  if (t.root != c.basepoint()) throw Error(ErrorCode::kInvalidInput, "tree is not rooted at the basepoint");
  if (static_cast<int>(t.is_tree_edge.size()) != x.num_edges()) {
    throw Error(ErrorCode::kBaseMismatch, "tree belongs to a different base");
  }
  TreeLift lift;
  lift.section.assign(x.num_vertices(), -1);
  lift.edges.assign(x.num_edges(), -1);
  lift.section[t.root] = c.cover_point();
  std::queue<Vertex> q;
  q.push(t.root);
  while (!q.empty()) {
    Vertex p = q.front();
    q.pop();
    for (EdgeId e : x.incident(p)) {
      if (!t.is_tree_edge[e]) continue;
      Vertex child = x.other_end(e, p);
      if (lift.section[child] >= 0) continue;
      EdgeId chosen = -1;
      for (EdgeId f : y.incident(lift.section[p])) {
        if (c.projection().edge_image(f) == EdgeImage{ToEdge{e}}) {
          chosen = f;
          break;
        }
      }
      if (chosen < 0) throw Error(ErrorCode::kNoLift, "no preimage of a tree edge at the lifted vertex", x.edge_label(e));
      lift.edges[e] = chosen;
      lift.section[child] = y.other_end(chosen, lift.section[p]);
      q.push(child);
    }
  }
  for (Vertex z = 0; z < x.num_vertices(); ++z) {
    if (lift.section[z] < 0) throw Error(ErrorCode::kInvalidInput, "tree does not span the base", x.vertex_label(z));
  }
  return lift;
}

// -- Synthesis -------------------------------------------------------------------

EtaleBuild build_etale_unchecked(const CoverDescriptor& d) {
  d.validate();
  const FiniteGroup& g = d.group;
  const Graph& x = d.base;
  const int n = g.order();
  Graph y;
  for (Vertex z = 0; z < x.num_vertices(); ++z) {
    for (Element a = 0; a < n; ++a) y.add_vertex(x.vertex_label(z) + ":" + g.name(a));
  }
  auto id = [n](Vertex z, Element a) { return z * n + a; };

  std::vector<Element> shift(x.num_edges(), FiniteGroup::kIdentity);
  std::vector<Vertex> from(x.num_edges()), to(x.num_edges());
  for (EdgeId e = 0; e < x.num_edges(); ++e) {
    from[e] = x.ends(e).u;
    to[e] = x.ends(e).v;
  }
  for (std::size_t i = 0; i < d.tree.nontree.size(); ++i) {
    const OrientedEdge& oe = d.tree.nontree[i];
    from[oe.edge] = oe.from;
    to[oe.edge] = oe.to;
    shift[oe.edge] = d.monodromy[i];
  }
  std::vector<EdgeImage> em;
  // Horizontal edge (e, a) joins (from, a) to (to, a * shift).
  for (EdgeId e = 0; e < x.num_edges(); ++e) {
    for (Element a = 0; a < n; ++a) {
      y.add_edge(id(from[e], a), id(to[e], g.mul(a, shift[e])));
      em.push_back(ToEdge{e});
    }
  }
  struct Block {
    Vertex z;
    Element unit;
    EdgeId first;
  };
  std::vector<Block> blocks;
  for (Vertex z = 0; z < x.num_vertices(); ++z) {
    for (Element u : d.multisets[z].units()) {
      blocks.push_back({z, u, y.num_edges()});
      for (Element a = 0; a < n; ++a) {
        y.add_edge(id(z, a), id(z, g.mul(a, u)));
        em.push_back(ToVertex{z});
      }
    }
  }
  std::vector<std::vector<Vertex>> vp(n, std::vector<Vertex>(y.num_vertices()));
  std::vector<std::vector<EdgeId>> ep(n, std::vector<EdgeId>(y.num_edges()));
  for (Element h = 0; h < n; ++h) {
    for (Vertex z = 0; z < x.num_vertices(); ++z) {
      for (Element a = 0; a < n; ++a) vp[h][id(z, a)] = id(z, g.mul(h, a));
    }
    for (EdgeId e = 0; e < x.num_edges(); ++e) {
      for (Element a = 0; a < n; ++a) ep[h][e * n + a] = e * n + g.mul(h, a);
    }
    for (const Block& b : blocks) {
      for (Element a = 0; a < n; ++a) ep[h][b.first + a] = b.first + g.mul(h, a);
    }
  }
  std::vector<Vertex> vm(y.num_vertices());
  for (Vertex w = 0; w < y.num_vertices(); ++w) vm[w] = w / n;
  GraphMorphism proj(y, x, std::move(vm), std::move(em));
  return EtaleBuild{GraphAction(g, std::move(y), std::move(vp), std::move(ep)), std::move(proj)};
}

PointedCover synthesize_etale(const CoverDescriptor& d) {
  d.validate();
  Subgroup reached = subgroup_generated(d.group, d.generators());
  if (!reached.is_whole()) {
    throw Error(ErrorCode::kNotGenerating, "monodromy and multisets generate a proper subgroup",
                subgroup_witness(reached));
  }
  EtaleBuild b = build_etale_unchecked(d);
  const int cover_point = d.basepoint() * d.group.order();
  return PointedCover(std::move(b.action), d.base, d.basepoint(), std::move(b.projection), cover_point);
}

// -- Classification --------------------------------------------------------------

CoverDescriptor classify_etale(const PointedCover& c, const SpanningTree& t) {
  if (!is_etale(c)) throw Error(ErrorCode::kNotEtale, "classification needs an étale cover");
  const Graph& x = c.base();
  const Graph& y = c.carrier();
  const GraphAction& a = c.action();
  const FiniteGroup& g = c.group();
  TreeLift lift = tree_lift(c, t);

  std::vector<Element> mono;
  for (const OrientedEdge& oe : t.nontree) {
    const Vertex start = lift.section[oe.from];
    Element found = -1;
    for (EdgeId f : y.incident(start)) {
      if (!(c.projection().edge_image(f) == EdgeImage{ToEdge{oe.edge}})) continue;
      found = translating_element(a, lift.section[oe.to], y.other_end(f, start));
      break;
    }
    if (found < 0) throw Error(ErrorCode::kNoLift, "no lift of a non-tree edge", x.edge_label(oe.edge));
    mono.push_back(found);
  }

  std::vector<SymmetricMultiset> ms;
  for (Vertex z = 0; z < x.num_vertices(); ++z) {
    const Vertex zt = lift.section[z];
    std::vector<int> count(g.order(), 0);
    for (EdgeId f : y.incident(zt)) {
      if (!is_vertical(c.projection().edge_image(f))) continue;
      ++count[translating_element(a, zt, y.other_end(f, zt))];
    }
    SymmetricMultiset s(g);
    for (Element d = 1; d < g.order(); ++d) {
      if (unit_representative(g, d) != d) continue;
      if (g.is_involution(d)) {
        if (count[d] % 2 != 0) throw Error(ErrorCode::kFlipped, "odd number of involution edges", g.name(d));
        for (int k = 0; k < count[d] / 2; ++k) s.add_unit(d);
      } else {
        for (int k = 0; k < count[d]; ++k) s.add_unit(d);
      }
    }
    ms.push_back(std::move(s));
  }
  return CoverDescriptor{x, t, g, std::move(mono), std::move(ms)};
}

// -- Collapse ----------------------------------------------------------------------

PointedCover collapse(const PointedCover& c, const InertiaStructure& inertia, const std::optional<SpanningTree>& t) {
  if (!(inertia.group == c.group())) throw Error(ErrorCode::kGroupMismatch, "inertia structure over a different group");
  const Graph& x = c.base();
  const Graph& y = c.carrier();
  const GraphAction& a = c.action();
  const FiniteGroup& g = c.group();
  if (static_cast<int>(inertia.subgroups.size()) != x.num_vertices()) {
    throw Error(ErrorCode::kInvalidInput, "one inertia subgroup is needed per base vertex");
  }
  for (const Subgroup& s : inertia.subgroups) {
    if (!(s.group() == g)) throw Error(ErrorCode::kGroupMismatch, "inertia subgroup of a different group");
  }
  if (!is_etale(c)) throw Error(ErrorCode::kNotEtale, "collapse needs an étale cover");
  SpanningTree tree = t ? *t : spanning_tree(x, c.basepoint());
  TreeLift lift = tree_lift(c, tree);

  // Vertex w = h * z~ goes to the class of the coset h I_z, keyed by its
  // smallest element.
  std::vector<Element> coset_key(y.num_vertices());
  for (Vertex z = 0; z < x.num_vertices(); ++z) {
    const Subgroup& iz = inertia.subgroups[z];
    for (Element h = 0; h < g.order(); ++h) {
      Element key = g.order();
      for (Element i : iz.elements()) key = std::min(key, g.mul(h, i));
      coset_key[a.act(h, lift.section[z])] = key;
    }
  }
  std::map<std::pair<Vertex, Element>, Vertex> class_id;
  std::vector<Vertex> cls(y.num_vertices());
  Graph q;
  for (Vertex w = 0; w < y.num_vertices(); ++w) {
    auto key = std::make_pair(c.project(w), coset_key[w]);
    auto it = class_id.find(key);
    if (it == class_id.end()) {
      it = class_id.emplace(key, q.add_vertex(y.vertex_label(w))).first;
    }
    cls[w] = it->second;
  }
  std::vector<EdgeId> kept(y.num_edges(), -1);
  std::vector<EdgeImage> em;
  for (EdgeId e = 0; e < y.num_edges(); ++e) {
    const Vertex u = cls[y.ends(e).u];
    const Vertex v = cls[y.ends(e).v];
    if (u == v) continue;
    kept[e] = q.add_edge(u, v, y.edge_label(e));
    em.push_back(c.projection().edge_image(e));
  }
  std::vector<Vertex> vm(q.num_vertices());
  for (Vertex w = 0; w < y.num_vertices(); ++w) vm[cls[w]] = c.project(w);

  std::vector<std::vector<Vertex>> vp(g.order(), std::vector<Vertex>(q.num_vertices()));
  std::vector<std::vector<EdgeId>> ep(g.order(), std::vector<EdgeId>(q.num_edges()));
  for (Element h = 0; h < g.order(); ++h) {
    for (Vertex w = 0; w < y.num_vertices(); ++w) vp[h][cls[w]] = cls[a.act(h, w)];
    for (EdgeId e = 0; e < y.num_edges(); ++e) {
      if (kept[e] >= 0) ep[h][kept[e]] = kept[a.act_edge(h, e)];
    }
  }
  GraphMorphism proj(q, x, std::move(vm), std::move(em));
  const Vertex point = cls[c.cover_point()];
  return PointedCover(GraphAction(g, std::move(q), std::move(vp), std::move(ep)), x, c.basepoint(), std::move(proj),
                      point);
}

// -- Etalization -------------------------------------------------------------------

std::vector<DoubleCosetCount> double_coset_multiset(const PointedCover& c, const TreeLift& lift, Vertex z) {
  const Graph& y = c.carrier();
  const GraphAction& a = c.action();
  const Vertex zt = lift.section.at(z);
  Subgroup iz = a.vertex_stabilizer(zt);
  std::vector<DoubleCoset> blocks = double_cosets(iz);
  std::vector<int> block_of(c.group().order());
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (Element d : blocks[b].elements) block_of[d] = static_cast<int>(b);
  }
  std::vector<int> count(blocks.size(), 0);
  for (EdgeId f : y.incident(zt)) {
    if (!is_vertical(c.projection().edge_image(f))) continue;
    ++count[block_of[translating_element(a, zt, y.other_end(f, zt))]];
  }
  std::vector<DoubleCosetCount> out;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    // I acts freely on the edges at z~, so every orbit has |I| edges.
    if (count[b] % iz.order() != 0) throw Error(ErrorCode::kNotHarmonic, "inertia does not act freely on edges");
    out.push_back({std::move(blocks[b]), count[b] / iz.order()});
  }
  return out;
}

Etalization etalize(const PointedCover& c, const SpanningTree& t) {
  const GraphAction& a = c.action();
  if (!is_harmonic_action(a)) throw Error(ErrorCode::kNotHarmonic, "etalization needs a harmonic action");
  const Graph& x = c.base();
  const Graph& y = c.carrier();
  const FiniteGroup& g = c.group();
  for (EdgeId e = 0; e < y.num_edges(); ++e) {
    if (!a.edge_stabilizer(e).is_trivial()) {
      throw Error(ErrorCode::kFlipped, "flipped edge; pass to the unflipped model first", y.edge_label(e));
    }
  }
  TreeLift lift = tree_lift(c, t);

  std::vector<Subgroup> inertia;
  std::vector<SymmetricMultiset> ms;
  for (Vertex z = 0; z < x.num_vertices(); ++z) {
    Subgroup iz = a.vertex_stabilizer(lift.section[z]);
    std::vector<DoubleCosetCount> sbar = double_coset_multiset(c, lift, z);
    SymmetricMultiset s(g);
    for (std::size_t b = 0; b < sbar.size(); ++b) {
      const DoubleCoset& block = sbar[b].block;
      const int mult = sbar[b].multiplicity;
      if (!block.self_inverse) {
        // Each mutually inverse pair of blocks yields pair units once.
        if (static_cast<int>(b) < block.inverse_block) {
          for (int k = 0; k < mult; ++k) s.add_unit(block.representative);
        }
        continue;
      }
      if (mult % 2 != 0) {
        throw Error(ErrorCode::kFlipped, "self-inverse block with odd multiplicity", g.name(block.representative));
      }
      for (int k = 0; k < mult / 2; ++k) s.add_unit(block.representative);
    }
    for (Element i : iz.elements()) {
      if (i != FiniteGroup::kIdentity && unit_representative(g, i) == i) s.add_unit(i);
    }
    ms.push_back(std::move(s));
    inertia.push_back(std::move(iz));
  }

  // The edge g * xi over a non-tree edge becomes (u, g) -- (v, g * c^-1)
  // where xi_v = c * xi_u.
  std::vector<Element> mono;
  for (const OrientedEdge& oe : t.nontree) {
    auto first_over = [&](Vertex at) {
      for (EdgeId f : y.incident(at)) {
        if (c.projection().edge_image(f) == EdgeImage{ToEdge{oe.edge}}) return f;
      }
      throw Error(ErrorCode::kNoLift, "no edge over a non-tree edge at the lifted vertex", x.edge_label(oe.edge));
    };
    const EdgeId xi_u = first_over(lift.section[oe.from]);
    const EdgeId xi_v = first_over(lift.section[oe.to]);
    Element found = -1;
    for (Element h = 0; h < g.order(); ++h) {
      if (a.act_edge(h, xi_u) == xi_v) {
        found = h;
        break;
      }
    }
    mono.push_back(g.inv(found));
  }
  CoverDescriptor d{x, t, g, std::move(mono), std::move(ms)};
  PointedCover e = synthesize_etale(d);
  return Etalization{std::move(e), std::move(d), InertiaStructure{g, std::move(inertia)}};
}

// -- Fibers and equivalence ---------------------------------------------------------

GraphAction fiber(const PointedCover& c, Vertex z) {
  std::vector<Vertex> verts = c.fiber_vertices(z);
  const Graph& y = c.carrier();
  const GraphAction& a = c.action();
  std::vector<Vertex> local(y.num_vertices(), -1);
  Graph f;
  for (Vertex w : verts) local[w] = f.add_vertex(y.vertex_label(w));
  std::vector<EdgeId> edges;
  std::vector<EdgeId> local_edge(y.num_edges(), -1);
  for (EdgeId e = 0; e < y.num_edges(); ++e) {
    if (c.projection().edge_image(e) == EdgeImage{ToVertex{z}}) {
      local_edge[e] = f.add_edge(local[y.ends(e).u], local[y.ends(e).v], y.edge_label(e));
      edges.push_back(e);
    }
  }
  const FiniteGroup& g = c.group();
  std::vector<std::vector<Vertex>> vp(g.order(), std::vector<Vertex>(verts.size()));
  std::vector<std::vector<EdgeId>> ep(g.order(), std::vector<EdgeId>(edges.size()));
  for (Element h = 0; h < g.order(); ++h) {
    for (Vertex w : verts) vp[h][local[w]] = local[a.act(h, w)];
    for (EdgeId e : edges) ep[h][local_edge[e]] = local_edge[a.act_edge(h, e)];
  }
  return GraphAction(g, std::move(f), std::move(vp), std::move(ep));
}

bool descriptor_equivalent(const CoverDescriptor& a, const CoverDescriptor& b, bool pointed) {
  if (!a.base.same_structure(b.base) || !(a.tree == b.tree)) {
    throw Error(ErrorCode::kBaseMismatch, "descriptors over different bases or trees");
  }
  if (!(a.group == b.group)) throw Error(ErrorCode::kGroupMismatch, "descriptors over different groups");
  if (pointed) return a == b;
  const FiniteGroup& g = a.group;
  for (Element h = 0; h < g.order(); ++h) {
    bool ok = true;
    for (std::size_t i = 0; ok && i < a.monodromy.size(); ++i) ok = g.conj(h, a.monodromy[i]) == b.monodromy[i];
    for (std::size_t z = 0; ok && z < a.multisets.size(); ++z) ok = a.multisets[z].conjugated(h) == b.multisets[z];
    if (ok) return true;
  }
  return false;
}

}  // namespace harmcov
