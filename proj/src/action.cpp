#include "harmcov/action.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

namespace harmcov {

namespace {

bool is_permutation_of_range(const std::vector<int>& p, int n) {
  if (static_cast<int>(p.size()) != n) return false;
  std::vector<char> hit(n, 0);
  for (int x : p) {
    if (x < 0 || x >= n || hit[x]) return false;
    hit[x] = 1;
  }
  return true;
}

bool same_ends(const EdgeEnds& a, Vertex u, Vertex v) {
  return (a.u == u && a.v == v) || (a.u == v && a.v == u);
}

// Orbit index of each point under the permutations of the listed elements.
std::vector<int> orbit_index(const std::vector<std::vector<int>>& perms, const std::vector<Element>& elems, int n) {
  std::vector<int> idx(n, -1);
  int next = 0;
  for (int p = 0; p < n; ++p) {
    if (idx[p] >= 0) continue;
    for (Element g : elems) idx[perms[g][p]] = next;
    ++next;
  }
  return idx;
}

std::vector<std::vector<int>> group_by_index(const std::vector<int>& idx) {
  int count = idx.empty() ? 0 : *std::max_element(idx.begin(), idx.end()) + 1;
  std::vector<std::vector<int>> out(count);
  for (int p = 0; p < static_cast<int>(idx.size()); ++p) out[idx[p]].push_back(p);
  return out;
}

std::vector<Element> all_elements(const FiniteGroup& g) {
  std::vector<Element> e(g.order());
  std::iota(e.begin(), e.end(), 0);
  return e;
}

}  // namespace

GraphAction::GraphAction(FiniteGroup group, Graph carrier, std::vector<std::vector<Vertex>> vertex_perms,
                         std::vector<std::vector<EdgeId>> edge_perms)
    : group_(std::move(group)),
      carrier_(std::move(carrier)),
      vperm_(std::move(vertex_perms)),
      eperm_(std::move(edge_perms)) {
  const int n = group_.order();
  const int nv = carrier_.num_vertices();
  const int ne = carrier_.num_edges();
  if (static_cast<int>(vperm_.size()) != n || static_cast<int>(eperm_.size()) != n) {
    throw Error(ErrorCode::kInvalidInput, "action needs one permutation per group element");
  }
  for (Element g = 0; g < n; ++g) {
    if (!is_permutation_of_range(vperm_[g], nv) || !is_permutation_of_range(eperm_[g], ne)) {
      throw Error(ErrorCode::kInvalidInput, "element does not act by a bijection", group_.name(g));
    }
    for (EdgeId e = 0; e < ne; ++e) {
      const EdgeEnds& ee = carrier_.ends(e);
      if (!same_ends(carrier_.ends(eperm_[g][e]), vperm_[g][ee.u], vperm_[g][ee.v])) {
        throw Error(ErrorCode::kInvalidInput, "element does not preserve incidence",
                    group_.name(g) + " on edge " + carrier_.edge_label(e));
      }
    }
  }
  for (Element g = 0; g < n; ++g) {
    for (Element h = 0; h < n; ++h) {
      const Element gh = group_.mul(g, h);
      for (Vertex v = 0; v < nv; ++v) {
        if (vperm_[gh][v] != vperm_[g][vperm_[h][v]]) {
          throw Error(ErrorCode::kInvalidInput, "action law fails on a vertex", group_.name(g) + "," + group_.name(h));
        }
      }
      for (EdgeId e = 0; e < ne; ++e) {
        if (eperm_[gh][e] != eperm_[g][eperm_[h][e]]) {
          throw Error(ErrorCode::kInvalidInput, "action law fails on an edge", group_.name(g) + "," + group_.name(h));
        }
      }
    }
  }
}

GraphAction GraphAction::from_generators(
    FiniteGroup group, Graph carrier, const std::vector<std::pair<Element, std::vector<Vertex>>>& vertex_images,
    const std::vector<std::pair<Element, std::vector<EdgeId>>>& edge_images) {
  const int n = group.order();
  std::map<Element, std::vector<Vertex>> vgen(vertex_images.begin(), vertex_images.end());
  std::map<Element, std::vector<EdgeId>> egen(edge_images.begin(), edge_images.end());
  std::vector<std::vector<Vertex>> vp(n);
  std::vector<std::vector<EdgeId>> ep(n);
  vp[0].resize(carrier.num_vertices());
  ep[0].resize(carrier.num_edges());
  std::iota(vp[0].begin(), vp[0].end(), 0);
  std::iota(ep[0].begin(), ep[0].end(), 0);
  std::vector<Element> reached{0};
  for (std::size_t k = 0; k < reached.size(); ++k) {
    Element g = reached[k];
    for (const auto& [s, simg] : vgen) {
      Element gs = group.mul(g, s);
      if (!vp[gs].empty() || gs == 0) continue;
      const auto& simg_e = egen.at(s);
      vp[gs].resize(simg.size());
      ep[gs].resize(simg_e.size());
      for (std::size_t v = 0; v < simg.size(); ++v) vp[gs][v] = vp[g].at(simg[v]);
      for (std::size_t e = 0; e < simg_e.size(); ++e) ep[gs][e] = ep[g].at(simg_e[e]);
      reached.push_back(gs);
    }
  }
  if (static_cast<int>(reached.size()) != n) {
    throw Error(ErrorCode::kInvalidInput, "generator images do not generate the group");
  }
  return GraphAction(std::move(group), std::move(carrier), std::move(vp), std::move(ep));
}

GraphAction GraphAction::trivial(const Graph& carrier) {
  std::vector<Vertex> v(carrier.num_vertices());
  std::vector<EdgeId> e(carrier.num_edges());
  std::iota(v.begin(), v.end(), 0);
  std::iota(e.begin(), e.end(), 0);
  return GraphAction(FiniteGroup(), carrier, {v}, {e});
}

Subgroup GraphAction::vertex_stabilizer(Vertex v) const {
  if (!carrier_.has_vertex(v)) throw Error(ErrorCode::kUnknownVertex, "vertex not in carrier", std::to_string(v));
  std::vector<Element> s;
  for (Element g = 0; g < group_.order(); ++g) {
    if (vperm_[g][v] == v) s.push_back(g);
  }
  return Subgroup(group_, s);
}

Subgroup GraphAction::edge_stabilizer(EdgeId e) const {
  std::vector<Element> s;
  for (Element g = 0; g < group_.order(); ++g) {
    if (eperm_[g].at(e) == e) s.push_back(g);
  }
  return Subgroup(group_, s);
}

std::vector<int> GraphAction::vertex_orbit_index() const {
  return orbit_index(vperm_, all_elements(group_), carrier_.num_vertices());
}
std::vector<int> GraphAction::edge_orbit_index() const {
  return orbit_index(eperm_, all_elements(group_), carrier_.num_edges());
}
std::vector<std::vector<Vertex>> GraphAction::vertex_orbits() const { return group_by_index(vertex_orbit_index()); }
std::vector<std::vector<EdgeId>> GraphAction::edge_orbits() const { return group_by_index(edge_orbit_index()); }

GraphAction GraphAction::restricted(const Subgroup& h) const {
  if (!(h.group() == group_)) throw Error(ErrorCode::kGroupMismatch, "subgroup of a different group");
  auto [hg, inclusion] = h.as_group();
  std::vector<std::vector<Vertex>> vp;
  std::vector<std::vector<EdgeId>> ep;
  for (Element a : h.elements()) {
    vp.push_back(vperm_[a]);
    ep.push_back(eperm_[a]);
  }
  return GraphAction(hg, carrier_, std::move(vp), std::move(ep));
}

// -- Predicates --------------------------------------------------------------

bool is_faithful(const GraphAction& a) {
  const Graph& y = a.carrier();
  const FiniteGroup& g = a.group();
  std::vector<int> comp = component_index(y);
  for (const std::vector<Vertex>& block : connected_components(y)) {
    const Vertex v0 = block.front();
    std::vector<EdgeId> edges;
    for (EdgeId e = 0; e < y.num_edges(); ++e) {
      if (comp[y.ends(e).u] == comp[v0]) edges.push_back(e);
    }
    for (Element x = 1; x < g.order(); ++x) {
      if (comp[a.act(x, v0)] != comp[v0]) continue;
      bool trivial_here = std::all_of(block.begin(), block.end(), [&](Vertex v) { return a.act(x, v) == v; }) &&
                          std::all_of(edges.begin(), edges.end(), [&](EdgeId e) { return a.act_edge(x, e) == e; });
      if (trivial_here) return false;
    }
  }
  return true;
}

bool is_harmonic_action(const GraphAction& a) {
  if (!is_faithful(a)) throw Error(ErrorCode::kNotFaithful, "harmonicity is defined for faithful actions");
  const Graph& y = a.carrier();
  for (Vertex v = 0; v < y.num_vertices(); ++v) {
    for (Element x = 1; x < a.group().order(); ++x) {
      if (a.act(x, v) != v) continue;
      for (EdgeId e : y.incident(v)) {
        if (a.act_edge(x, e) == e) return false;
      }
    }
  }
  return true;
}

bool is_harmonic_action_by_definition(const GraphAction& a, int order_limit) {
  if (!is_faithful(a)) throw Error(ErrorCode::kNotFaithful, "harmonicity is defined for faithful actions");
  for (const Subgroup& h : all_subgroups(a.group(), order_limit)) {
    if (!is_harmonic(quotient(a, h).morphism)) return false;
  }
  return true;
}

bool is_unflipped(const GraphAction& a) {
  for (EdgeId e = 0; e < a.carrier().num_edges(); ++e) {
    for (Element x = 1; x < a.group().order(); ++x) {
      if (a.act_edge(x, e) == e) return false;
    }
  }
  return true;
}

// -- Quotients ---------------------------------------------------------------

Quotient quotient(const GraphAction& a, const Subgroup& h) {
  if (!(h.group() == a.group())) throw Error(ErrorCode::kGroupMismatch, "subgroup of a different group");
  const Graph& y = a.carrier();
  std::vector<int> vidx = orbit_index(a.vertex_perms(), h.elements(), y.num_vertices());
  std::vector<int> eidx = orbit_index(a.edge_perms(), h.elements(), y.num_edges());
  auto vorbits = group_by_index(vidx);
  auto eorbits = group_by_index(eidx);
  Graph q;
  for (const auto& orb : vorbits) q.add_vertex(y.vertex_label(orb.front()));
  std::vector<int> kept(eorbits.size(), -1);
  for (std::size_t k = 0; k < eorbits.size(); ++k) {
    const EdgeEnds& ee = y.ends(eorbits[k].front());
    if (vidx[ee.u] != vidx[ee.v]) kept[k] = q.add_edge(vidx[ee.u], vidx[ee.v], y.edge_label(eorbits[k].front()));
  }
  std::vector<EdgeImage> em;
  for (EdgeId e = 0; e < y.num_edges(); ++e) {
    if (kept[eidx[e]] >= 0) em.push_back(ToEdge{kept[eidx[e]]});
    else em.push_back(ToVertex{vidx[y.ends(e).u]});
  }
  GraphMorphism phi(y, q, vidx, std::move(em));
  return {q, std::move(phi)};
}

Quotient quotient(const GraphAction& a) { return quotient(a, Subgroup::whole(a.group())); }

UncontractedQuotient uncontracted_quotient(const GraphAction& a) {
  const Graph& y = a.carrier();
  std::vector<int> vidx = a.vertex_orbit_index();
  std::vector<int> eidx = a.edge_orbit_index();
  auto vorbits = group_by_index(vidx);
  auto eorbits = group_by_index(eidx);
  LoopGraph q;
  for (const auto& orb : vorbits) q.add_vertex(y.vertex_label(orb.front()));
  std::vector<int> loops(vorbits.size(), 0);
  for (const auto& orb : eorbits) {
    const EdgeEnds& ee = y.ends(orb.front());
    q.add_edge(vidx[ee.u], vidx[ee.v], y.edge_label(orb.front()));
    if (vidx[ee.u] == vidx[ee.v]) ++loops[vidx[ee.u]];
  }
  std::vector<EdgeImage> em;
  for (EdgeId e = 0; e < y.num_edges(); ++e) em.push_back(ToEdge{eidx[e]});
  LoopGraphMorphism phi(to_loop_graph(y), q, vidx, std::move(em));
  return {q, std::move(phi), std::move(loops)};
}

// -- Flips -------------------------------------------------------------------

std::vector<EdgeId> flipped_edges(const GraphAction& a) {
  if (!is_harmonic_action(a)) throw Error(ErrorCode::kNotHarmonic, "flips are defined for harmonic actions");
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < a.carrier().num_edges(); ++e) {
    if (!a.edge_stabilizer(e).is_trivial()) out.push_back(e);
  }
  return out;
}

GraphAction unflipped_model(const GraphAction& a) {
  std::vector<EdgeId> flipped = flipped_edges(a);
  const FiniteGroup& g = a.group();
  const int n = g.order();
  Graph y = a.carrier();
  const int old_edges = y.num_edges();
  // Edge permutations are rebuilt from scratch: edge_of[orbit][x] is the
  // edge x * e0 for the orbit's base edge e0.
  std::vector<std::vector<EdgeId>> ep(n, std::vector<EdgeId>(old_edges));
  for (Element x = 0; x < n; ++x) ep[x] = a.edge_perms()[x];
  std::vector<char> handled(old_edges, 0);
  struct Doubled {
    std::vector<EdgeId> edge_of;
  };
  std::vector<Doubled> doubled;
  for (EdgeId e0 : flipped) {
    if (handled[e0]) continue;
    Subgroup stab = a.edge_stabilizer(e0);
    const Element tau = stab.elements().back();
    const EdgeEnds ends0 = a.carrier().ends(e0);
    Doubled d;
    d.edge_of.assign(n, -1);
    // Cosets {x, x*tau}: the smaller element keeps the original edge x*e0.
    for (Element x = 0; x < n; ++x) {
      const Element partner = g.mul(x, tau);
      if (x < partner) {
        d.edge_of[x] = a.act_edge(x, e0);
        handled[d.edge_of[x]] = 1;
      }
    }
    for (Element x = 0; x < n; ++x) {
      if (d.edge_of[x] >= 0) continue;
      d.edge_of[x] = y.add_edge(a.act(x, ends0.u), a.act(x, ends0.v));
    }
    doubled.push_back(std::move(d));
  }
  for (Element x = 0; x < n; ++x) ep[x].resize(y.num_edges());
  for (const Doubled& d : doubled) {
    for (Element x = 0; x < n; ++x) {
      for (Element z = 0; z < n; ++z) ep[x][d.edge_of[z]] = d.edge_of[g.mul(x, z)];
    }
  }
  return GraphAction(g, std::move(y), a.vertex_perms(), std::move(ep));
}

// -- Constructions -----------------------------------------------------------

GraphAction cayley_graph(const FiniteGroup& g, const SymmetricMultiset& s) {
  if (!(s.group() == g)) throw Error(ErrorCode::kGroupMismatch, "multiset over a different group");
  const int n = g.order();
  Graph y;
  for (Element x = 0; x < n; ++x) y.add_vertex(g.name(x));
  std::vector<Element> units = s.units();
  for (Element d : units) {
    for (Element x = 0; x < n; ++x) y.add_edge(x, g.mul(x, d));
  }
  std::vector<std::vector<Vertex>> vp(n, std::vector<Vertex>(n));
  std::vector<std::vector<EdgeId>> ep(n, std::vector<EdgeId>(y.num_edges()));
  for (Element h = 0; h < n; ++h) {
    for (Element x = 0; x < n; ++x) vp[h][x] = g.mul(h, x);
    for (std::size_t u = 0; u < units.size(); ++u) {
      for (Element x = 0; x < n; ++x) ep[h][u * n + x] = static_cast<EdgeId>(u * n + g.mul(h, x));
    }
  }
  return GraphAction(g, std::move(y), std::move(vp), std::move(ep));
}

GraphAction induce(const FiniteGroup& g, const GroupHom& embedding, const GraphAction& a) {
  if (!(embedding.source() == a.group()) || !(embedding.target() == g)) {
    throw Error(ErrorCode::kGroupMismatch, "embedding does not match the groups");
  }
  if (!embedding.is_injective()) throw Error(ErrorCode::kInvalidInput, "induction needs an injective embedding");
  Subgroup h = embedding.image();
  std::vector<Element> local(g.order(), -1);
  for (Element x = 0; x < a.group().order(); ++x) local[embedding(x)] = x;
  auto cosets = left_cosets(h);
  std::vector<int> coset_of(g.order());
  for (std::size_t i = 0; i < cosets.size(); ++i) {
    for (Element x : cosets[i]) coset_of[x] = static_cast<int>(i);
  }
  const Graph& c = a.carrier();
  const int nv = c.num_vertices();
  const int ne = c.num_edges();
  const int k = static_cast<int>(cosets.size());
  Graph y;
  for (int i = 0; i < k; ++i) {
    for (Vertex v = 0; v < nv; ++v) y.add_vertex(g.name(cosets[i].front()) + "." + c.vertex_label(v));
  }
  for (int i = 0; i < k; ++i) {
    for (EdgeId e = 0; e < ne; ++e) y.add_edge(i * nv + c.ends(e).u, i * nv + c.ends(e).v);
  }
  std::vector<std::vector<Vertex>> vp(g.order(), std::vector<Vertex>(k * nv));
  std::vector<std::vector<EdgeId>> ep(g.order(), std::vector<EdgeId>(k * ne));
  for (Element x = 0; x < g.order(); ++x) {
    for (int i = 0; i < k; ++i) {
      const Element xr = g.mul(x, cosets[i].front());
      const int j = coset_of[xr];
      const Element hh = local[g.mul(g.inv(cosets[j].front()), xr)];
      for (Vertex v = 0; v < nv; ++v) vp[x][i * nv + v] = j * nv + a.act(hh, v);
      for (EdgeId e = 0; e < ne; ++e) ep[x][i * ne + e] = j * ne + a.act_edge(hh, e);
    }
  }
  return GraphAction(g, std::move(y), std::move(vp), std::move(ep));
}

GraphAction induce(const Subgroup& h, const GraphAction& a) {
  auto [hg, inclusion] = h.as_group();
  if (!(hg == a.group())) throw Error(ErrorCode::kGroupMismatch, "action is not an action of the subgroup");
  // Rebind to the action's own group object so names survive.
  GroupHom emb(a.group(), h.group(), inclusion.images());
  return induce(h.group(), emb, a);
}

KernelQuotient quotient_by_kernel(const GraphAction& a, const GroupHom& rho) {
  if (!(rho.source() == a.group())) throw Error(ErrorCode::kGroupMismatch, "homomorphism source differs from action group");
  if (!rho.is_surjective()) throw Error(ErrorCode::kNotSurjective, "kernel quotient needs a surjection");
  Subgroup k = rho.kernel();
  const Graph& y = a.carrier();
  std::vector<int> vidx = orbit_index(a.vertex_perms(), k.elements(), y.num_vertices());
  std::vector<int> eidx = orbit_index(a.edge_perms(), k.elements(), y.num_edges());
  auto vorbits = group_by_index(vidx);
  auto eorbits = group_by_index(eidx);
  Graph q;
  for (const auto& orb : vorbits) q.add_vertex(y.vertex_label(orb.front()));
  std::vector<int> kept(eorbits.size(), -1);
  for (std::size_t i = 0; i < eorbits.size(); ++i) {
    const EdgeEnds& ee = y.ends(eorbits[i].front());
    if (vidx[ee.u] != vidx[ee.v]) kept[i] = q.add_edge(vidx[ee.u], vidx[ee.v]);
  }
  const FiniteGroup& target = rho.target();
  std::vector<std::vector<Vertex>> vp(target.order(), std::vector<Vertex>(q.num_vertices()));
  std::vector<std::vector<EdgeId>> ep(target.order(), std::vector<EdgeId>(q.num_edges()));
  for (Element t = 0; t < target.order(); ++t) {
    const Element lift = *rho.smallest_preimage(t);
    for (std::size_t i = 0; i < vorbits.size(); ++i) vp[t][i] = vidx[a.act(lift, vorbits[i].front())];
    for (std::size_t i = 0; i < eorbits.size(); ++i) {
      if (kept[i] < 0) continue;
      const int image = eidx[a.act_edge(lift, eorbits[i].front())];
      ep[t][kept[i]] = kept[image];
    }
  }
  KernelQuotient out{GraphAction(target, q, std::move(vp), std::move(ep)), vidx, {}};
  for (EdgeId e = 0; e < y.num_edges(); ++e) {
    if (kept[eidx[e]] >= 0) out.edge_class.push_back(kept[eidx[e]]);
    else out.edge_class.push_back(std::nullopt);
  }
  return out;
}

// -- Pointed covers ----------------------------------------------------------

PointedCover::PointedCover(GraphAction action, Graph base, Vertex basepoint, GraphMorphism projection,
                           Vertex cover_point)
    : action_(std::move(action)),
      base_(std::move(base)),
      basepoint_(basepoint),
      projection_(std::move(projection)),
      cover_point_(cover_point) {
  const Graph& y = action_.carrier();
  if (!projection_.source().same_structure(y) || !projection_.target().same_structure(base_)) {
    throw Error(ErrorCode::kInvalidInput, "projection does not map the carrier to the base");
  }
  if (!base_.has_vertex(basepoint_)) throw Error(ErrorCode::kUnknownVertex, "basepoint not in base");
  if (!y.has_vertex(cover_point_)) throw Error(ErrorCode::kUnknownVertex, "cover point not in carrier");
  if (projection_(cover_point_) != basepoint_) {
    throw Error(ErrorCode::kInvalidInput, "cover point does not lie over the basepoint");
  }
  if (!is_connected(y)) throw Error(ErrorCode::kDisconnectedGraph, "cover carrier must be connected");
  if (!is_connected(base_)) throw Error(ErrorCode::kDisconnectedGraph, "base must be connected");
  if (!is_faithful(action_)) throw Error(ErrorCode::kNotFaithful, "cover action is not faithful");
  const FiniteGroup& g = action_.group();
  for (Element x = 0; x < g.order(); ++x) {
    for (Vertex v = 0; v < y.num_vertices(); ++v) {
      if (projection_(action_.act(x, v)) != projection_(v)) {
        throw Error(ErrorCode::kInvalidInput, "projection is not G-invariant", y.vertex_label(v));
      }
    }
    for (EdgeId e = 0; e < y.num_edges(); ++e) {
      if (!(projection_.edge_image(action_.act_edge(x, e)) == projection_.edge_image(e))) {
        throw Error(ErrorCode::kInvalidInput, "projection is not G-invariant", y.edge_label(e));
      }
    }
  }
  // G\Y -> X must be bijective on vertices and on edges.
  std::vector<int> vorb = action_.vertex_orbit_index();
  std::vector<int> orbit_over(base_.num_vertices(), -1);
  for (Vertex v = 0; v < y.num_vertices(); ++v) {
    int& slot = orbit_over[projection_(v)];
    if (slot >= 0 && slot != vorb[v]) {
      throw Error(ErrorCode::kInvalidInput, "fiber is not a single orbit", base_.vertex_label(projection_(v)));
    }
    slot = vorb[v];
  }
  for (Vertex z = 0; z < base_.num_vertices(); ++z) {
    if (orbit_over[z] < 0) throw Error(ErrorCode::kInvalidInput, "projection misses a base vertex", base_.vertex_label(z));
  }
  std::vector<int> eorb = action_.edge_orbit_index();
  std::vector<int> edge_orbit_over(base_.num_edges(), -1);
  for (EdgeId e = 0; e < y.num_edges(); ++e) {
    const auto* t = std::get_if<ToEdge>(&projection_.edge_image(e));
    if (!t) continue;
    int& slot = edge_orbit_over[t->edge];
    if (slot >= 0 && slot != eorb[e]) {
      throw Error(ErrorCode::kInvalidInput, "edges over a base edge form several orbits", base_.edge_label(t->edge));
    }
    slot = eorb[e];
  }
  for (EdgeId e = 0; e < base_.num_edges(); ++e) {
    if (edge_orbit_over[e] < 0) throw Error(ErrorCode::kInvalidInput, "projection misses a base edge", base_.edge_label(e));
  }
  if (!is_harmonic(projection_)) throw Error(ErrorCode::kNotHarmonic, "projection is not harmonic");
}

PointedCover PointedCover::from_quotient(const GraphAction& action, Vertex cover_point) {
  Quotient q = quotient(action);
  Vertex x = q.morphism(cover_point);
  return PointedCover(action, q.graph, x, q.morphism, cover_point);
}

std::vector<Vertex> PointedCover::fiber_vertices(Vertex z) const {
  if (!base_.has_vertex(z)) throw Error(ErrorCode::kUnknownVertex, "vertex not in base", std::to_string(z));
  std::vector<Vertex> out;
  for (Vertex w = 0; w < carrier().num_vertices(); ++w) {
    if (project(w) == z) out.push_back(w);
  }
  return out;
}

Subgroup inertia_group(const PointedCover& c, Vertex w) { return c.action().vertex_stabilizer(w); }

Subgroup decomposition_group(const PointedCover& c, Vertex w) {
  const Graph& y = c.carrier();
  if (!y.has_vertex(w)) throw Error(ErrorCode::kUnknownVertex, "vertex not in carrier", std::to_string(w));
  std::vector<char> in_comp(y.num_vertices(), 0);
  std::vector<Vertex> stack{w};
  in_comp[w] = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (EdgeId e : y.incident(v)) {
      if (!is_vertical(c.projection().edge_image(e))) continue;
      Vertex u = y.other_end(e, v);
      if (!in_comp[u]) {
        in_comp[u] = 1;
        stack.push_back(u);
      }
    }
  }
  std::vector<Element> s;
  for (Element x = 0; x < c.group().order(); ++x) {
    if (in_comp[c.action().act(x, w)]) s.push_back(x);
  }
  return Subgroup(c.group(), s);
}

bool is_etale(const PointedCover& c) {
  for (Vertex w = 0; w < c.carrier().num_vertices(); ++w) {
    if (!inertia_group(c, w).is_trivial()) return false;
  }
  return true;
}

bool is_totally_split(const PointedCover& c, Vertex z) {
  for (Vertex w : c.fiber_vertices(z)) {
    if (!decomposition_group(c, w).is_trivial()) return false;
  }
  return true;
}

bool is_totally_ramified(const PointedCover& c, Vertex z) {
  for (Vertex w : c.fiber_vertices(z)) {
    if (!inertia_group(c, w).is_whole()) return false;
  }
  return true;
}

std::vector<Vertex> branch_locus(const PointedCover& c) {
  std::vector<Vertex> out;
  for (Vertex z = 0; z < c.base().num_vertices(); ++z) {
    if (!is_totally_split(c, z)) out.push_back(z);
  }
  return out;
}

// -- Equivariant isomorphism -------------------------------------------------

namespace {

class EquivariantSearch {
 public:
  EquivariantSearch(const GraphAction& a, const GraphAction& b, const IsomorphismConstraints& c)
      : a_(a), b_(b), c_(c), n_(a.group().order()) {
    vcol_a_ = colors_or_zero(c.vertex_colors_a, a.carrier().num_vertices());
    vcol_b_ = colors_or_zero(c.vertex_colors_b, b.carrier().num_vertices());
    ecol_a_ = colors_or_zero(c.edge_colors_a, a.carrier().num_edges());
    ecol_b_ = colors_or_zero(c.edge_colors_b, b.carrier().num_edges());
    mult_a_ = multiplicities(a.carrier(), ecol_a_);
    mult_b_ = multiplicities(b.carrier(), ecol_b_);
    for (Vertex v = 0; v < a.carrier().num_vertices(); ++v) vstab_a_.push_back(a.vertex_stabilizer(v).elements());
    for (Vertex v = 0; v < b.carrier().num_vertices(); ++v) vstab_b_.push_back(b.vertex_stabilizer(v).elements());
    for (EdgeId e = 0; e < a.carrier().num_edges(); ++e) estab_a_.push_back(a.edge_stabilizer(e).elements());
    for (EdgeId e = 0; e < b.carrier().num_edges(); ++e) estab_b_.push_back(b.edge_stabilizer(e).elements());
  }

  std::optional<EquivariantIsomorphism> run() {
    const Graph& ya = a_.carrier();
    const Graph& yb = b_.carrier();
    if (ya.num_vertices() != yb.num_vertices() || ya.num_edges() != yb.num_edges()) return std::nullopt;
    order_representatives();
    vmap_.assign(ya.num_vertices(), -1);
    vinv_.assign(yb.num_vertices(), -1);
    emap_.assign(ya.num_edges(), -1);
    eused_.assign(yb.num_edges(), 0);
    auto eorbits = a_.edge_orbits();
    for (const auto& orb : eorbits) edge_reps_.push_back(orb.front());
    if (!assign_vertices(0)) return std::nullopt;
    return EquivariantIsomorphism{vmap_, emap_};
  }

 private:
  using Key = std::pair<Vertex, int>;

  static std::vector<int> colors_or_zero(const std::vector<int>& given, int n) {
    if (given.empty()) return std::vector<int>(n, 0);
    if (static_cast<int>(given.size()) != n) throw Error(ErrorCode::kInvalidInput, "colour vector has wrong size");
    return given;
  }

  static std::vector<std::map<Key, int>> multiplicities(const Graph& g, const std::vector<int>& ecol) {
    std::vector<std::map<Key, int>> m(g.num_vertices());
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      ++m[g.ends(e).u][{g.ends(e).v, ecol[e]}];
      ++m[g.ends(e).v][{g.ends(e).u, ecol[e]}];
    }
    return m;
  }

  void tick() {
    if (++steps_ > kEquivariantSearchBudget) {
      throw Error(ErrorCode::kSizeLimitExceeded, "equivariant isomorphism search budget exhausted");
    }
  }

  // Breadth-first over the carrier, starting at the anchor if any; the first
  // vertex met in each orbit becomes that orbit's representative.
  void order_representatives() {
    const Graph& y = a_.carrier();
    std::vector<int> orbit = a_.vertex_orbit_index();
    std::vector<char> seen(y.num_vertices(), 0), orbit_done(y.num_vertices(), 0);
    std::vector<Vertex> starts;
    if (c_.anchor) starts.push_back(c_.anchor->first);
    for (Vertex v = 0; v < y.num_vertices(); ++v) starts.push_back(v);
    for (Vertex s : starts) {
      if (seen[s]) continue;
      std::queue<Vertex> q;
      q.push(s);
      seen[s] = 1;
      while (!q.empty()) {
        Vertex v = q.front();
        q.pop();
        if (!orbit_done[orbit[v]]) {
          orbit_done[orbit[v]] = 1;
          reps_.push_back(v);
        }
        for (EdgeId e : y.incident(v)) {
          Vertex w = y.other_end(e, v);
          if (!seen[w]) {
            seen[w] = 1;
            q.push(w);
          }
        }
      }
    }
  }

  bool adjacency_consistent(Vertex va) const {
    const Vertex vb = vmap_[va];
    for (const auto& [key, count] : mult_a_[va]) {
      if (vmap_[key.first] < 0) continue;
      auto it = mult_b_[vb].find({vmap_[key.first], key.second});
      if (it == mult_b_[vb].end() || it->second != count) return false;
    }
    for (const auto& [key, count] : mult_b_[vb]) {
      if (vinv_[key.first] < 0) continue;
      auto it = mult_a_[va].find({vinv_[key.first], key.second});
      if (it == mult_a_[va].end() || it->second != count) return false;
    }
    return true;
  }

  bool assign_vertices(std::size_t depth) {
    if (depth == reps_.size()) return assign_edges(0);
    const Vertex v = reps_[depth];
    const Graph& ya = a_.carrier();
    const Graph& yb = b_.carrier();
    for (Vertex w = 0; w < yb.num_vertices(); ++w) {
      tick();
      if (c_.anchor && v == c_.anchor->first && w != c_.anchor->second) continue;
      if (vinv_[w] >= 0 || vcol_a_[v] != vcol_b_[w] || ya.degree(v) != yb.degree(w)) continue;
      if (vstab_a_[v] != vstab_b_[w]) continue;
      std::vector<Vertex> placed;
      bool ok = true;
      for (Element x = 0; x < n_ && ok; ++x) {
        const Vertex av = a_.act(x, v);
        const Vertex bw = b_.act(x, w);
        if (vmap_[av] >= 0) continue;
        if (vinv_[bw] >= 0) {
          ok = false;
          break;
        }
        vmap_[av] = bw;
        vinv_[bw] = av;
        placed.push_back(av);
      }
      for (std::size_t i = 0; ok && i < placed.size(); ++i) ok = adjacency_consistent(placed[i]);
      if (ok && assign_vertices(depth + 1)) return true;
      for (Vertex av : placed) {
        vinv_[vmap_[av]] = -1;
        vmap_[av] = -1;
      }
    }
    return false;
  }

  bool assign_edges(std::size_t depth) {
    if (depth == edge_reps_.size()) return true;
    const EdgeId e = edge_reps_[depth];
    const Graph& ya = a_.carrier();
    const Graph& yb = b_.carrier();
    const Vertex fu = vmap_[ya.ends(e).u];
    const Vertex fv = vmap_[ya.ends(e).v];
    for (EdgeId f : yb.incident(fu)) {
      tick();
      if (eused_[f] || ecol_b_[f] != ecol_a_[e] || yb.other_end(f, fu) != fv) continue;
      if (estab_a_[e] != estab_b_[f]) continue;
      std::vector<EdgeId> placed;
      bool ok = true;
      for (Element x = 0; x < n_; ++x) {
        const EdgeId ae = a_.act_edge(x, e);
        const EdgeId bf = b_.act_edge(x, f);
        if (emap_[ae] >= 0) continue;
        if (eused_[bf]) {
          ok = false;
          break;
        }
        emap_[ae] = bf;
        eused_[bf] = 1;
        placed.push_back(ae);
      }
      if (ok && assign_edges(depth + 1)) return true;
      for (EdgeId ae : placed) {
        eused_[emap_[ae]] = 0;
        emap_[ae] = -1;
      }
    }
    return false;
  }

  const GraphAction& a_;
  const GraphAction& b_;
  const IsomorphismConstraints& c_;
  const int n_;
  std::vector<int> vcol_a_, vcol_b_, ecol_a_, ecol_b_;
  std::vector<std::map<Key, int>> mult_a_, mult_b_;
  std::vector<std::vector<Element>> vstab_a_, vstab_b_, estab_a_, estab_b_;
  std::vector<Vertex> reps_;
  std::vector<EdgeId> edge_reps_;
  std::vector<Vertex> vmap_, vinv_;
  std::vector<EdgeId> emap_;
  std::vector<char> eused_;
  long steps_ = 0;
};

std::vector<int> projection_edge_colors(const PointedCover& c) {
  std::vector<int> col;
  const int ne = c.base().num_edges();
  for (const EdgeImage& im : c.projection().edge_map()) {
    if (const auto* t = std::get_if<ToEdge>(&im)) col.push_back(t->edge);
    else col.push_back(ne + std::get<ToVertex>(im).vertex);
  }
  return col;
}

}  // namespace

std::optional<EquivariantIsomorphism> equivariant_isomorphic(const GraphAction& a, const GraphAction& b,
                                                             const IsomorphismConstraints& constraints) {
  if (!(a.group() == b.group())) throw Error(ErrorCode::kGroupMismatch, "actions of different groups are incomparable");
  return EquivariantSearch(a, b, constraints).run();
}

std::optional<EquivariantIsomorphism> equivariant_isomorphic(const PointedCover& a, const PointedCover& b,
                                                             bool pointed) {
  if (!(a.group() == b.group())) throw Error(ErrorCode::kGroupMismatch, "covers by different groups are incomparable");
  if (!a.base().same_structure(b.base())) throw Error(ErrorCode::kBaseMismatch, "covers of different bases");
  IsomorphismConstraints c;
  c.vertex_colors_a = a.projection().vertex_map();
  c.vertex_colors_b = b.projection().vertex_map();
  c.edge_colors_a = projection_edge_colors(a);
  c.edge_colors_b = projection_edge_colors(b);
  if (pointed) c.anchor = std::make_pair(a.cover_point(), b.cover_point());
  return EquivariantSearch(a.action(), b.action(), c).run();
}

}  // namespace harmcov
