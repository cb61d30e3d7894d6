#include "harmcov/galois.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace harmcov {

PointedCover kernel_quotient_cover(const PointedCover& c, const GroupHom& rho) {
  KernelQuotient kq = quotient_by_kernel(c.action(), rho);
  const Graph& y = c.carrier();
  const Graph& q = kq.action.carrier();
  std::vector<Vertex> vm(q.num_vertices());
  for (Vertex w = 0; w < y.num_vertices(); ++w) vm[kq.vertex_class[w]] = c.project(w);
  std::vector<EdgeImage> em(q.num_edges(), ToVertex{0});
  for (EdgeId e = 0; e < y.num_edges(); ++e) {
    if (kq.edge_class[e]) em[*kq.edge_class[e]] = c.projection().edge_image(e);
  }
  GraphMorphism proj(q, c.base(), std::move(vm), std::move(em));
  return PointedCover(kq.action, c.base(), c.basepoint(), std::move(proj), kq.vertex_class[c.cover_point()]);
}

namespace {

void check_section(const GroupHom& rho, const GroupHom& sigma) {
  if (!(sigma.source() == rho.target()) || !(sigma.target() == rho.source())) {
    throw Error(ErrorCode::kSectionInvalid, "section has the wrong source or target");
  }
  for (Element a = 0; a < rho.target().order(); ++a) {
    if (rho(sigma(a)) != a) throw Error(ErrorCode::kSectionInvalid, "rho o sigma is not the identity", rho.target().name(a));
  }
}

InertiaStructure lift_inertia(const EmbeddingProblem& p, const InertiaStructure& base_inertia) {
  const GroupHom& rho = p.rho;
  const FiniteGroup& gp = rho.source();
  std::vector<Subgroup> out;
  switch (p.policy) {
    case InertiaPolicy::kPreimage:
      for (const Subgroup& i : base_inertia.subgroups) out.push_back(rho.preimage(i));
      break;
    case InertiaPolicy::kTrivialWhereTrivial:
      for (const Subgroup& i : base_inertia.subgroups) {
        out.push_back(i.is_trivial() ? Subgroup::trivial(gp) : rho.preimage(i));
      }
      break;
    case InertiaPolicy::kSection:
      if (!p.section) throw Error(ErrorCode::kSectionInvalid, "section policy without a section");
      for (const Subgroup& i : base_inertia.subgroups) out.push_back(p.section->image(i));
      break;
    case InertiaPolicy::kExplicit: {
      if (!p.inertia) throw Error(ErrorCode::kInertiaMismatch, "explicit policy without an inertia structure");
      if (!(p.inertia->group == gp) || p.inertia->subgroups.size() != base_inertia.subgroups.size()) {
        throw Error(ErrorCode::kInertiaMismatch, "explicit inertia has the wrong group or size");
      }
      out = p.inertia->subgroups;
      break;
    }
  }
  for (std::size_t z = 0; z < out.size(); ++z) {
    if (!(rho.image(out[z]) == base_inertia.subgroups[z])) {
      throw Error(ErrorCode::kInertiaMismatch, "rho(I'_z) differs from I_z",
                  p.cover.base().vertex_label(static_cast<Vertex>(z)));
    }
  }
  return InertiaStructure{gp, std::move(out)};
}

}  // namespace

EmbeddingSolution solve_embedding(const EmbeddingProblem& p) {
  const GroupHom& rho = p.rho;
  const PointedCover& f = p.cover;
  if (!(rho.target() == f.group())) throw Error(ErrorCode::kGroupMismatch, "rho does not land in the cover group");
  if (!rho.is_surjective()) throw Error(ErrorCode::kNotSurjective, "rho is not surjective");
  if (p.section) check_section(rho, *p.section);
  const FiniteGroup& gp = rho.source();

  const SpanningTree tree = spanning_tree(f.base(), f.basepoint());
  Etalization et = etalize(f, tree);

  // Unit-wise lift through rho by smallest preimages.
  CoverDescriptor d{et.descriptor.base, tree, gp, {}, {}};
  for (Element g : et.descriptor.monodromy) d.monodromy.push_back(*rho.smallest_preimage(g));
  for (const SymmetricMultiset& s : et.descriptor.multisets) {
    SymmetricMultiset lifted(gp);
    for (Element u : s.units()) lifted.add_unit(*rho.smallest_preimage(u));
    d.multisets.push_back(std::move(lifted));
  }

  // Kernel units repair generation, placed where the input already branches.
  Subgroup reached = subgroup_generated(gp, d.generators());
  if (!reached.is_whole()) {
    std::vector<Vertex> locus = branch_locus(f);
    const Vertex host = locus.empty() ? f.basepoint() : locus.front();
    const Subgroup kernel = rho.kernel();
    for (Element k : kernel.elements()) {
      if (reached.is_whole()) break;
      if (reached.contains(k)) continue;
      d.multisets[host].add_unit(unit_representative(gp, k));
      std::vector<Element> seeds = reached.elements();
      seeds.push_back(k);
      reached = subgroup_generated(gp, seeds);
    }
  }

  InertiaStructure inertia = lift_inertia(p, et.inertia);
  PointedCover etale = synthesize_etale(d);
  PointedCover out = collapse(etale, inertia, tree);

  if (!equivariant_isomorphic(kernel_quotient_cover(out, rho), f, true)) {
    throw std::logic_error("embedding solution does not dominate the input cover");
  }
  return EmbeddingSolution{std::move(out), std::move(d), std::move(inertia)};
}

GrunwaldWangSolution grunwald_wang(const GrunwaldWangProblem& p) {
  const Graph& x = p.base;
  const FiniteGroup& g = p.group;
  if (!x.has_vertex(p.basepoint)) throw Error(ErrorCode::kUnknownVertex, "basepoint not in base");
  const SpanningTree tree = spanning_tree(x, p.basepoint);
  if (p.gammas.size() != tree.nontree.size()) {
    throw Error(ErrorCode::kWrongGammaCount, "need one gamma per independent cycle",
                std::to_string(tree.nontree.size()));
  }
  for (Element gamma : p.gammas) {
    if (!g.valid(gamma)) throw Error(ErrorCode::kInvalidInput, "gamma out of range", std::to_string(gamma));
  }
  std::set<Vertex> branch(p.branch.begin(), p.branch.end());
  if (branch.size() != p.branch.size() || p.locals.size() != branch.size()) {
    throw Error(ErrorCode::kInvalidInput, "need exactly one local datum per branch vertex");
  }

  CoverDescriptor d = trivial_descriptor(x, p.basepoint, g);
  d.monodromy = p.gammas;
  InertiaStructure inertia = InertiaStructure::trivial(g, x.num_vertices());
  std::vector<Element> seeds = p.gammas;

  for (const LocalDatum& ld : p.locals) {
    if (!branch.count(ld.vertex) || !x.has_vertex(ld.vertex)) {
      throw Error(ErrorCode::kInvalidInput, "local datum at a vertex outside B", std::to_string(ld.vertex));
    }
    const std::string where = x.vertex_label(ld.vertex);
    if (!(ld.embedding.source() == ld.action.group()) || !(ld.embedding.target() == g) ||
        !ld.embedding.is_injective()) {
      throw Error(ErrorCode::kInvalidInput, "local embedding is not an injection into G", where);
    }
    if (!is_connected(ld.action.carrier()) || !is_faithful(ld.action) || !is_harmonic_action(ld.action) ||
        !is_unflipped(ld.action) || quotient(ld.action).graph.num_vertices() != 1) {
      throw Error(ErrorCode::kLocalNotPointCover, "local datum is not a connected unflipped harmonic cover of a point",
                  where);
    }
    PointedCover local = PointedCover::from_quotient(ld.action, ld.point);
    Etalization et = etalize(local, spanning_tree(local.base(), 0));
    d.multisets[ld.vertex] = et.descriptor.multisets[0].mapped(ld.embedding);
    inertia.subgroups[ld.vertex] = ld.embedding.image(et.inertia.subgroups[0]);
    const Subgroup local_image = ld.embedding.image();
    seeds.insert(seeds.end(), local_image.elements().begin(), local_image.elements().end());
  }

  Subgroup reached = subgroup_generated(g, seeds);
  if (!reached.is_whole()) {
    std::string w = "{";
    for (std::size_t i = 0; i < reached.elements().size(); ++i) w += (i ? "," : "") + g.name(reached.elements()[i]);
    throw Error(ErrorCode::kNotGenerating, "G(B) and the gammas generate a proper subgroup", w + "}");
  }

  PointedCover out = collapse(synthesize_etale(d), inertia, tree);
  for (const LocalDatum& ld : p.locals) {
    GraphAction induced = induce(g, ld.embedding, ld.action);
    if (!equivariant_isomorphic(fiber(out, ld.vertex), induced)) {
      throw std::logic_error("fiber does not match the induced local cover");
    }
  }
  return GrunwaldWangSolution{std::move(out), std::move(d), std::move(inertia)};
}

}  // namespace harmcov
