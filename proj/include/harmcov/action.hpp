#ifndef HARMCOV_ACTION_HPP_
#define HARMCOV_ACTION_HPP_

#include <optional>
#include <vector>

#include "harmcov/graph.hpp"
#include "harmcov/group.hpp"

namespace harmcov {

// A left action of a finite group on a graph by automorphisms, stored as one
// vertex permutation and one edge permutation per group element.
class GraphAction {
 public:
  // Validates that every element acts as an automorphism and that the action
  // law holds. Faithfulness is a separate predicate.
  GraphAction(FiniteGroup group, Graph carrier, std::vector<std::vector<Vertex>> vertex_perms,
              std::vector<std::vector<EdgeId>> edge_perms);

  // Builds the table of every element from generator images.
  static GraphAction from_generators(FiniteGroup group, Graph carrier,
                                     const std::vector<std::pair<Element, std::vector<Vertex>>>& vertex_images,
                                     const std::vector<std::pair<Element, std::vector<EdgeId>>>& edge_images);
  static GraphAction trivial(const Graph& carrier);

  const FiniteGroup& group() const { return group_; }
  const Graph& carrier() const { return carrier_; }
  Vertex act(Element g, Vertex v) const { return vperm_[g][v]; }
  EdgeId act_edge(Element g, EdgeId e) const { return eperm_[g][e]; }
  const std::vector<std::vector<Vertex>>& vertex_perms() const { return vperm_; }
  const std::vector<std::vector<EdgeId>>& edge_perms() const { return eperm_; }

  Subgroup vertex_stabilizer(Vertex v) const;
  Subgroup edge_stabilizer(EdgeId e) const;
  // Orbits listed by smallest member; members sorted.
  std::vector<std::vector<Vertex>> vertex_orbits() const;
  std::vector<std::vector<EdgeId>> edge_orbits() const;
  std::vector<int> vertex_orbit_index() const;
  std::vector<int> edge_orbit_index() const;

  // The action of a subgroup H, reindexed as an action of H.as_group().
  GraphAction restricted(const Subgroup& h) const;

  bool operator==(const GraphAction&) const = default;

 private:
  FiniteGroup group_;
  Graph carrier_;
  std::vector<std::vector<Vertex>> vperm_;
  std::vector<std::vector<EdgeId>> eperm_;
};

bool is_faithful(const GraphAction& a);
// Vertex stabilizers act freely on incident edges. Throws kNotFaithful.
bool is_harmonic_action(const GraphAction& a);
// Quotient morphism by every subgroup is harmonic. Throws kNotFaithful, and
// kSizeLimitExceeded for groups too large to enumerate subgroups.
bool is_harmonic_action_by_definition(const GraphAction& a, int order_limit = 64);
bool is_unflipped(const GraphAction& a);

struct Quotient {
  Graph graph;
  GraphMorphism morphism;
};

// H\Y with merged-endpoint edge orbits removed (they become vertical).
Quotient quotient(const GraphAction& a, const Subgroup& h);
Quotient quotient(const GraphAction& a);

struct UncontractedQuotient {
  LoopGraph graph;
  LoopGraphMorphism morphism;
  std::vector<int> loop_counts;  // per quotient vertex
};

UncontractedQuotient uncontracted_quotient(const GraphAction& a);

// Edges with nontrivial stabilizer. Throws kNotHarmonic.
std::vector<EdgeId> flipped_edges(const GraphAction& a);
// Doubles every flipped edge orbit. The original edges keep their
// identifiers; the copies are appended. Throws kNotHarmonic.
GraphAction unflipped_model(const GraphAction& a);

// Left translation on Cay(G, S): one edge g -- g*d per unit d and per g.
GraphAction cayley_graph(const FiniteGroup& g, const SymmetricMultiset& s);

// Ind_H^G of an action of H, with H embedded in G by `embedding`. Copies are
// indexed by left cosets in the order of left_cosets(image).
GraphAction induce(const FiniteGroup& g, const GroupHom& embedding, const GraphAction& a);
// Ind_H^G where `a` is an action of h.as_group().
GraphAction induce(const Subgroup& h, const GraphAction& a);

// Quotient of an action by the kernel of a surjection, with the induced
// action of the target group.
struct KernelQuotient {
  GraphAction action;
  std::vector<Vertex> vertex_class;                 // carrier vertex -> quotient vertex
  std::vector<std::optional<EdgeId>> edge_class;    // nullopt for deleted loops
};
KernelQuotient quotient_by_kernel(const GraphAction& a, const GroupHom& rho);

// -- Pointed covers ----------------------------------------------------------

// A harmonic G-cover f:(G, Y, y) -> (X, x) with G\Y isomorphic to X.
class PointedCover {
 public:
  // Validates: projection is G-invariant, harmonic, induces G\Y = X; the
  // carrier is connected and the action faithful; f(y) = x.
  PointedCover(GraphAction action, Graph base, Vertex basepoint, GraphMorphism projection, Vertex cover_point);

  // The quotient map Y -> G\Y of a connected harmonic action, pointed at y.
  static PointedCover from_quotient(const GraphAction& action, Vertex cover_point);

  const GraphAction& action() const { return action_; }
  const FiniteGroup& group() const { return action_.group(); }
  const Graph& carrier() const { return action_.carrier(); }
  const Graph& base() const { return base_; }
  Vertex basepoint() const { return basepoint_; }
  Vertex cover_point() const { return cover_point_; }
  const GraphMorphism& projection() const { return projection_; }
  Vertex project(Vertex w) const { return projection_(w); }

  // Carrier vertices over z, in identifier order.
  std::vector<Vertex> fiber_vertices(Vertex z) const;

 private:
  GraphAction action_;
  Graph base_;
  Vertex basepoint_;
  GraphMorphism projection_;
  Vertex cover_point_;
};

Subgroup inertia_group(const PointedCover& c, Vertex w);
Subgroup decomposition_group(const PointedCover& c, Vertex w);
bool is_etale(const PointedCover& c);
bool is_totally_split(const PointedCover& c, Vertex z);
bool is_totally_ramified(const PointedCover& c, Vertex z);
// Base vertices whose decomposition groups are nontrivial.
std::vector<Vertex> branch_locus(const PointedCover& c);

// -- Equivariant isomorphism -------------------------------------------------

struct EquivariantIsomorphism {
  std::vector<Vertex> vertex_map;
  std::vector<EdgeId> edge_map;
};

struct IsomorphismConstraints {
  // Optional colours that the map must preserve; empty means uncoloured.
  std::vector<int> vertex_colors_a, vertex_colors_b;
  std::vector<int> edge_colors_a, edge_colors_b;
  std::optional<std::pair<Vertex, Vertex>> anchor;
};

inline constexpr long kEquivariantSearchBudget = 5'000'000;

// G-equivariant graph isomorphism by orbit-representative backtracking; the
// first witness in lexicographic candidate order is returned. Throws
// kGroupMismatch for different groups and kSizeLimitExceeded when the search
// budget runs out.
std::optional<EquivariantIsomorphism> equivariant_isomorphic(const GraphAction& a, const GraphAction& b,
                                                             const IsomorphismConstraints& constraints = {});
// Isomorphism of covers over the same base commuting with the projections,
// preserving cover points when `pointed`. Throws kBaseMismatch.
std::optional<EquivariantIsomorphism> equivariant_isomorphic(const PointedCover& a, const PointedCover& b,
                                                             bool pointed);

}  // namespace harmcov

#endif  // HARMCOV_ACTION_HPP_
