#ifndef HARMCOV_COVERS_HPP_
#define HARMCOV_COVERS_HPP_

#include <optional>
#include <vector>

#include "harmcov/action.hpp"
#include "harmcov/graph.hpp"
#include "harmcov/group.hpp"

namespace harmcov {

// Finite classification datum of a pointed étale G-cover: monodromy on the
// oriented non-tree edges of a rooted spanning tree, plus a symmetric
// multiset of group elements at every base vertex. Multisets are stored by
// multiplicity, so equality of descriptors is equality of normal forms.
struct CoverDescriptor {
  Graph base;
  SpanningTree tree;                        // tree.root is the basepoint
  FiniteGroup group;
  std::vector<Element> monodromy;           // parallel to tree.nontree
  std::vector<SymmetricMultiset> multisets; // one per base vertex

  Vertex basepoint() const { return tree.root; }
  // Throws kInvalidInput / kGroupMismatch on inconsistent data.
  void validate() const;
  // All monodromy values and multiset elements.
  std::vector<Element> generators() const;

  bool operator==(const CoverDescriptor& other) const;
};

// A descriptor with empty multisets and trivial monodromy on the canonical
// spanning tree at `basepoint`.
CoverDescriptor trivial_descriptor(const Graph& base, Vertex basepoint, const FiniteGroup& group);

struct InertiaStructure {
  FiniteGroup group;
  std::vector<Subgroup> subgroups;  // one per base vertex

  static InertiaStructure trivial(const FiniteGroup& group, int num_vertices);
  bool operator==(const InertiaStructure&) const = default;
};

struct TreeLift {
  std::vector<Vertex> section;        // base vertex -> lifted vertex
  std::vector<EdgeId> edges;          // base edge -> lifted edge, -1 off the tree
};

// Breadth-first over T from the cover point, taking at each tree edge the
// smallest-identifier preimage at the lifted parent. Throws kNoLift, and
// kInvalidInput when T is not rooted at the basepoint.
TreeLift tree_lift(const PointedCover& c, const SpanningTree& t);

// The carrier V(X) x G with vertex (z, g) numbered z * |G| + g. Horizontal
// edges come first in base edge order, then the Cayley edges of each fiber
// in vertex order. Throws kNotGenerating when the carrier is disconnected.
PointedCover synthesize_etale(const CoverDescriptor& d);

// The same construction without the connectivity check; returns the action
// and projection only, since a disconnected carrier is not a cover.
struct EtaleBuild {
  GraphAction action;
  GraphMorphism projection;
};
EtaleBuild build_etale_unchecked(const CoverDescriptor& d);

// Inverse of synthesize_etale. Throws kNotEtale, kFlipped.
CoverDescriptor classify_etale(const PointedCover& c, const SpanningTree& t);

// Identifies w = g * z~ with g' * z~ whenever g I_z = g' I_z, where z~ comes
// from the tree lift of `t` (default: the canonical spanning tree at the
// basepoint), then deletes loops. Throws kNotEtale, kGroupMismatch, and
// kNotFaithful when everything collapses to one vertex (base ⋆, I = G).
PointedCover collapse(const PointedCover& c, const InertiaStructure& inertia,
                      const std::optional<SpanningTree>& t = std::nullopt);

// The multiset S-bar at z: every double coset I d I of I = Stab(z~), with
// the number of I-orbits of vertical edges at z~ whose far end lies in
// I d I * z~. Blocks follow double_cosets(I).
struct DoubleCosetCount {
  DoubleCoset block;
  int multiplicity;
};
std::vector<DoubleCosetCount> double_coset_multiset(const PointedCover& c, const TreeLift& lift, Vertex z);

struct Etalization {
  PointedCover cover;
  CoverDescriptor descriptor;
  InertiaStructure inertia;
};

// Étale cover E with collapse(E, inertia) equivariantly isomorphic to c.
// Throws kNotHarmonic, kFlipped, kNoLift.
Etalization etalize(const PointedCover& c, const SpanningTree& t);

// Fiber over z with the restricted action; vertices in identifier order.
GraphAction fiber(const PointedCover& c, Vertex z);

// Pointed: equal normal forms. Unpointed: equal after a simultaneous
// conjugation. Throws kBaseMismatch, kGroupMismatch.
bool descriptor_equivalent(const CoverDescriptor& a, const CoverDescriptor& b, bool pointed);

}  // namespace harmcov

#endif  // HARMCOV_COVERS_HPP_
