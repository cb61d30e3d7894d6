#ifndef HARMCOV_TESTS_FIXTURES_HPP_
#define HARMCOV_TESTS_FIXTURES_HPP_

#include <random>
#include <string>
#include <vector>

#include "harmcov/action.hpp"
#include "harmcov/covers.hpp"
#include "harmcov/galois.hpp"

// Hand-built objects and random families shared by the unit tests and the
// acceptance binary. Everything here is constructed directly from vertex and
// edge lists, never through the library's cover constructions, so that it
// can serve as an independent reference.
namespace harmcov::testing {

Graph path_graph(int n);          // 0 - 1 - ... - n-1
Graph cycle_graph(int n);
Graph point();
Graph segment();                  // u - v

FiniteGroup s3();                 // elements e, σ, τ, σ^2, στ, τσ
Element el(const FiniteGroup& g, const std::string& name);

// The Cayley graph of S3 for {σ, σ^-1} and the involution τ written out
// edge by edge: two σ-triangles and three doubled τ-rungs.
GraphAction s3_cayley_by_hand();
// Same shape for Z6 with {α^2, α^-2} and α^3.
GraphAction z6_cayley_by_hand();

// S3 acting on the three cosets of <τ>, with edge g joining g<τ> and
// gσ<τ>; three vertices, six edges.
GraphAction s3_double_triangle();
// Z6 acting on cosets of <α^3> with edge g joining g<α^3> and gα^2<α^3>.
GraphAction z6_double_triangle();

// The Z/2 cover of a segment with four vertical edges over the left vertex
// and two over the right one.
PointedCover z2_segment_cover_with_loops();
// Z/2 cover of a segment with one vertical pair over u only (4 vertices,
// 4 edges).
PointedCover z2_segment_cover();

// Z/2 exchanging the ends of a single edge.
GraphAction z2_flip_edge();

// -- Random families ---------------------------------------------------------

struct NamedGroup {
  std::string name;
  FiniteGroup group;
};

// Groups of order 2, 3, 4, 6, 8, 12 (two or more per order where they exist).
std::vector<NamedGroup> descriptor_groups();
// Every group of order at most 12 used by the action oracle family.
std::vector<NamedGroup> small_groups();

Graph random_connected_graph(std::mt19937& rng, int max_vertices, int max_genus);
// A generating descriptor over a random base; multisets have at most
// `max_multiset` elements.
CoverDescriptor random_descriptor(std::mt19937& rng, const FiniteGroup& g, int max_vertices, int max_genus,
                                  int max_multiset);
InertiaStructure random_inertia(std::mt19937& rng, const FiniteGroup& g, int num_vertices);

struct LabeledAction {
  std::string name;
  GraphAction action;
};

// Faithful actions with |G| <= 12 and at most 12 vertices, assembled from
// transitive G-sets: vertex orbits G/H, edge orbits G/K joining two vertex
// orbits (possibly flipped). Includes the reference objects above and their
// flipped and unflipped variants.
std::vector<LabeledAction> oracle_family(std::uint32_t seed, int random_count);

}  // namespace harmcov::testing

#endif  // HARMCOV_TESTS_FIXTURES_HPP_
