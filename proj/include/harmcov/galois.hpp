#ifndef HARMCOV_GALOIS_HPP_
#define HARMCOV_GALOIS_HPP_

#include <optional>
#include <vector>

#include "harmcov/action.hpp"
#include "harmcov/covers.hpp"

namespace harmcov {

// How the inertia of the dominating cover is chosen from the inertia I of
// the input:
//   kPreimage          rho^-1(I_z) at every vertex
//   kSection           sigma(I_z) for the given section sigma
//   kExplicit          caller-supplied, checked against rho(I'_z) = I_z
//   kTrivialWhereTrivial  trivial where I_z is trivial, rho^-1(I_z) elsewhere
enum class InertiaPolicy { kPreimage, kSection, kExplicit, kTrivialWhereTrivial };

struct EmbeddingProblem {
  PointedCover cover;                       // a G-cover of (X, x)
  GroupHom rho;                             // G' -> G
  std::optional<GroupHom> section;          // G -> G'
  InertiaPolicy policy = InertiaPolicy::kPreimage;
  std::optional<InertiaStructure> inertia;  // for kExplicit, over G'
};

struct EmbeddingSolution {
  PointedCover cover;          // the dominating G'-cover
  CoverDescriptor descriptor;  // its étale descriptor
  InertiaStructure inertia;    // I' used in the collapse
};

// The G-cover obtained by dividing a G'-cover by ker(rho), projected to the
// same base and pointed at the class of the cover point.
PointedCover kernel_quotient_cover(const PointedCover& c, const GroupHom& rho);

// Throws kGroupMismatch, kNotSurjective, kSectionInvalid, kInertiaMismatch,
// and the etalization errors (kFlipped for flipped input).
EmbeddingSolution solve_embedding(const EmbeddingProblem& p);

// A connected harmonic G_b-cover of a point, given as an action with
// quotient a single vertex, plus an embedding G_b -> G.
struct LocalDatum {
  Vertex vertex;
  GraphAction action;
  GroupHom embedding;
  Vertex point;  // y_b in the carrier
};

struct GrunwaldWangProblem {
  Graph base;
  Vertex basepoint = 0;
  FiniteGroup group;
  std::vector<Vertex> branch;          // B
  std::vector<LocalDatum> locals;      // exactly one per vertex of B
  std::vector<Element> gammas;         // one per non-tree edge of the canonical tree
};

struct GrunwaldWangSolution {
  PointedCover cover;
  CoverDescriptor descriptor;
  InertiaStructure inertia;
};

// Throws kWrongGammaCount, kLocalNotPointCover, kNotGenerating.
GrunwaldWangSolution grunwald_wang(const GrunwaldWangProblem& p);

}  // namespace harmcov

#endif  // HARMCOV_GALOIS_HPP_
