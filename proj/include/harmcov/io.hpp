#ifndef HARMCOV_IO_HPP_
#define HARMCOV_IO_HPP_

#include <string>

#include "json.hpp"

#include "harmcov/action.hpp"
#include "harmcov/covers.hpp"
#include "harmcov/galois.hpp"

// JSON serialization. Vertex and edge identifiers are the graph labels;
// an identifier made only of digits is written as a JSON number. Output
// uses insertion-ordered objects so equal inputs give byte-identical text.
// Every parse failure is reported as Error(kInvalidInput).
namespace harmcov::io {

using Json = nlohmann::ordered_json;

Json to_json(const Graph& g);
Json to_json(const LoopGraph& g);
Json to_json(const FiniteGroup& g);
Json to_json(const GraphAction& a);
Json to_json(const PointedCover& c);
Json to_json(const CoverDescriptor& d);
Json to_json(const InertiaStructure& inertia, const Graph& base);
// {"kind":"morphism","source","target","vertex_map","edge_map"}.
Json to_json(const GraphMorphism& phi);

Graph graph_from_json(const Json& j);
LoopGraph loop_graph_from_json(const Json& j);
// An object {"order","table","names"} or a keyword: trivial, cyclic:n,
// dihedral:n, sym:n.
FiniteGroup group_from_json(const Json& j);
Element element_from_json(const FiniteGroup& g, const Json& j);
GraphAction action_from_json(const Json& j);
PointedCover cover_from_json(const Json& j);
CoverDescriptor descriptor_from_json(const Json& j);
InertiaStructure inertia_from_json(const Json& j, const Graph& base);
GraphMorphism morphism_from_json(const Json& j);
// Images of the source elements, listed in source index order.
GroupHom hom_from_json(const FiniteGroup& source, const FiniteGroup& target, const Json& images);

InertiaPolicy policy_from_string(const std::string& s);
std::string policy_name(InertiaPolicy p);
EmbeddingProblem embedding_problem_from_json(const Json& j);
GrunwaldWangProblem gw_problem_from_json(const Json& j);

// "pair:σ;inv:τ;σ^2" -> units. The prefix is a check: pair units must not be
// involutions and inv units must be.
SymmetricMultiset units_from_string(const FiniteGroup& g, const std::string& text);

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);
std::string dump(const Json& j);

}  // namespace harmcov::io

#endif  // HARMCOV_IO_HPP_
