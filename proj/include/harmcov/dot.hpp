#ifndef HARMCOV_DOT_HPP_
#define HARMCOV_DOT_HPP_

#include <string>

#include "harmcov/action.hpp"

namespace harmcov {

std::string to_dot(const Graph& g);
std::string to_dot(const LoopGraph& g);
// Vertices labelled by identifier and coloured by orbit.
std::string to_dot(const GraphAction& a);
// One cluster per fiber, vertical edges dashed, the cover point doubled.
std::string to_dot(const PointedCover& c);

}  // namespace harmcov

#endif  // HARMCOV_DOT_HPP_
