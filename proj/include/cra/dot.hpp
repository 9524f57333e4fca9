#pragma once

#include <string>

#include "cra/format.hpp"

namespace cra {

// Graphviz description; nodes in state order, one edge per transition.
std::string to_dot(const Machine& m);

}  // namespace cra
