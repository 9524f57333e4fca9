#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "cra/automaton.hpp"
#include "cra/lookahead.hpp"
#include "cra/weighted.hpp"

namespace cra {

// Text formats. Every file starts its header with `kind: cra | ucra | rla | wa`.
// Lines whose first non-blank character is '#' are comments.
using Machine = std::variant<Cra, UCra, CraRla, WeightedAutomaton>;

// Throws ParseError with the line and column of the problem.
Machine parse_machine(std::string_view text);
Cra parse_cra(std::string_view text);
UCra parse_ucra(std::string_view text);
CraRla parse_rla(std::string_view text);
WeightedAutomaton parse_wa(std::string_view text);

std::string serialize(const Cra& a);
std::string serialize(const UCra& u);
std::string serialize(const CraRla& r);
std::string serialize(const WeightedAutomaton& w);
std::string serialize(const Machine& m);

std::string read_file(const std::string& path);
Machine load_machine(const std::string& path);

}  // namespace cra
