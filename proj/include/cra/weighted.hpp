#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cra/semiring.hpp"

namespace cra {

// Weighted automaton; a transition is absent iff its weight is 0.
struct WeightedAutomaton {
    Semiring sr;
    std::string alphabet;
    std::vector<std::string> states;
    std::vector<Value> initial;
    std::vector<Value> final;
    std::vector<Value> weights;  // [letter][p][q], flattened

    WeightedAutomaton() = default;
    WeightedAutomaton(Semiring s, std::string alpha, std::vector<std::string> sts);

    std::size_t num_states() const { return states.size(); }
    Value& weight(int a, int p, int q) { return weights.at((a * num_states() + p) * num_states() + q); }
    Value weight(int a, int p, int q) const { return weights.at((a * num_states() + p) * num_states() + q); }
    int state_index(std::string_view name) const;
};

Value wa_eval(const WeightedAutomaton& w, std::string_view word);

struct Run {
    std::vector<int> states;  // |word| + 1 states
    Value weight;
};
// All accepting runs with non-zero weight; throws Limit when |word| > max_len.
std::vector<Run> enumerate_runs(const WeightedAutomaton& w, std::string_view word, unsigned max_len = 15);
std::size_t count_runs(const WeightedAutomaton& w, std::string_view word);
// Entry n: the largest number of accepting runs over words of length n.
std::vector<std::size_t> ambiguity_profile(const WeightedAutomaton& w, unsigned max_len);

}  // namespace cra
