#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cra/subst.hpp"

namespace cra {

// Index of c in alphabet; throws Alphabet.
int letter_index(std::string_view alphabet, char c);
// Calls f on every word of length <= max_len, shortest first, then in alphabet order.
void for_each_word(std::string_view alphabet, unsigned max_len, const std::function<void(const std::string&)>& f);

// Deterministic copyless cost register automaton.
struct Cra {
    struct Edge {
        int target = -1;  // -1: undefined
        Substitution update;
    };

    Semiring sr;
    std::string alphabet;
    std::vector<std::string> states;
    std::vector<std::string> registers;  // listed in increasing register order
    std::vector<Edge> delta;             // index q * |alphabet| + letter
    int start = 0;
    std::vector<Value> init;
    std::vector<Expr> output;  // per state

    Cra() = default;
    Cra(Semiring s, std::string alpha, std::vector<std::string> sts, std::vector<std::string> regs);

    std::size_t num_states() const { return states.size(); }
    std::size_t num_registers() const { return registers.size(); }
    int letter(char c) const { return letter_index(alphabet, c); }
    Edge& edge(int q, int a) { return delta.at(q * alphabet.size() + a); }
    const Edge& edge(int q, int a) const { return delta.at(q * alphabet.size() + a); }
    void set(int q, char a, int target, Substitution s) { edge(q, letter(a)) = {target, std::move(s)}; }
    int state_index(std::string_view name) const;
    VarId register_index(std::string_view name) const;
    NameFn names() const;
};

Value eval(const Cra& a, std::string_view w);
// State reached from q and the composed update sigma_{w1} o ... o sigma_{wn}.
std::pair<int, Substitution> delta_star(const Cra& a, int q, std::string_view w);
// Output after w as a ground expression (initial values substituted).
Expr ground_output_expr(const Cra& a, std::string_view w);

struct ValidationReport {
    bool copyless = true;
    bool normal_form = true;
    bool total = true;
    std::vector<std::string> problems;
};
ValidationReport validate(const Cra& a);

std::vector<int> accessible(const Cra& a);
std::vector<std::vector<int>> sccs(const Cra& a);
std::vector<std::vector<int>> bottom_sccs(const Cra& a);
bool is_strongly_connected(const Cra& a);
// Shortest word leading from q to p, ties broken by alphabet order; nullopt if unreachable.
std::optional<std::string> shortest_word(const Cra& a, int q, int p);
// Keeps only accessible states.
Cra trim(const Cra& a);
unsigned max_alternation(const Cra& a, unsigned max_len);

}  // namespace cra
