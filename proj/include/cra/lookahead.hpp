#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cra/automaton.hpp"

namespace cra {

// Complete deterministic finite automaton over the enclosing alphabet.
struct Dfa {
    std::string name;
    std::vector<std::string> states;
    std::vector<int> delta;  // [p * |alphabet| + letter]
    int start = 0;
    std::vector<char> final;

    int next(std::string_view alphabet, int p, char c) const {
        return delta.at(p * alphabet.size() + letter_index(alphabet, c));
    }
    bool accepts(std::string_view alphabet, std::string_view w) const;
};

// Copyless CRA with regular lookahead: a transition q --[L]--> q' fires on
// letter w[i] when the suffix w[i..] (current letter included) is in L.
struct CraRla {
    struct Edge {
        int from;
        int lang;
        int to;
        Substitution update;
    };

    Semiring sr;
    std::string alphabet;
    std::vector<std::string> states;
    std::vector<std::string> registers;
    std::vector<Dfa> langs;
    std::vector<Edge> edges;
    int start = 0;
    std::vector<Value> init;
    std::vector<Expr> output;
    std::optional<unsigned> alt_bound;

    NameFn names() const;
};

struct Overlap {
    std::size_t first, second;  // edge indices
    std::string word;           // non-empty word in both languages
};
std::optional<Overlap> find_overlap(const CraRla& r);
// Throws Disjointness (witness: a suffix in two languages) if two lookaheads
// leaving the same state overlap on non-empty words.
void check_disjointness(const CraRla& r);
Value rla_eval(const CraRla& r, std::string_view w);

// Nondeterministic copyless CRA with final states, meant to have exactly one
// accepting run per word.
struct UCra {
    struct Edge {
        int from;
        int letter;
        int to;
        Substitution update;
    };

    Semiring sr;
    std::string alphabet;
    std::vector<std::string> states;
    std::vector<std::string> registers;
    std::vector<Edge> edges;
    int start = 0;
    std::vector<Value> init;
    std::vector<char> final;
    std::vector<Expr> output;
    std::optional<unsigned> alt_bound;

    std::vector<std::vector<const Edge*>> by_source_letter() const;  // [q * |alphabet| + letter]
    NameFn names() const;
};

struct Config {
    int state;
    std::vector<Value> values;
};
// End configurations of all runs on w (accepting or not).
std::vector<Config> ucra_configurations(const UCra& u, std::string_view w);
std::size_t ucra_accepting_runs(const UCra& u, std::string_view w);
// Output of the unique accepting run; Ambiguity / AcceptanceCount otherwise.
Value ucra_eval(const UCra& u, std::string_view w);
unsigned ucra_max_alternation(const UCra& u, unsigned max_len);
// Accessible and co-accessible part.
UCra trim(const UCra& u);
// Registers that can no longer reach an output are reset to zero on every edge.
UCra drop_dead_registers(const UCra& u);

// Product with the lookahead DFAs; the result is trimmed.
UCra to_unambiguous(const CraRla& r);

// One node of a substitution tree. Labels map the registers X (ids 0..|X|-1) to
// expressions over X and the tree variables Y (ids |X|, |X|+1, ...).
struct DetNode {
    Substitution label;
    std::vector<int> children;
    int state = -1;  // leaves only
};

// Tree state of the determinization; node 0 is the root, nodes are in preorder.
struct DetState {
    std::vector<DetNode> nodes;

    std::vector<int> leaves() const;
    std::size_t num_tree_vars(std::size_t num_registers) const;
};

// Expression split into a skeleton over the registers (ids < num_registers) and
// fresh variables fresh_base, fresh_base+1, ... standing for its register-free parts.
struct XReduction {
    Expr skeleton;
    std::map<VarId, Expr> defs;
};
XReduction x_reduce(const Expr& e, std::size_t num_registers, VarId fresh_base);

// t(root) o ... o t(u) for the path to u.
Substitution tree_collapse(const DetState& t, int u);

struct DetResult {
    Cra cra;                      // registers are the tree variables y0, y1, ...
    std::vector<DetState> trees;  // per state of cra
    unsigned alt_bound = 0;
    std::size_t register_budget = 0;
};

// Throws Ambiguity / AcceptanceCount (with witness words), RegisterBudget, StateExplosion.
DetResult determinize(const UCra& u, std::size_t max_states = 10000);
// Problems found in a tree state (empty when all invariants hold).
std::vector<std::string> check_invariants(const DetState& t, const UCra& u, std::size_t budget);
Cra eliminate_lookahead(const CraRla& r, std::size_t max_states = 10000);

}  // namespace cra
