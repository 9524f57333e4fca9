#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "cra/automaton.hpp"
#include "cra/lookahead.hpp"

namespace testing {

using Rng = std::mt19937_64;
using cra::Expr;
using cra::Semiring;
using cra::Substitution;
using cra::Value;
using cra::VarId;

struct GenOptions {
    bool allow_zero = false;  // may emit the semiring zero as a constant
    int max_const = 5;
    int max_depth = 3;
};

Value random_const(Rng& rng, Semiring sr, const GenOptions& opt);
// Copyless expression using each variable of pool at most once (all of them when use_all).
Expr random_copyless(Rng& rng, std::vector<VarId> pool, Semiring sr, const GenOptions& opt, bool use_all = false);
// Copyless substitution on n registers; normal form w.r.t. the natural order when asked.
Substitution random_substitution(Rng& rng, std::size_t n, Semiring sr, bool normal_form, const GenOptions& opt);
// Total copyless CRA over "ab" with 1..max_states states and 1..max_regs registers.
// nonzero_outputs adds the constant 1 to each output so no output is ever 0.
cra::Cra random_cra(Rng& rng, Semiring sr, int max_states, int max_regs, const GenOptions& opt, bool nonzero_outputs);
// Lookahead CRA over "ab" whose guards at each state partition the non-empty words.
cra::CraRla random_rla(Rng& rng, int max_states, int max_regs);
// Random valuation of n variables.
std::vector<Value> random_valuation(Rng& rng, std::size_t n, Semiring sr, std::int64_t max_value, bool allow_zero);

// Reference word functions written as direct block computations.
std::int64_t longest_b_block(std::string_view w);
std::int64_t sum_block_max(std::string_view w);
std::int64_t f_b(std::string_view w);
std::int64_t f_b_rev(std::string_view w);

std::string reversed(std::string_view w);

// Determinizes u and checks, for every tree state, the structural invariants and, for every
// word up to len, that the runs of u are exactly the leaves of the reached tree and that each
// run's registers equal its collapsed branch evaluated at the determinized registers.
// Returns the first problem found, or an empty string.
std::string check_determinization(const cra::UCra& u, unsigned len);

// Parses an expression over the variables x, y, z, u, v, w (ids 0..5).
Expr px(std::string_view text, Semiring sr = Semiring(cra::SemiringKind::MaxPlus));
// Samples both expressions on n_samples random valuations of the first n variables.
bool same_values(const Expr& a, const Expr& b, Semiring sr, std::size_t n, int n_samples, std::uint64_t seed);

}  // namespace testing
