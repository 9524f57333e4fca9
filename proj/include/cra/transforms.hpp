#pragma once

#include <span>
#include <string>
#include <vector>

#include "cra/automaton.hpp"

namespace cra {

// Equivalent non-zero CRA: states q@{S} track which registers hold 0.
// Throws NonZeroViolation (with a witness word) if a reachable output is 0.
Cra remove_zeros(const Cra& a);

// Equivalent CRA in normal form. States are q@perm, perm being the register
// renaming in force. `order` lists the registers (by current id) in increasing
// order; the result declares its registers in that order.
Cra normalize(const Cra& a, const RegisterOrder& order);
Cra normalize(const Cra& a);

// Registers stable on every letter transition of an accessible state.
// Requires normal form (Precondition otherwise).
std::vector<VarId> stable_registers(const Cra& a);

struct CollapseWord {
    std::string word;
    Substitution update;
};
// Word from q to p that contains every letter and induces a collapse substitution.
// Requires normal form and strong connectivity.
CollapseWord collapse_word(const Cra& a, int q, int p);

// Smallest N >= 1 such that s^N is collapse w.r.t. `stable`.
unsigned collapse_power(const Substitution& s, std::span<const VarId> stable);

// s^(i+1)(x) in closed form (c^i * s(x)) + (d * sum_{j<i} c^j). Requires s
// collapse w.r.t. `stable`, x s-stable, and no 0 arising in the affine form.
Expr iterated_closed_form(const Substitution& s, VarId x, unsigned i, Semiring sr, std::span<const VarId> stable);

}  // namespace cra
