#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cra/semiring.hpp"

namespace cra {

using VarId = std::uint32_t;
using NameFn = std::function<std::string(VarId)>;

enum class ExprKind : std::uint8_t { Const, Var, Add, Mul };

// Immutable expression tree over registers; subtrees are shared.
// Add is the semiring sum, Mul the semiring product. Op nodes have >= 2 children.
class Expr {
public:
    Expr();  // the constant 0 (integer zero, not the semiring zero)

    static Expr constant(Value v);
    static Expr var(VarId id);
    static Expr add(std::vector<Expr> children);
    static Expr mul(std::vector<Expr> children);
    // Like add/mul, but a single child is returned as is.
    static Expr op(ExprKind kind, std::vector<Expr> children);

    ExprKind kind() const { return node_->kind; }
    bool is_const() const { return kind() == ExprKind::Const; }
    bool is_var() const { return kind() == ExprKind::Var; }
    bool is_op() const { return kind() == ExprKind::Add || kind() == ExprKind::Mul; }
    Value value() const { return node_->value; }
    VarId var_id() const { return node_->var; }
    const std::vector<Expr>& children() const { return node_->children; }

    friend bool operator==(const Expr& a, const Expr& b);

private:
    struct Node {
        ExprKind kind = ExprKind::Const;
        Value value;
        VarId var = 0;
        std::vector<Expr> children;
    };
    explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

// Valuation indexed by VarId. Throws MissingBinding for ids past the end.
Value evaluate(const Expr& e, Semiring sr, std::span<const Value> valuation);

std::vector<VarId> vars(const Expr& e);  // sorted, unique
bool occurs(const Expr& e, VarId x);
bool is_ground(const Expr& e);
std::size_t size(const Expr& e);
bool is_copyless(const Expr& e);

Expr rename(const Expr& e, const std::function<VarId(VarId)>& f);
// Replaces every variable by f(var).
Expr substitute(const Expr& e, const std::function<Expr(VarId)>& f);

// Drops 0 summands and collapses products containing 0.
Expr reduce_zeros(const Expr& e, Semiring sr);
bool is_zero_reduced(const Expr& e, Semiring sr);

// Reduced parse tree: no op node has a child of its own kind.
Expr flatten(const Expr& e);
bool is_flat(const Expr& e);
unsigned depth(const Expr& e);
// Depth of the reduced parse tree.
unsigned alternation(const Expr& e);

struct Monomial {
    Value coeff;
    std::vector<VarId> vars;  // sorted
};
// Sum of monomials with pairwise distinct variable sets, no zero coefficients.
// Requires a copyless expression.
std::vector<Monomial> monomial_form(const Expr& e, Semiring sr);
Value evaluate(const std::vector<Monomial>& m, Semiring sr, std::span<const Value> valuation);

// (c, d) with e equivalent to (c * x) + d. Requires copyless e with vars(e) within {x}.
std::pair<Value, Value> affine_form(const Expr& e, VarId x, Semiring sr);

struct EquivVerdict {
    bool equivalent = true;
    std::vector<Value> counterexample;  // indexed by VarId
};
// Randomized equivalence test; deterministic for a fixed seed.
EquivVerdict equiv_check(const Expr& a, const Expr& b, Semiring sr, int samples, std::uint64_t seed);

std::string default_name(VarId id);
std::string to_string(const Expr& e, const NameFn& names = default_name);
// Order-insensitive key: op children are sorted by their own keys.
std::string canonical_key(const Expr& e, const NameFn& names = default_name);
// Same tree with op children sorted by canonical_key.
Expr canonical_order(const Expr& e, const NameFn& names = default_name);

// Grammar:  expr := term ('+' term)* ; term := factor ('*' factor)* ;
//           factor := integer | -inf | +inf | ZERO | ONE | identifier | '(' expr ')'
// lookup returns the id of an identifier or throws. Errors carry line/column
// relative to (line, column) of the first character.
using LookupFn = std::function<VarId(std::string_view)>;
Expr parse_expr(std::string_view text, Semiring sr, const LookupFn& lookup, int line = 1, int column = 1);

}  // namespace cra
