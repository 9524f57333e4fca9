#pragma once

#include <span>
#include <string>
#include <vector>

#include "cra/expr.hpp"

namespace cra {

// Total map from registers 0..size()-1 to expressions.
class Substitution {
public:
    Substitution() = default;
    explicit Substitution(std::vector<Expr> images) : images_(std::move(images)) {}

    static Substitution identity(std::size_t n);
    static Substitution constants(std::span<const Value> values);

    std::size_t size() const { return images_.size(); }
    const Expr& operator[](VarId x) const { return images_.at(x); }
    Expr& operator[](VarId x) { return images_.at(x); }
    const std::vector<Expr>& images() const { return images_; }

    friend bool operator==(const Substitution& a, const Substitution& b) { return a.images_ == b.images_; }

private:
    std::vector<Expr> images_;
};

// Replaces registers below s.size() by their images. Other variables are kept
// when keep_unbound is set, otherwise they raise MissingBinding.
Expr apply(const Substitution& s, const Expr& e, bool keep_unbound = false);
// (s1 o s2)(x) = apply(s1, s2(x)); the left operand is applied second.
Substitution compose(const Substitution& s1, const Substitution& s2, bool keep_unbound = false);
Substitution power(const Substitution& s, unsigned n);
std::vector<Value> evaluate(const Substitution& s, Semiring sr, std::span<const Value> valuation);

bool is_copyless(const Substitution& s);
bool is_ground(const Substitution& s);

// Total preorder on registers given as the list of registers in increasing order.
class RegisterOrder {
public:
    RegisterOrder() = default;
    explicit RegisterOrder(std::vector<VarId> increasing);
    static RegisterOrder natural(std::size_t n);

    std::size_t rank(VarId x) const { return rank_.at(x); }
    bool leq(VarId x, VarId y) const { return rank(x) <= rank(y); }
    const std::vector<VarId>& increasing() const { return order_; }

private:
    std::vector<VarId> order_;
    std::vector<std::size_t> rank_;
};

// Every register occurring in s(x) is above x.
bool is_normal_form(const Substitution& s, const RegisterOrder& order);
std::vector<VarId> stable_vars(const Substitution& s);
// Every register outside `stable` maps to a ground expression.
bool is_collapse(const Substitution& s, std::span<const VarId> stable);

// "x := e ; y := f", skipping identity entries unless full is set.
std::string to_string(const Substitution& s, const NameFn& names = default_name, bool full = false);

}  // namespace cra
