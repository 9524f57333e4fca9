#include "cra/subst.hpp"

#include <algorithm>

#include "cra/error.hpp"

namespace cra {

Substitution Substitution::identity(std::size_t n) {
    std::vector<Expr> im;
    im.reserve(n);
    for (std::size_t i = 0; i < n; ++i) im.push_back(Expr::var(static_cast<VarId>(i)));
    return Substitution(std::move(im));
}

Substitution Substitution::constants(std::span<const Value> values) {
    std::vector<Expr> im;
    im.reserve(values.size());
    for (Value v : values) im.push_back(Expr::constant(v));
    return Substitution(std::move(im));
}

Expr apply(const Substitution& s, const Expr& e, bool keep_unbound) {
    return substitute(e, [&](VarId x) {
        if (x < s.size()) return s[x];
        if (!keep_unbound) throw Error(ErrorKind::MissingBinding, "substitution has no image for " + default_name(x));
        return Expr::var(x);
    });
}

Substitution compose(const Substitution& s1, const Substitution& s2, bool keep_unbound) {
    std::vector<Expr> im;
    im.reserve(s2.size());
    for (const auto& e : s2.images()) im.push_back(apply(s1, e, keep_unbound));
    return Substitution(std::move(im));
}

Substitution power(const Substitution& s, unsigned n) {
    Substitution r = Substitution::identity(s.size());
    for (unsigned i = 0; i < n; ++i) r = compose(r, s);
    return r;
}

std::vector<Value> evaluate(const Substitution& s, Semiring sr, std::span<const Value> valuation) {
    std::vector<Value> out;
    out.reserve(s.size());
    for (const auto& e : s.images()) out.push_back(evaluate(e, sr, valuation));
    return out;
}

bool is_copyless(const Substitution& s) {
    std::vector<VarId> all;
    for (const auto& e : s.images()) {
        if (!is_copyless(e)) return false;
        for (VarId v : vars(e)) all.push_back(v);
    }
    std::sort(all.begin(), all.end());
    return std::adjacent_find(all.begin(), all.end()) == all.end();
}

bool is_ground(const Substitution& s) {
    return std::all_of(s.images().begin(), s.images().end(), [](const Expr& e) { return is_ground(e); });
}

RegisterOrder::RegisterOrder(std::vector<VarId> increasing) : order_(std::move(increasing)) {
    rank_.assign(order_.size(), order_.size());
    for (std::size_t i = 0; i < order_.size(); ++i) {
        if (order_[i] >= order_.size() || rank_[order_[i]] != order_.size())
            throw Error(ErrorKind::Precondition, "register order is not a permutation");
        rank_[order_[i]] = i;
    }
}

RegisterOrder RegisterOrder::natural(std::size_t n) {
    std::vector<VarId> o(n);
    for (std::size_t i = 0; i < n; ++i) o[i] = static_cast<VarId>(i);
    return RegisterOrder(std::move(o));
}

bool is_normal_form(const Substitution& s, const RegisterOrder& order) {
    for (VarId x = 0; x < s.size(); ++x)
        for (VarId y : vars(s[x]))
            if (!order.leq(x, y)) return false;
    return true;
}

std::vector<VarId> stable_vars(const Substitution& s) {
    std::vector<VarId> out;
    for (VarId x = 0; x < s.size(); ++x)
        if (occurs(s[x], x)) out.push_back(x);
    return out;
}

bool is_collapse(const Substitution& s, std::span<const VarId> stable) {
    for (VarId x = 0; x < s.size(); ++x) {
        if (std::find(stable.begin(), stable.end(), x) != stable.end()) continue;
        if (!is_ground(s[x])) return false;
    }
    return true;
}

std::string to_string(const Substitution& s, const NameFn& names, bool full) {
    std::string out;
    for (VarId x = 0; x < s.size(); ++x) {
        if (!full && s[x].is_var() && s[x].var_id() == x) continue;
        if (!out.empty()) out += " ; ";
        out += names(x) + " := " + to_string(s[x], names);
    }
    return out;
}

}  // namespace cra
