#include "cra/expr.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "cra/error.hpp"

namespace cra {

Expr::Expr() : node_(std::make_shared<const Node>()) {}

Expr Expr::constant(Value v) {
    auto n = std::make_shared<Node>();
    n->kind = ExprKind::Const;
    n->value = v;
    return Expr(std::move(n));
}

Expr Expr::var(VarId id) {
    auto n = std::make_shared<Node>();
    n->kind = ExprKind::Var;
    n->var = id;
    return Expr(std::move(n));
}

Expr Expr::add(std::vector<Expr> children) {
    if (children.size() < 2) throw Error(ErrorKind::Precondition, "sum needs at least two operands");
    auto n = std::make_shared<Node>();
    n->kind = ExprKind::Add;
    n->children = std::move(children);
    return Expr(std::move(n));
}

Expr Expr::mul(std::vector<Expr> children) {
    if (children.size() < 2) throw Error(ErrorKind::Precondition, "product needs at least two operands");
    auto n = std::make_shared<Node>();
    n->kind = ExprKind::Mul;
    n->children = std::move(children);
    return Expr(std::move(n));
}

Expr Expr::op(ExprKind kind, std::vector<Expr> children) {
    if (children.size() == 1) return children.front();
    return kind == ExprKind::Add ? add(std::move(children)) : mul(std::move(children));
}

bool operator==(const Expr& a, const Expr& b) {
    if (a.node_ == b.node_) return true;
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
        case ExprKind::Const: return a.value() == b.value();
        case ExprKind::Var: return a.var_id() == b.var_id();
        default: return a.children() == b.children();
    }
}

Value evaluate(const Expr& e, Semiring sr, std::span<const Value> valuation) {
    switch (e.kind()) {
        case ExprKind::Const: return e.value();
        case ExprKind::Var:
            if (e.var_id() >= valuation.size())
                throw Error(ErrorKind::MissingBinding, "no value for register " + default_name(e.var_id()));
            return valuation[e.var_id()];
        case ExprKind::Add: {
            Value acc = sr.zero();
            for (const auto& c : e.children()) acc = sr.add(acc, evaluate(c, sr, valuation));
            return acc;
        }
        case ExprKind::Mul: {
            Value acc = sr.one();
            for (const auto& c : e.children()) acc = sr.mul(acc, evaluate(c, sr, valuation));
            return acc;
        }
    }
    return sr.zero();
}

static void collect_vars(const Expr& e, std::vector<VarId>& out) {
    if (e.is_var()) out.push_back(e.var_id());
    for (const auto& c : e.children()) collect_vars(c, out);
}

std::vector<VarId> vars(const Expr& e) {
    std::vector<VarId> out;
    collect_vars(e, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool occurs(const Expr& e, VarId x) {
    if (e.is_var()) return e.var_id() == x;
    for (const auto& c : e.children())
        if (occurs(c, x)) return true;
    return false;
}

bool is_ground(const Expr& e) {
    if (e.is_var()) return false;
    for (const auto& c : e.children())
        if (!is_ground(c)) return false;
    return true;
}

std::size_t size(const Expr& e) {
    std::size_t n = 1;
    for (const auto& c : e.children()) n += size(c);
    return n;
}

bool is_copyless(const Expr& e) {
    std::vector<VarId> all;
    collect_vars(e, all);
    std::sort(all.begin(), all.end());
    return std::adjacent_find(all.begin(), all.end()) == all.end();
}

Expr rename(const Expr& e, const std::function<VarId(VarId)>& f) {
    return substitute(e, [&](VarId x) { return Expr::var(f(x)); });
}

Expr substitute(const Expr& e, const std::function<Expr(VarId)>& f) {
    switch (e.kind()) {
        case ExprKind::Const: return e;
        case ExprKind::Var: return f(e.var_id());
        default: break;
    }
    std::vector<Expr> ch;
    ch.reserve(e.children().size());
    for (const auto& c : e.children()) ch.push_back(substitute(c, f));
    return Expr::op(e.kind(), std::move(ch));
}

Expr reduce_zeros(const Expr& e, Semiring sr) {
    if (!e.is_op()) return e;
    std::vector<Expr> ch;
    for (const auto& c : e.children()) {
        Expr r = reduce_zeros(c, sr);
        bool zero = r.is_const() && sr.is_zero(r.value());
        if (zero && e.kind() == ExprKind::Mul) return Expr::constant(sr.zero());
        if (!zero) ch.push_back(std::move(r));
    }
    if (ch.empty()) return Expr::constant(sr.zero());
    return Expr::op(e.kind(), std::move(ch));
}

bool is_zero_reduced(const Expr& e, Semiring sr) {
    if (e.is_const()) return true;
    std::function<bool(const Expr&)> rec = [&](const Expr& n) {
        if (n.is_const()) return !sr.is_zero(n.value());
        for (const auto& c : n.children())
            if (!rec(c)) return false;
        return true;
    };
    return rec(e);
}

Expr flatten(const Expr& e) {
    if (!e.is_op()) return e;
    std::vector<Expr> ch;
    for (const auto& c : e.children()) {
        Expr f = flatten(c);
        if (f.kind() == e.kind())
            ch.insert(ch.end(), f.children().begin(), f.children().end());
        else
            ch.push_back(std::move(f));
    }
    return Expr::op(e.kind(), std::move(ch));
}

bool is_flat(const Expr& e) {
    for (const auto& c : e.children())
        if (c.kind() == e.kind() || !is_flat(c)) return false;
    return true;
}

unsigned depth(const Expr& e) {
    unsigned d = 0;
    for (const auto& c : e.children()) d = std::max(d, depth(c) + 1);
    return d;
}

unsigned alternation(const Expr& e) { return depth(flatten(e)); }

namespace {

using MonoMap = std::map<std::vector<VarId>, Value>;

MonoMap monomials(const Expr& e, Semiring sr) {
    MonoMap out;
    switch (e.kind()) {
        case ExprKind::Const:
            if (!sr.is_zero(e.value())) out[{}] = e.value();
            return out;
        case ExprKind::Var:
            out[{e.var_id()}] = sr.one();
            return out;
        case ExprKind::Add:
            for (const auto& c : e.children())
                for (auto& [set, coeff] : monomials(c, sr)) {
                    auto [it, fresh] = out.emplace(set, coeff);
                    if (!fresh) it->second = sr.add(it->second, coeff);
                }
            return out;
        case ExprKind::Mul: {
            out[{}] = sr.one();
            for (const auto& c : e.children()) {
                MonoMap rhs = monomials(c, sr);
                MonoMap next;
                for (const auto& [s1, c1] : out)
                    for (const auto& [s2, c2] : rhs) {
                        std::vector<VarId> u;
                        std::set_union(s1.begin(), s1.end(), s2.begin(), s2.end(), std::back_inserter(u));
                        Value k = sr.mul(c1, c2);
                        if (sr.is_zero(k)) continue;
                        auto [it, fresh] = next.emplace(std::move(u), k);
                        if (!fresh) it->second = sr.add(it->second, k);
                    }
                out = std::move(next);
            }
            return out;
        }
    }
    return out;
}

}  // namespace

std::vector<Monomial> monomial_form(const Expr& e, Semiring sr) {
    if (!is_copyless(e)) throw Error(ErrorKind::CopylessViolation, "expression is not copyless");
    std::vector<Monomial> out;
    for (auto& [set, coeff] : monomials(e, sr))
        if (!sr.is_zero(coeff)) out.push_back({coeff, set});
    return out;
}

Value evaluate(const std::vector<Monomial>& m, Semiring sr, std::span<const Value> valuation) {
    Value acc = sr.zero();
    for (const auto& mono : m) {
        Value t = mono.coeff;
        for (VarId x : mono.vars) {
            if (x >= valuation.size()) throw Error(ErrorKind::MissingBinding, "no value for register " + default_name(x));
            t = sr.mul(t, valuation[x]);
        }
        acc = sr.add(acc, t);
    }
    return acc;
}

std::pair<Value, Value> affine_form(const Expr& e, VarId x, Semiring sr) {
    for (VarId v : vars(e))
        if (v != x) throw Error(ErrorKind::NotUnivariate, "expression mentions register " + default_name(v));
    if (!is_copyless(e)) throw Error(ErrorKind::CopylessViolation, "expression is not copyless");
    std::function<std::pair<Value, Value>(const Expr&)> rec = [&](const Expr& n) -> std::pair<Value, Value> {
        switch (n.kind()) {
            case ExprKind::Const: return {sr.zero(), n.value()};
            case ExprKind::Var: return {sr.one(), sr.zero()};
            case ExprKind::Add: {
                std::pair<Value, Value> acc{sr.zero(), sr.zero()};
                for (const auto& c : n.children()) {
                    auto [c1, d1] = rec(c);
                    acc = {sr.add(acc.first, c1), sr.add(acc.second, d1)};
                }
                return acc;
            }
            case ExprKind::Mul: {
                std::pair<Value, Value> acc{sr.zero(), sr.one()};
                for (const auto& c : n.children()) {
                    auto [c2, d2] = rec(c);
                    auto [c1, d1] = acc;
                    // x occurs in at most one factor, so the c1*c2 term is absent.
                    acc = {sr.add(sr.mul(c1, d2), sr.mul(c2, d1)), sr.mul(d1, d2)};
                }
                return acc;
            }
        }
        return {sr.zero(), sr.zero()};
    };
    return rec(e);
}

EquivVerdict equiv_check(const Expr& a, const Expr& b, Semiring sr, int samples, std::uint64_t seed) {
    std::vector<VarId> vs = vars(a);
    for (VarId v : vars(b)) vs.push_back(v);
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    std::size_t width = vs.empty() ? 0 : vs.back() + 1;

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> dist(0, 1'000'000);
    EquivVerdict verdict;
    int done = 0;
    for (int attempt = 0; done < samples && attempt < samples * 4; ++attempt) {
        std::vector<Value> val(width, sr.zero());
        for (VarId v : vs) val[v] = dist(rng);
        if (!vs.empty() && static_cast<std::size_t>(done) < vs.size()) val[vs[done]] = sr.zero();
        Value ra, rb;
        try {
            ra = evaluate(a, sr, val);
            rb = evaluate(b, sr, val);
        } catch (const Error& err) {
            if (err.kind() == ErrorKind::ArithmeticOverflow) continue;
            throw;
        }
        ++done;
        if (!(ra == rb)) {
            verdict.equivalent = false;
            verdict.counterexample = std::move(val);
            return verdict;
        }
    }
    return verdict;
}

std::string default_name(VarId id) { return "r" + std::to_string(id); }

static void print(const Expr& e, const NameFn& names, std::string& out) {
    switch (e.kind()) {
        case ExprKind::Const: out += e.value().str(); return;
        case ExprKind::Var: out += names(e.var_id()); return;
        default: break;
    }
    const char* sep = e.kind() == ExprKind::Add ? " + " : " * ";
    bool first = true;
    for (const auto& c : e.children()) {
        if (!first) out += sep;
        first = false;
        // Parenthesize any nested op except a product under a sum, so parsing restores the tree.
        bool paren = c.is_op() && !(e.kind() == ExprKind::Add && c.kind() == ExprKind::Mul);
        if (paren) out += '(';
        print(c, names, out);
        if (paren) out += ')';
    }
}

std::string to_string(const Expr& e, const NameFn& names) {
    std::string out;
    print(e, names, out);
    return out;
}

std::string canonical_key(const Expr& e, const NameFn& names) {
    switch (e.kind()) {
        case ExprKind::Const: return e.value().str();
        case ExprKind::Var: return names(e.var_id());
        default: break;
    }
    std::vector<std::string> keys;
    for (const auto& c : e.children()) keys.push_back(canonical_key(c, names));
    std::sort(keys.begin(), keys.end());
    std::string out = e.kind() == ExprKind::Add ? "+(" : "*(";
    for (std::size_t i = 0; i < keys.size(); ++i) {
        if (i) out += ',';
        out += keys[i];
    }
    return out + ')';
}

Expr canonical_order(const Expr& e, const NameFn& names) {
    if (!e.is_op()) return e;
    std::vector<std::pair<std::string, Expr>> ch;
    for (const auto& c : e.children()) {
        Expr s = canonical_order(c, names);
        ch.emplace_back(canonical_key(s, names), s);
    }
    std::stable_sort(ch.begin(), ch.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    std::vector<Expr> out;
    for (auto& [k, c] : ch) out.push_back(std::move(c));
    return Expr::op(e.kind(), std::move(out));
}

}  // namespace cra
