#include "cra/transforms.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <optional>

#include "cra/error.hpp"

namespace cra {

namespace {

using Mask = std::uint64_t;

bool in(Mask m, VarId x) { return (m >> x) & 1u; }

// e with the registers of S replaced by 0, zero-reduced.
Expr zero_out(const Expr& e, Mask s, Semiring sr) {
    Expr r = substitute(e, [&](VarId x) { return in(s, x) ? Expr::constant(sr.zero()) : Expr::var(x); });
    return reduce_zeros(r, sr);
}

bool is_zero_const(const Expr& e, Semiring sr) { return e.is_const() && sr.is_zero(e.value()); }

std::string word_to(const std::vector<std::pair<int, char>>& parent, int s) {
    std::string w;
    for (; parent[s].first >= 0; s = parent[s].first) w.push_back(parent[s].second);
    std::reverse(w.begin(), w.end());
    return w;
}

}  // namespace

Cra remove_zeros(const Cra& a) {
    const Semiring sr = a.sr;
    const std::size_t n = a.num_registers();
    if (n > 63) throw Error(ErrorKind::Limit, "zero removal supports at most 63 registers");
    const std::size_t k = a.alphabet.size();

    Mask s0 = 0;
    for (VarId x = 0; x < n; ++x)
        if (sr.is_zero(a.init[x])) s0 |= Mask(1) << x;

    std::map<std::pair<int, Mask>, int> ids;
    std::vector<std::pair<int, Mask>> states;
    std::vector<std::pair<int, char>> parent;
    struct Out {
        int target;
        Substitution update;
    };
    std::vector<std::vector<std::optional<Out>>> edges;

    auto intern = [&](int q, Mask s, int from, char c) {
        auto [it, fresh] = ids.emplace(std::make_pair(q, s), static_cast<int>(states.size()));
        if (fresh) {
            states.push_back({q, s});
            parent.push_back({from, c});
        }
        return it->second;
    };
    intern(a.start, s0, -1, 0);
    for (std::size_t i = 0; i < states.size(); ++i) {
        auto [q, s] = states[i];
        edges.emplace_back(k);
        for (std::size_t c = 0; c < k; ++c) {
            const auto& e = a.edge(q, static_cast<int>(c));
            if (e.target < 0) continue;
            std::vector<Expr> im(n);
            Mask next = 0;
            for (VarId x = 0; x < n; ++x) {
                im[x] = zero_out(e.update[x], s, sr);
                // Registers that become 0 are tracked in the target set and hold 1.
                if (is_zero_const(im[x], sr)) {
                    next |= Mask(1) << x;
                    im[x] = Expr::constant(sr.one());
                }
            }
            int t = intern(e.target, next, static_cast<int>(i), a.alphabet[c]);
            edges[i][c] = Out{t, Substitution(std::move(im))};
        }
    }

    std::vector<std::string> names;
    for (auto [q, s] : states) {
        std::string name = a.states[q] + "@{";
        bool first = true;
        for (VarId x = 0; x < n; ++x)
            if (in(s, x)) {
                if (!first) name += ',';
                first = false;
                name += a.registers[x];
            }
        names.push_back(name + "}");
    }

    Cra r(sr, a.alphabet, names, a.registers);
    r.start = 0;
    for (VarId x = 0; x < n; ++x) r.init[x] = in(s0, x) ? sr.one() : a.init[x];
    for (std::size_t i = 0; i < states.size(); ++i) {
        auto [q, s] = states[i];
        r.output[i] = zero_out(a.output[q], s, sr);
        if (is_zero_const(r.output[i], sr)) {
            std::string w = word_to(parent, static_cast<int>(i));
            throw Error(ErrorKind::NonZeroViolation, "output is 0 after reading \"" + w + "\"", w);
        }
        for (std::size_t c = 0; c < k; ++c)
            if (edges[i][c]) r.edge(static_cast<int>(i), static_cast<int>(c)) = {edges[i][c]->target, edges[i][c]->update};
    }
    return r;
}

Cra normalize(const Cra& a, const RegisterOrder& order) {
    const std::size_t n = a.num_registers();
    const std::size_t k = a.alphabet.size();
    if (order.increasing().size() != n) throw Error(ErrorKind::Precondition, "order does not cover all registers");

    // Renumber registers so that ids follow the requested order.
    auto rank = [&](VarId x) { return static_cast<VarId>(order.rank(x)); };
    std::vector<std::string> regs(n);
    std::vector<Value> init(n);
    for (VarId x = 0; x < n; ++x) {
        regs[rank(x)] = a.registers[x];
        init[rank(x)] = a.init[x];
    }
    auto renamed = [&](const Substitution& s) {
        std::vector<Expr> im(n);
        for (VarId x = 0; x < n; ++x) im[rank(x)] = rename(s[x], rank);
        return Substitution(std::move(im));
    };

    using Perm = std::vector<VarId>;
    Perm id(n);
    for (VarId x = 0; x < n; ++x) id[x] = x;

    std::map<std::pair<int, Perm>, int> ids;
    std::vector<std::pair<int, Perm>> states;
    struct Out {
        int target;
        Substitution update;
    };
    std::vector<std::vector<std::optional<Out>>> edges;
    auto intern = [&](int q, const Perm& p) {
        auto [it, fresh] = ids.emplace(std::make_pair(q, p), static_cast<int>(states.size()));
        if (fresh) states.push_back({q, p});
        return it->second;
    };

    intern(a.start, id);
    for (std::size_t i = 0; i < states.size(); ++i) {
        auto [q, rho] = states[i];
        auto by_rho = [&](VarId x) { return rho[x]; };
        edges.emplace_back(k);
        for (std::size_t c = 0; c < k; ++c) {
            const auto& e = a.edge(q, static_cast<int>(c));
            if (e.target < 0) continue;
            Substitution s = renamed(e.update);
            std::vector<Expr> moved(n);
            for (VarId x = 0; x < n; ++x) moved[x] = rename(s[x], by_rho);

            // tau(x) = least register of rho(s(x)); the rest fill the gaps in order.
            Perm tau(n, static_cast<VarId>(n));
            std::vector<char> taken(n, 0);
            for (VarId x = 0; x < n; ++x) {
                auto vs = vars(moved[x]);
                if (vs.empty()) continue;
                tau[x] = vs.front();
                if (taken[vs.front()]) throw Error(ErrorKind::CopylessViolation, "update is not copyless");
                taken[vs.front()] = 1;
            }
            VarId free = 0;
            for (VarId x = 0; x < n; ++x) {
                if (tau[x] != n) continue;
                while (taken[free]) ++free;
                tau[x] = free;
                taken[free] = 1;
            }

            std::vector<Expr> im(n);
            for (VarId x = 0; x < n; ++x) im[tau[x]] = moved[x];
            int t = intern(e.target, tau);
            edges[i][c] = Out{t, Substitution(std::move(im))};
        }
    }

    std::vector<std::string> names;
    for (const auto& [q, rho] : states) {
        std::string p;
        for (VarId x = 0; x < n; ++x)
            if (rho[x] != x) p += (p.empty() ? "" : ",") + regs[x] + ">" + regs[rho[x]];
        names.push_back(a.states[q] + "@" + (p.empty() ? "id" : p));
    }

    Cra r(a.sr, a.alphabet, names, regs);
    r.start = 0;
    r.init = init;
    for (std::size_t i = 0; i < states.size(); ++i) {
        const auto& [q, rho] = states[i];
        r.output[i] = rename(rename(a.output[q], rank), [&](VarId x) { return rho[x]; });
        for (std::size_t c = 0; c < k; ++c)
            if (edges[i][c]) r.edge(static_cast<int>(i), static_cast<int>(c)) = {edges[i][c]->target, edges[i][c]->update};
    }
    return r;
}

Cra normalize(const Cra& a) { return normalize(a, RegisterOrder::natural(a.num_registers())); }

std::vector<VarId> stable_registers(const Cra& a) {
    if (!validate(a).normal_form) throw Error(ErrorKind::Precondition, "automaton is not in normal form");
    std::vector<char> stable(a.num_registers(), 1);
    for (int q : accessible(a))
        for (std::size_t c = 0; c < a.alphabet.size(); ++c) {
            const auto& e = a.edge(q, static_cast<int>(c));
            if (e.target < 0) continue;
            for (VarId x = 0; x < a.num_registers(); ++x)
                if (!occurs(e.update[x], x)) stable[x] = 0;
        }
    std::vector<VarId> out;
    for (VarId x = 0; x < a.num_registers(); ++x)
        if (stable[x]) out.push_back(x);
    return out;
}

namespace {

// Shortest word from q to p reading every letter at least once.
std::string all_letters_path(const Cra& a, int q, int p) {
    const std::size_t k = a.alphabet.size();
    if (k > 20) throw Error(ErrorKind::Limit, "alphabet too large for covering-path search");
    const std::uint32_t full = (std::uint32_t(1) << k) - 1;
    auto key = [&](int s, std::uint32_t m) { return static_cast<std::size_t>(s) * (full + 1) + m; };
    std::vector<std::int64_t> prev(a.num_states() * (full + 1), -2);
    std::vector<char> via(prev.size(), 0);
    std::deque<std::pair<int, std::uint32_t>> queue{{q, 0}};
    prev[key(q, 0)] = -1;
    while (!queue.empty()) {
        auto [s, m] = queue.front();
        queue.pop_front();
        if (s == p && m == full) {
            std::string w;
            for (std::size_t cur = key(s, m); prev[cur] >= 0; cur = static_cast<std::size_t>(prev[cur]))
                w.push_back(via[cur]);
            std::reverse(w.begin(), w.end());
            return w;
        }
        for (std::size_t c = 0; c < k; ++c) {
            int t = a.edge(s, static_cast<int>(c)).target;
            if (t < 0) continue;
            std::uint32_t m2 = m | (std::uint32_t(1) << c);
            std::size_t nk = key(t, m2);
            if (prev[nk] != -2) continue;
            prev[nk] = static_cast<std::int64_t>(key(s, m));
            via[nk] = a.alphabet[c];
            queue.push_back({t, m2});
        }
    }
    throw Error(ErrorKind::Precondition, "no word from " + a.states[q] + " to " + a.states[p] + " covers the alphabet");
}

}  // namespace

CollapseWord collapse_word(const Cra& a, int q, int p) {
    std::vector<VarId> stable = stable_registers(a);
    auto comps = sccs(a);
    if (comps.size() != 1) {
        std::string names;
        for (int s : comps.front()) names += (names.empty() ? "" : ",") + a.states[s];
        throw Error(ErrorKind::Precondition, "automaton is not strongly connected (component {" + names + "})");
    }
    const std::size_t n = a.num_registers();

    // For each non-stable register, the first letter transition on which it is non-stable.
    std::vector<std::optional<std::pair<int, int>>> witness(n);
    for (VarId x = 0; x < n; ++x) {
        if (std::binary_search(stable.begin(), stable.end(), x)) continue;
        for (int s = 0; s < static_cast<int>(a.num_states()) && !witness[x]; ++s)
            for (int c = 0; c < static_cast<int>(a.alphabet.size()); ++c)
                if (a.edge(s, c).target >= 0 && !occurs(a.edge(s, c).update[x], x)) {
                    witness[x] = std::make_pair(s, c);
                    break;
                }
    }

    // build(i, from, to) is the word handling all non-stable registers >= i.
    std::map<std::pair<std::size_t, std::pair<int, int>>, std::string> memo;
    std::function<std::string(std::size_t, int, int)> build = [&](std::size_t i, int from, int to) -> std::string {
        auto key = std::make_pair(i, std::make_pair(from, to));
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        std::string w;
        if (i == n) {
            w = all_letters_path(a, from, to);
        } else if (!witness[i]) {
            w = build(i + 1, from, to);
        } else {
            auto [s, c] = *witness[i];
            int s2 = a.edge(s, c).target;
            w = build(i + 1, from, from) + *shortest_word(a, from, s) + a.alphabet[c] + *shortest_word(a, s2, to);
        }
        memo[key] = w;
        return w;
    };

    CollapseWord out;
    out.word = build(0, q, p);
    auto [target, update] = delta_star(a, q, out.word);
    out.update = std::move(update);
    if (target != p || !is_collapse(out.update, stable))
        throw Error(ErrorKind::Precondition, "collapse word construction failed", out.word);
    return out;
}

unsigned collapse_power(const Substitution& s, std::span<const VarId> stable) {
    std::size_t bound = std::max<std::size_t>(s.size(), 1);
    Substitution p = s;
    for (unsigned n = 1; n <= bound; ++n) {
        if (is_collapse(p, stable)) return n;
        p = compose(p, s);
    }
    throw Error(ErrorKind::Precondition, "no power up to |X| is collapse; substitution not in normal form?");
}

Expr iterated_closed_form(const Substitution& s, VarId x, unsigned i, Semiring sr, std::span<const VarId> stable) {
    if (x >= s.size() || !occurs(s[x], x)) throw Error(ErrorKind::Precondition, "register is not stable on the substitution");
    if (!is_collapse(s, stable)) throw Error(ErrorKind::Precondition, "substitution is not collapse");
    std::vector<Value> ground(s.size(), sr.zero());
    for (VarId y : vars(s[x])) {
        if (y == x) continue;
        if (!is_ground(s[y])) throw Error(ErrorKind::Precondition, "register " + default_name(y) + " is not collapsed");
        ground[y] = evaluate(s[y], sr, {});
    }
    Expr e = substitute(s[x], [&](VarId y) { return y == x ? Expr::var(x) : Expr::constant(ground[y]); });
    auto [c, d] = affine_form(e, x, sr);
    if (sr.is_zero(c)) throw Error(ErrorKind::Precondition, "loop coefficient is 0");

    Value geo = sr.zero();
    for (unsigned j = 0; j < i; ++j) geo = sr.add(geo, sr.pow(c, j));
    Expr r = Expr::add({Expr::mul({Expr::constant(sr.pow(c, i)), s[x]}), Expr::constant(sr.mul(d, geo))});
    return reduce_zeros(r, sr);
}

}  // namespace cra
