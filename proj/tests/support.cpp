#include "support.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "cra/error.hpp"

namespace testing {

using cra::ExprKind;

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

std::vector<std::string> split_blocks(std::string_view w) {
    std::vector<std::string> blocks{""};
    for (char c : w) {
        if (c == '#') blocks.emplace_back();
        else blocks.back() += c;
    }
    return blocks;
}

std::int64_t count(const std::string& s, char c) { return std::count(s.begin(), s.end(), c); }

Expr build(Rng& rng, std::vector<VarId> pool, Semiring sr, const GenOptions& opt, int depth) {
    if (pool.empty()) {
        if (depth == 0 || coin(rng, 0.6)) return Expr::constant(random_const(rng, sr, opt));
    } else if (pool.size() == 1 && (depth == 0 || coin(rng, 0.4))) {
        return Expr::var(pool.front());
    }
    if (depth == 0) {
        std::vector<Expr> kids;
        for (VarId v : pool) kids.push_back(Expr::var(v));
        if (kids.size() == 1) kids.push_back(Expr::constant(random_const(rng, sr, opt)));
        return coin(rng) ? Expr::add(std::move(kids)) : Expr::mul(std::move(kids));
    }
    int arity = uniform(rng, 2, 3);
    std::vector<std::vector<VarId>> parts(arity);
    for (VarId v : pool) parts[uniform(rng, 0, arity - 1)].push_back(v);
    std::vector<Expr> kids;
    for (auto& p : parts) kids.push_back(build(rng, std::move(p), sr, opt, depth - 1));
    return coin(rng) ? Expr::add(std::move(kids)) : Expr::mul(std::move(kids));
}

}  // namespace

Value random_const(Rng& rng, Semiring sr, const GenOptions& opt) {
    if (opt.allow_zero && coin(rng, 0.2)) return sr.zero();
    int lo = sr.kind() == cra::SemiringKind::Nat ? 1 : 0;
    return Value(uniform(rng, lo, std::max(lo, opt.max_const)));
}

Expr random_copyless(Rng& rng, std::vector<VarId> pool, Semiring sr, const GenOptions& opt, bool use_all) {
    std::shuffle(pool.begin(), pool.end(), rng);
    if (!use_all) {
        std::vector<VarId> kept;
        for (VarId v : pool)
            if (coin(rng, 0.7)) kept.push_back(v);
        pool = std::move(kept);
    }
    return build(rng, std::move(pool), sr, opt, uniform(rng, 0, opt.max_depth));
}

Substitution random_substitution(Rng& rng, std::size_t n, Semiring sr, bool normal_form, const GenOptions& opt) {
    // Every register goes to at most one image; in normal form only to images of registers below it.
    std::vector<std::vector<VarId>> owned(n);
    for (VarId y = 0; y < n; ++y) {
        int hi = normal_form ? static_cast<int>(y) : static_cast<int>(n) - 1;
        if (coin(rng, 0.85)) owned[uniform(rng, 0, hi)].push_back(y);
    }
    std::vector<Expr> im;
    for (VarId x = 0; x < n; ++x) im.push_back(random_copyless(rng, owned[x], sr, opt, true));
    return Substitution(std::move(im));
}

cra::Cra random_cra(Rng& rng, Semiring sr, int max_states, int max_regs, const GenOptions& opt, bool nonzero_outputs) {
    int ns = uniform(rng, 1, max_states), nr = uniform(rng, 1, max_regs);
    std::vector<std::string> states, regs;
    for (int i = 0; i < ns; ++i) states.push_back("q" + std::to_string(i));
    for (int i = 0; i < nr; ++i) regs.push_back(std::string(1, "xyz"[i]));
    cra::Cra a(sr, "ab", states, regs);
    for (int q = 0; q < ns; ++q)
        for (char c : std::string("ab")) a.set(q, c, uniform(rng, 0, ns - 1), random_substitution(rng, nr, sr, false, opt));
    for (int i = 0; i < nr; ++i) a.init[i] = random_const(rng, sr, opt);
    std::vector<VarId> all(nr);
    std::iota(all.begin(), all.end(), 0);
    for (int q = 0; q < ns; ++q) {
        Expr out = random_copyless(rng, all, sr, opt);
        a.output[q] = nonzero_outputs ? Expr::add({out, Expr::constant(sr.one())}) : out;
    }
    return a;
}

cra::CraRla random_rla(Rng& rng, int max_states, int max_regs) {
    Semiring sr(cra::SemiringKind::MaxPlus);
    GenOptions opt;
    cra::CraRla r;
    r.sr = sr;
    r.alphabet = "ab";
    int ns = uniform(rng, 1, max_states), nr = uniform(rng, 1, max_regs);
    for (int i = 0; i < ns; ++i) r.states.push_back("q" + std::to_string(i));
    for (int i = 0; i < nr; ++i) r.registers.push_back(std::string(1, "xyz"[i]));
    std::vector<VarId> all(nr);
    std::iota(all.begin(), all.end(), 0);
    for (int q = 0; q < ns; ++q) {
        // One random classifier DFA per state; its final-state groups are the guards.
        int k = uniform(rng, 1, 3);
        cra::Dfa d;
        for (int p = 0; p < k; ++p) d.states.push_back("s" + std::to_string(p));
        for (int i = 0; i < 2 * k; ++i) d.delta.push_back(uniform(rng, 0, k - 1));
        d.start = 0;
        int groups = uniform(rng, 1, k);
        std::vector<int> group(k);
        for (int p = 0; p < k; ++p) group[p] = p < groups ? p : uniform(rng, 0, groups - 1);
        for (int g = 0; g < groups; ++g) {
            cra::Dfa lang = d;
            lang.name = "L" + std::to_string(q) + "_" + std::to_string(g);
            lang.final.assign(k, 0);
            for (int p = 0; p < k; ++p) lang.final[p] = group[p] == g;
            r.langs.push_back(std::move(lang));
            r.edges.push_back({q, static_cast<int>(r.langs.size()) - 1, uniform(rng, 0, ns - 1),
                               random_substitution(rng, nr, sr, false, opt)});
        }
        r.output.push_back(random_copyless(rng, all, sr, opt));
    }
    for (int i = 0; i < nr; ++i) r.init.push_back(random_const(rng, sr, opt));
    return r;
}

std::vector<Value> random_valuation(Rng& rng, std::size_t n, Semiring sr, std::int64_t max_value, bool allow_zero) {
    std::vector<Value> v;
    for (std::size_t i = 0; i < n; ++i) {
        if (allow_zero && coin(rng, 0.1)) v.push_back(sr.zero());
        else v.push_back(Value(std::uniform_int_distribution<std::int64_t>(0, max_value)(rng)));
    }
    return v;
}

std::int64_t longest_b_block(std::string_view w) {
    std::int64_t best = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i; j < w.size() && w[j] == 'b'; ++j) best = std::max<std::int64_t>(best, j - i + 1);
    return best;
}

std::int64_t sum_block_max(std::string_view w) {
    std::int64_t total = 0;
    for (const auto& b : split_blocks(w)) total += std::max(count(b, 'a'), count(b, 'b'));
    return total;
}

std::int64_t f_b(std::string_view w) {
    auto blocks = split_blocks(w);
    std::int64_t all_a = 0;
    for (const auto& b : blocks) all_a += count(b, 'a');
    std::int64_t best = all_a;
    for (std::size_t j = 0; j < blocks.size(); ++j) {
        std::int64_t v = count(blocks[j], 'b');
        for (std::size_t i = j + 1; i < blocks.size(); ++i) v += count(blocks[i], 'a');
        best = std::max(best, v);
    }
    return best;
}

std::int64_t f_b_rev(std::string_view w) {
    auto blocks = split_blocks(w);
    std::int64_t all_a = 0;
    for (const auto& b : blocks) all_a += count(b, 'a');
    std::int64_t best = all_a;
    for (std::size_t j = 0; j < blocks.size(); ++j) {
        std::int64_t v = count(blocks[j], 'b');
        for (std::size_t i = 0; i < j; ++i) v += count(blocks[i], 'a');
        best = std::max(best, v);
    }
    return best;
}

std::string reversed(std::string_view w) { return std::string(w.rbegin(), w.rend()); }

Expr px(std::string_view text, Semiring sr) {
    return cra::parse_expr(text, sr, [](std::string_view name) -> VarId {
        static const std::string names = "xyzuvw";
        auto i = names.find(name);
        if (name.size() != 1 || i == std::string::npos) throw cra::Error(cra::ErrorKind::Semantic, "unknown variable");
        return static_cast<VarId>(i);
    });
}

bool same_values(const Expr& a, const Expr& b, Semiring sr, std::size_t n, int n_samples, std::uint64_t seed) {
    Rng rng(seed);
    std::int64_t max_value = sr.kind() == cra::SemiringKind::Nat ? 9 : 1000000;
    for (int i = 0; i < n_samples; ++i) {
        auto v = random_valuation(rng, n, sr, max_value, true);
        if (!(cra::evaluate(a, sr, v) == cra::evaluate(b, sr, v))) return false;
    }
    return true;
}

}  // namespace testing

namespace testing {

namespace {

// live[q][x]: some path from q to an output reads x
std::vector<std::vector<bool>> live_registers(const cra::UCra& u) {
    const std::size_t n = u.registers.size();
    std::vector<std::vector<bool>> live(u.states.size(), std::vector<bool>(n, false));
    for (std::size_t q = 0; q < u.states.size(); ++q)
        for (VarId x = 0; x < n; ++x) live[q][x] = u.final[q] && cra::occurs(u.output[q], x);
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& e : u.edges)
            for (VarId z = 0; z < n; ++z)
                for (VarId x = 0; x < n; ++x)
                    if (live[e.to][z] && !live[e.from][x] && cra::occurs(e.update[z], x)) {
                        live[e.from][x] = true;
                        changed = true;
                    }
    }
    return live;
}

}  // namespace

// Registers that never reach an output are not compared: their content does not matter.
std::string check_determinization(const cra::UCra& input, unsigned len) {
    const cra::UCra u = cra::trim(input);
    const std::size_t n = u.registers.size();
    const auto live = live_registers(u);
    cra::DetResult d = cra::determinize(u);
    if (d.cra.num_registers() > d.register_budget) return "register budget exceeded";
    for (std::size_t s = 0; s < d.trees.size(); ++s) {
        auto problems = cra::check_invariants(d.trees[s], u, d.register_budget);
        if (!problems.empty()) return "tree state t" + std::to_string(s) + ": " + problems.front();
    }
    std::string failure;
    cra::for_each_word(u.alphabet, len, [&](const std::string& w) {
        if (!failure.empty()) return;
        auto [s, sub] = cra::delta_star(d.cra, d.cra.start, w);
        std::vector<Value> val(n, u.sr.zero());
        for (Value v : cra::evaluate(sub, u.sr, d.cra.init)) val.push_back(v);
        const cra::DetState& t = d.trees[s];
        auto configs = cra::ucra_configurations(u, w);
        auto leaves = t.leaves();
        if (configs.size() != leaves.size()) {
            failure = "\"" + w + "\": " + std::to_string(configs.size()) + " runs but " + std::to_string(leaves.size()) + " leaves";
            return;
        }
        for (const auto& c : configs) {
            auto it = std::find_if(leaves.begin(), leaves.end(), [&](int l) { return t.nodes[l].state == c.state; });
            if (it == leaves.end()) {
                failure = "\"" + w + "\": no leaf for state " + u.states[c.state];
                return;
            }
            Substitution branch = cra::tree_collapse(t, *it);
            for (VarId x = 0; x < n; ++x)
                if (live[c.state][x] && !(cra::evaluate(branch[x], u.sr, val) == c.values[x])) {
                    failure = "\"" + w + "\": register " + u.registers[x] + " differs in state " + u.states[c.state];
                    return;
                }
        }
    });
    return failure;
}

}  // namespace testing
