#include "cra/lookahead.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>

#include "cra/error.hpp"

namespace cra {

bool Dfa::accepts(std::string_view alphabet, std::string_view w) const {
    int p = start;
    for (char c : w) p = next(alphabet, p, c);
    return final[p];
}

static NameFn names_of(const std::vector<std::string>& regs) {
    return [regs](VarId x) { return x < regs.size() ? regs[x] : "y" + std::to_string(x - regs.size()); };
}

NameFn CraRla::names() const { return names_of(registers); }
NameFn UCra::names() const { return names_of(registers); }

std::optional<Overlap> find_overlap(const CraRla& r) {
    const std::size_t k = r.alphabet.size();
    for (std::size_t i = 0; i < r.edges.size(); ++i)
        for (std::size_t j = i + 1; j < r.edges.size(); ++j) {
            if (r.edges[i].from != r.edges[j].from) continue;
            const Dfa& d1 = r.langs[r.edges[i].lang];
            const Dfa& d2 = r.langs[r.edges[j].lang];
            // BFS over the product, looking for a non-empty common word.
            std::map<std::pair<int, int>, std::string> seen;
            std::deque<std::pair<int, int>> queue;
            for (std::size_t c = 0; c < k; ++c) {
                std::pair<int, int> s{d1.delta[d1.start * k + c], d2.delta[d2.start * k + c]};
                if (seen.emplace(s, std::string(1, r.alphabet[c])).second) queue.push_back(s);
            }
            while (!queue.empty()) {
                auto s = queue.front();
                queue.pop_front();
                const std::string w = seen[s];
                if (d1.final[s.first] && d2.final[s.second]) return Overlap{i, j, w};
                for (std::size_t c = 0; c < k; ++c) {
                    std::pair<int, int> t{d1.delta[s.first * k + c], d2.delta[s.second * k + c]};
                    if (seen.emplace(t, w + r.alphabet[c]).second) queue.push_back(t);
                }
            }
        }
    return std::nullopt;
}

void check_disjointness(const CraRla& r) {
    if (auto o = find_overlap(r)) {
        const auto& e1 = r.edges[o->first];
        const auto& e2 = r.edges[o->second];
        throw Error(ErrorKind::Disjointness,
                    "lookaheads " + r.langs[e1.lang].name + " and " + r.langs[e2.lang].name + " leaving " +
                        r.states[e1.from] + " both accept \"" + o->word + "\"",
                    o->word);
    }
}

Value rla_eval(const CraRla& r, std::string_view w) {
    std::vector<Value> val = r.init;
    int q = r.start;
    for (std::size_t i = 0; i < w.size(); ++i) {
        letter_index(r.alphabet, w[i]);
        std::string_view suffix = w.substr(i);
        const CraRla::Edge* chosen = nullptr;
        for (const auto& e : r.edges) {
            if (e.from != q || !r.langs[e.lang].accepts(r.alphabet, suffix)) continue;
            if (chosen)
                throw Error(ErrorKind::Disjointness, "two lookaheads match at position " + std::to_string(i), std::string(w));
            chosen = &e;
        }
        if (!chosen)
            throw Error(ErrorKind::StuckRun, "no lookahead matches at position " + std::to_string(i), std::string(w));
        val = evaluate(chosen->update, r.sr, val);
        q = chosen->to;
    }
    return evaluate(r.output[q], r.sr, val);
}

std::vector<std::vector<const UCra::Edge*>> UCra::by_source_letter() const {
    std::vector<std::vector<const Edge*>> out(states.size() * alphabet.size());
    for (const auto& e : edges) out[e.from * alphabet.size() + e.letter].push_back(&e);
    return out;
}

std::vector<Config> ucra_configurations(const UCra& u, std::string_view w) {
    auto index = u.by_source_letter();
    std::vector<Config> cur{{u.start, u.init}};
    for (char c : w) {
        int a = letter_index(u.alphabet, c);
        std::vector<Config> next;
        for (const auto& cfg : cur)
            for (const auto* e : index[cfg.state * u.alphabet.size() + a])
                next.push_back({e->to, evaluate(e->update, u.sr, cfg.values)});
        cur = std::move(next);
    }
    return cur;
}

std::size_t ucra_accepting_runs(const UCra& u, std::string_view w) {
    auto index = u.by_source_letter();
    std::vector<std::size_t> cur(u.states.size(), 0);
    cur[u.start] = 1;
    for (char c : w) {
        int a = letter_index(u.alphabet, c);
        std::vector<std::size_t> next(u.states.size(), 0);
        for (std::size_t q = 0; q < cur.size(); ++q)
            if (cur[q])
                for (const auto* e : index[q * u.alphabet.size() + a]) next[e->to] += cur[q];
        cur = std::move(next);
    }
    std::size_t total = 0;
    for (std::size_t q = 0; q < cur.size(); ++q)
        if (u.final[q]) total += cur[q];
    return total;
}

Value ucra_eval(const UCra& u, std::string_view w) {
    std::optional<Value> out;
    for (const auto& cfg : ucra_configurations(u, w)) {
        if (!u.final[cfg.state]) continue;
        if (out) throw Error(ErrorKind::Ambiguity, "word has two accepting runs", std::string(w));
        out = evaluate(u.output[cfg.state], u.sr, cfg.values);
    }
    if (!out) throw Error(ErrorKind::AcceptanceCount, "word has no accepting run", std::string(w));
    return *out;
}

unsigned ucra_max_alternation(const UCra& u, unsigned max_len) {
    auto index = u.by_source_letter();
    unsigned best = 0;
    std::function<void(int, const Substitution&, unsigned)> dfs = [&](int q, const Substitution& g, unsigned len) {
        if (u.final[q]) best = std::max(best, alternation(apply(g, u.output[q])));
        if (len == max_len) return;
        for (std::size_t a = 0; a < u.alphabet.size(); ++a)
            for (const auto* e : index[q * u.alphabet.size() + a]) dfs(e->to, compose(g, e->update), len + 1);
    };
    dfs(u.start, Substitution::constants(u.init), 0);
    return best;
}

UCra trim(const UCra& u) {
    const std::size_t n = u.states.size();
    std::vector<char> fwd(n, 0), bwd(n, 0);
    std::vector<int> stack{u.start};
    fwd[u.start] = 1;
    while (!stack.empty()) {
        int q = stack.back();
        stack.pop_back();
        for (const auto& e : u.edges)
            if (e.from == q && !fwd[e.to]) {
                fwd[e.to] = 1;
                stack.push_back(e.to);
            }
    }
    for (std::size_t q = 0; q < n; ++q)
        if (u.final[q]) {
            bwd[q] = 1;
            stack.push_back(static_cast<int>(q));
        }
    while (!stack.empty()) {
        int q = stack.back();
        stack.pop_back();
        for (const auto& e : u.edges)
            if (e.to == q && !bwd[e.from]) {
                bwd[e.from] = 1;
                stack.push_back(e.from);
            }
    }
    std::vector<int> remap(n, -1);
    UCra r;
    r.sr = u.sr;
    r.alphabet = u.alphabet;
    r.registers = u.registers;
    r.init = u.init;
    r.alt_bound = u.alt_bound;
    for (std::size_t q = 0; q < n; ++q)
        if ((fwd[q] && bwd[q]) || static_cast<int>(q) == u.start) {
            remap[q] = static_cast<int>(r.states.size());
            r.states.push_back(u.states[q]);
            r.final.push_back(u.final[q]);
            r.output.push_back(u.output[q]);
        }
    r.start = remap[u.start];
    for (const auto& e : u.edges)
        if (remap[e.from] >= 0 && remap[e.to] >= 0 && bwd[e.to]) r.edges.push_back({remap[e.from], e.letter, remap[e.to], e.update});
    return r;
}

UCra drop_dead_registers(const UCra& u) {
    const std::size_t n = u.registers.size();
    std::vector<std::vector<char>> live(u.states.size(), std::vector<char>(n, 0));
    for (std::size_t q = 0; q < u.states.size(); ++q)
        if (u.final[q])
            for (VarId x : vars(u.output[q])) live[q][x] = 1;
    for (bool changed = true; changed;) {
        changed = false;
        for (const auto& e : u.edges)
            for (VarId z = 0; z < n; ++z)
                if (live[e.to][z])
                    for (VarId x : vars(e.update[z]))
                        if (!live[e.from][x]) live[e.from][x] = changed = true;
    }
    UCra r = u;
    for (auto& e : r.edges) {
        std::vector<Expr> im = e.update.images();
        for (VarId z = 0; z < n; ++z)
            if (!live[e.to][z]) im[z] = Expr::constant(u.sr.zero());
        e.update = Substitution(std::move(im));
    }
    return r;
}

UCra to_unambiguous(const CraRla& r) {
    check_disjointness(r);
    const std::size_t k = r.alphabet.size();
    std::vector<int> offset;
    std::vector<std::pair<int, int>> owner;  // global DFA state -> (lang, local state)
    for (std::size_t i = 0; i < r.langs.size(); ++i) {
        offset.push_back(static_cast<int>(owner.size()));
        for (std::size_t p = 0; p < r.langs[i].states.size(); ++p) owner.push_back({static_cast<int>(i), static_cast<int>(p)});
    }

    using Key = std::pair<int, std::vector<int>>;
    std::map<Key, int> ids;
    std::vector<Key> states;
    auto intern = [&](Key key) {
        auto [it, fresh] = ids.emplace(key, static_cast<int>(states.size()));
        if (fresh) states.push_back(std::move(key));
        return it->second;
    };

    UCra u;
    u.sr = r.sr;
    u.alphabet = r.alphabet;
    u.registers = r.registers;
    u.init = r.init;
    u.alt_bound = r.alt_bound;
    u.start = intern({r.start, {}});
    for (std::size_t i = 0; i < states.size(); ++i) {
        const Key cur = states[i];
        for (std::size_t a = 0; a < k; ++a)
            for (const auto& e : r.edges) {
                if (e.from != cur.first) continue;
                std::set<int> next;
                auto advance = [&](int g) {
                    auto [lang, p] = owner[g];
                    next.insert(offset[lang] + r.langs[lang].delta[p * k + a]);
                };
                for (int g : cur.second) advance(g);
                advance(offset[e.lang] + r.langs[e.lang].start);
                int t = intern({e.to, std::vector<int>(next.begin(), next.end())});
                u.edges.push_back({static_cast<int>(i), static_cast<int>(a), t, e.update});
            }
    }
    for (const auto& [q, set] : states) {
        std::string name = r.states[q] + "@{";
        bool accept = true;
        for (std::size_t j = 0; j < set.size(); ++j) {
            auto [lang, p] = owner[set[j]];
            if (j) name += ',';
            name += r.langs[lang].name + "." + r.langs[lang].states[p];
            accept = accept && r.langs[lang].final[p];
        }
        u.states.push_back(name + "}");
        u.final.push_back(accept);
        u.output.push_back(r.output[q]);
    }
    return trim(u);
}

}  // namespace cra
