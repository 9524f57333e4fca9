#include "cra/automaton.hpp"

#include <algorithm>
#include <deque>

#include "cra/error.hpp"

namespace cra {

int letter_index(std::string_view alphabet, char c) {
    auto pos = alphabet.find(c);
    if (pos == std::string_view::npos)
        throw Error(ErrorKind::Alphabet, std::string("letter '") + c + "' is not in the alphabet");
    return static_cast<int>(pos);
}

void for_each_word(std::string_view alphabet, unsigned max_len, const std::function<void(const std::string&)>& f) {
    std::string w;
    f(w);
    for (unsigned len = 1; len <= max_len; ++len) {
        std::vector<std::size_t> idx(len, 0);
        w.assign(len, alphabet.empty() ? '\0' : alphabet[0]);
        if (alphabet.empty()) return;
        while (true) {
            f(w);
            std::size_t i = len;
            while (i > 0 && idx[i - 1] + 1 == alphabet.size()) {
                idx[i - 1] = 0;
                w[i - 1] = alphabet[0];
                --i;
            }
            if (i == 0) break;
            w[i - 1] = alphabet[++idx[i - 1]];
        }
    }
}

Cra::Cra(Semiring s, std::string alpha, std::vector<std::string> sts, std::vector<std::string> regs)
    : sr(s), alphabet(std::move(alpha)), states(std::move(sts)), registers(std::move(regs)) {
    delta.resize(states.size() * alphabet.size());
    init.assign(registers.size(), sr.zero());
    output.assign(states.size(), Expr::constant(sr.zero()));
}

int Cra::state_index(std::string_view name) const {
    for (std::size_t i = 0; i < states.size(); ++i)
        if (states[i] == name) return static_cast<int>(i);
    throw Error(ErrorKind::Semantic, "unknown state '" + std::string(name) + "'");
}

VarId Cra::register_index(std::string_view name) const {
    for (std::size_t i = 0; i < registers.size(); ++i)
        if (registers[i] == name) return static_cast<VarId>(i);
    throw Error(ErrorKind::Semantic, "unknown register '" + std::string(name) + "'");
}

NameFn Cra::names() const {
    return [regs = registers](VarId x) { return x < regs.size() ? regs[x] : default_name(x); };
}

static const Cra::Edge& step(const Cra& a, int q, char c, std::string_view w) {
    const auto& e = a.edge(q, a.letter(c));
    if (e.target < 0)
        throw Error(ErrorKind::StuckRun, "no transition from " + a.states[q] + " on '" + std::string(1, c) + "'",
                    std::string(w));
    return e;
}

Value eval(const Cra& a, std::string_view w) {
    std::vector<Value> val = a.init;
    int q = a.start;
    for (char c : w) {
        const auto& e = step(a, q, c, w);
        val = evaluate(e.update, a.sr, val);
        q = e.target;
    }
    return evaluate(a.output[q], a.sr, val);
}

std::pair<int, Substitution> delta_star(const Cra& a, int q, std::string_view w) {
    Substitution s = Substitution::identity(a.num_registers());
    for (char c : w) {
        const auto& e = step(a, q, c, w);
        s = compose(s, e.update);
        q = e.target;
    }
    return {q, s};
}

Expr ground_output_expr(const Cra& a, std::string_view w) {
    auto [q, s] = delta_star(a, a.start, w);
    Substitution g = compose(Substitution::constants(a.init), s);
    return apply(g, a.output[q]);
}

ValidationReport validate(const Cra& a) {
    ValidationReport r;
    RegisterOrder order = RegisterOrder::natural(a.num_registers());
    auto names = a.names();
    for (std::size_t q = 0; q < a.num_states(); ++q) {
        if (!is_copyless(a.output[q])) {
            r.copyless = false;
            r.problems.push_back("output of " + a.states[q] + " is not copyless");
        }
        for (std::size_t i = 0; i < a.alphabet.size(); ++i) {
            const auto& e = a.edge(static_cast<int>(q), static_cast<int>(i));
            std::string where = a.states[q] + " --" + a.alphabet[i] + "-->";
            if (e.target < 0) {
                r.total = false;
                r.problems.push_back("missing transition " + where);
                continue;
            }
            if (!is_copyless(e.update)) {
                r.copyless = false;
                r.problems.push_back("update on " + where + " is not copyless");
            }
            if (!is_normal_form(e.update, order)) {
                r.normal_form = false;
                r.problems.push_back("update on " + where + " is not in normal form");
            }
        }
    }
    return r;
}

std::vector<int> accessible(const Cra& a) {
    std::vector<char> seen(a.num_states(), 0);
    std::vector<int> order{a.start};
    seen[a.start] = 1;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t c = 0; c < a.alphabet.size(); ++c) {
            int t = a.edge(order[i], static_cast<int>(c)).target;
            if (t >= 0 && !seen[t]) {
                seen[t] = 1;
                order.push_back(t);
            }
        }
    std::sort(order.begin(), order.end());
    return order;
}

std::vector<std::vector<int>> sccs(const Cra& a) {
    // Tarjan, iterative.
    int n = static_cast<int>(a.num_states());
    int k = static_cast<int>(a.alphabet.size());
    std::vector<int> index(n, -1), low(n, 0), stack;
    std::vector<char> on(n, 0);
    std::vector<std::vector<int>> out;
    int counter = 0;
    for (int root = 0; root < n; ++root) {
        if (index[root] >= 0) continue;
        std::vector<std::pair<int, int>> call{{root, 0}};
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on[root] = 1;
        while (!call.empty()) {
            auto& [v, i] = call.back();
            if (i < k) {
                int t = a.edge(v, i++).target;
                if (t < 0) continue;
                if (index[t] < 0) {
                    index[t] = low[t] = counter++;
                    stack.push_back(t);
                    on[t] = 1;
                    call.push_back({t, 0});
                } else if (on[t]) {
                    low[v] = std::min(low[v], index[t]);
                }
                continue;
            }
            if (low[v] == index[v]) {
                std::vector<int> comp;
                int w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on[w] = 0;
                    comp.push_back(w);
                } while (w != v);
                std::sort(comp.begin(), comp.end());
                out.push_back(std::move(comp));
            }
            int done = v;
            call.pop_back();
            if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<int>> bottom_sccs(const Cra& a) {
    std::vector<std::vector<int>> out;
    for (auto& comp : sccs(a)) {
        bool bottom = true;
        for (int q : comp)
            for (std::size_t c = 0; c < a.alphabet.size(); ++c) {
                int t = a.edge(q, static_cast<int>(c)).target;
                if (t >= 0 && !std::binary_search(comp.begin(), comp.end(), t)) bottom = false;
            }
        if (bottom) out.push_back(comp);
    }
    return out;
}

bool is_strongly_connected(const Cra& a) { return sccs(a).size() == 1; }

std::optional<std::string> shortest_word(const Cra& a, int q, int p) {
    std::vector<int> prev(a.num_states(), -2);
    std::vector<char> via(a.num_states(), 0);
    std::deque<int> queue{q};
    prev[q] = -1;
    while (!queue.empty()) {
        int s = queue.front();
        queue.pop_front();
        if (s == p) break;
        for (std::size_t c = 0; c < a.alphabet.size(); ++c) {
            int t = a.edge(s, static_cast<int>(c)).target;
            if (t >= 0 && prev[t] == -2) {
                prev[t] = s;
                via[t] = a.alphabet[c];
                queue.push_back(t);
            }
        }
    }
    if (prev[p] == -2) return std::nullopt;
    std::string w;
    for (int s = p; s != q; s = prev[s]) w.push_back(via[s]);
    std::reverse(w.begin(), w.end());
    return w;
}

Cra trim(const Cra& a) {
    std::vector<int> keep = accessible(a);
    std::vector<int> remap(a.num_states(), -1);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < keep.size(); ++i) {
        remap[keep[i]] = static_cast<int>(i);
        names.push_back(a.states[keep[i]]);
    }
    Cra r(a.sr, a.alphabet, names, a.registers);
    r.start = remap[a.start];
    r.init = a.init;
    for (std::size_t i = 0; i < keep.size(); ++i) {
        r.output[i] = a.output[keep[i]];
        for (std::size_t c = 0; c < a.alphabet.size(); ++c) {
            const auto& e = a.edge(keep[i], static_cast<int>(c));
            if (e.target >= 0) r.edge(static_cast<int>(i), static_cast<int>(c)) = {remap[e.target], e.update};
        }
    }
    return r;
}

unsigned max_alternation(const Cra& a, unsigned max_len) {
    unsigned best = 0;
    std::function<void(int, const Substitution&, unsigned)> dfs = [&](int q, const Substitution& g, unsigned len) {
        best = std::max(best, alternation(apply(g, a.output[q])));
        if (len == max_len) return;
        for (std::size_t c = 0; c < a.alphabet.size(); ++c) {
            const auto& e = a.edge(q, static_cast<int>(c));
            if (e.target < 0) continue;
            dfs(e.target, compose(g, e.update), len + 1);
        }
    };
    dfs(a.start, Substitution::constants(a.init), 0);
    return best;
}

}  // namespace cra
