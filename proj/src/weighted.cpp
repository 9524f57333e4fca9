#include "cra/weighted.hpp"

#include <algorithm>
#include <functional>

#include "cra/automaton.hpp"
#include "cra/error.hpp"

namespace cra {

WeightedAutomaton::WeightedAutomaton(Semiring s, std::string alpha, std::vector<std::string> sts)
    : sr(s), alphabet(std::move(alpha)), states(std::move(sts)) {
    initial.assign(states.size(), sr.zero());
    final.assign(states.size(), sr.zero());
    weights.assign(alphabet.size() * states.size() * states.size(), sr.zero());
}

int WeightedAutomaton::state_index(std::string_view name) const {
    for (std::size_t i = 0; i < states.size(); ++i)
        if (states[i] == name) return static_cast<int>(i);
    throw Error(ErrorKind::Semantic, "unknown state '" + std::string(name) + "'");
}

Value wa_eval(const WeightedAutomaton& w, std::string_view word) {
    const Semiring sr = w.sr;
    const int n = static_cast<int>(w.num_states());
    std::vector<Value> vec = w.initial;
    for (char c : word) {
        int a = letter_index(w.alphabet, c);
        std::vector<Value> next(n, sr.zero());
        for (int p = 0; p < n; ++p) {
            if (sr.is_zero(vec[p])) continue;
            for (int q = 0; q < n; ++q) {
                Value t = w.weight(a, p, q);
                if (!sr.is_zero(t)) next[q] = sr.add(next[q], sr.mul(vec[p], t));
            }
        }
        vec = std::move(next);
    }
    Value acc = sr.zero();
    for (int q = 0; q < n; ++q) acc = sr.add(acc, sr.mul(vec[q], w.final[q]));
    return acc;
}

std::vector<Run> enumerate_runs(const WeightedAutomaton& w, std::string_view word, unsigned max_len) {
    if (word.size() > max_len)
        throw Error(ErrorKind::Limit, "run enumeration is limited to words of length " + std::to_string(max_len));
    const Semiring sr = w.sr;
    const int n = static_cast<int>(w.num_states());
    std::vector<int> letters;
    for (char c : word) letters.push_back(letter_index(w.alphabet, c));

    std::vector<Run> out;
    std::vector<int> path;
    std::function<void(int, Value)> dfs = [&](int p, Value acc) {
        if (path.size() == word.size() + 1) {
            if (!sr.is_zero(w.final[p])) out.push_back({path, sr.mul(acc, w.final[p])});
            return;
        }
        int a = letters[path.size() - 1];
        for (int q = 0; q < n; ++q) {
            Value t = w.weight(a, p, q);
            if (sr.is_zero(t)) continue;
            path.push_back(q);
            dfs(q, sr.mul(acc, t));
            path.pop_back();
        }
    };
    for (int p = 0; p < n; ++p) {
        if (sr.is_zero(w.initial[p])) continue;
        path.assign(1, p);
        dfs(p, w.initial[p]);
    }
    return out;
}

namespace {

std::vector<std::size_t> step_counts(const WeightedAutomaton& w, const std::vector<std::size_t>& cur, int a) {
    const int n = static_cast<int>(w.num_states());
    std::vector<std::size_t> next(n, 0);
    for (int p = 0; p < n; ++p) {
        if (!cur[p]) continue;
        for (int q = 0; q < n; ++q)
            if (!w.sr.is_zero(w.weight(a, p, q))) next[q] += cur[p];
    }
    return next;
}

std::size_t accepting(const WeightedAutomaton& w, const std::vector<std::size_t>& cur) {
    std::size_t total = 0;
    for (std::size_t q = 0; q < cur.size(); ++q)
        if (!w.sr.is_zero(w.final[q])) total += cur[q];
    return total;
}

std::vector<std::size_t> start_counts(const WeightedAutomaton& w) {
    std::vector<std::size_t> cur(w.num_states(), 0);
    for (std::size_t p = 0; p < cur.size(); ++p) cur[p] = w.sr.is_zero(w.initial[p]) ? 0 : 1;
    return cur;
}

}  // namespace

std::size_t count_runs(const WeightedAutomaton& w, std::string_view word) {
    auto cur = start_counts(w);
    for (char c : word) cur = step_counts(w, cur, letter_index(w.alphabet, c));
    return accepting(w, cur);
}

std::vector<std::size_t> ambiguity_profile(const WeightedAutomaton& w, unsigned max_len) {
    std::vector<std::size_t> best(max_len + 1, 0);
    std::function<void(const std::vector<std::size_t>&, unsigned)> dfs = [&](const std::vector<std::size_t>& cur,
                                                                             unsigned len) {
        best[len] = std::max(best[len], accepting(w, cur));
        if (len == max_len) return;
        for (std::size_t a = 0; a < w.alphabet.size(); ++a) dfs(step_counts(w, cur, static_cast<int>(a)), len + 1);
    };
    dfs(start_counts(w), 0);
    return best;
}

}  // namespace cra
