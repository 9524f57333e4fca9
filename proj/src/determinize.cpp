#include <algorithm>
#include <deque>
#include <map>
#include <unordered_map>

#include "cra/error.hpp"
#include "cra/lookahead.hpp"

namespace cra {

std::vector<int> DetState::leaves() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < nodes.size(); ++i)
        if (nodes[i].children.empty()) out.push_back(static_cast<int>(i));
    return out;
}

std::size_t DetState::num_tree_vars(std::size_t num_registers) const {
    std::size_t count = 0;
    for (const auto& node : nodes)
        for (const auto& e : node.label.images())
            for (VarId v : vars(e))
                if (v >= num_registers) ++count;
    return count;
}

Substitution tree_collapse(const DetState& t, int u) {
    std::vector<int> parent(t.nodes.size(), -1);
    for (std::size_t i = 0; i < t.nodes.size(); ++i)
        for (int c : t.nodes[i].children) parent[c] = static_cast<int>(i);
    std::vector<int> path;
    for (int v = u; v >= 0; v = parent[v]) path.push_back(v);
    Substitution s = t.nodes[path.back()].label;
    for (auto it = path.rbegin() + 1; it != path.rend(); ++it) s = compose(s, t.nodes[*it].label, true);
    return s;
}

namespace {

constexpr VarId kFreshBase = VarId(1) << 30;

// Recursive working form of a tree state.
struct TNode {
    Substitution label;
    int state = -1;
    std::vector<TNode> kids;
};

TNode from_flat(const DetState& s, int i = 0) {
    TNode t{s.nodes[i].label, s.nodes[i].state, {}};
    for (int c : s.nodes[i].children) t.kids.push_back(from_flat(s, c));
    return t;
}

void to_flat(const TNode& t, DetState& out) {
    int me = static_cast<int>(out.nodes.size());
    out.nodes.push_back({t.label, {}, t.kids.empty() ? t.state : -1});
    for (const auto& k : t.kids) {
        int c = static_cast<int>(out.nodes.size());
        out.nodes[me].children.push_back(c);
        to_flat(k, out);
    }
}

void extend(TNode& t, int a, const UCra& u, const std::vector<std::vector<const UCra::Edge*>>& index) {
    if (t.kids.empty()) {
        if (t.state < 0) return;
        for (const auto* e : index[t.state * u.alphabet.size() + a]) t.kids.push_back({e->update, e->to, {}});
        t.state = -1;
        return;
    }
    for (auto& k : t.kids) extend(k, a, u, index);
}

bool prune(TNode& t) {
    if (t.kids.empty()) return t.state >= 0;
    std::vector<TNode> alive;
    for (auto& k : t.kids)
        if (prune(k)) alive.push_back(std::move(k));
    t.kids = std::move(alive);
    return !t.kids.empty();
}

void shrink(TNode& t) {
    while (t.kids.size() == 1) {
        TNode child = std::move(t.kids.front());
        t.label = compose(t.label, child.label, true);
        t.state = child.state;
        t.kids = std::move(child.kids);
    }
    for (auto& k : t.kids) shrink(k);
}

void collect_leaf_states(const TNode& t, std::vector<int>& out) {
    if (t.kids.empty()) out.push_back(t.state);
    for (const auto& k : t.kids) collect_leaf_states(k, out);
}

// Replaces every maximal X-free part of a flattened expression by a fresh
// variable, recording the fresh variable's value in `defs`.
class Reducer {
public:
    Reducer(std::size_t num_registers, std::map<VarId, Expr>& defs, VarId base = kFreshBase)
        : n_(num_registers), base_(base), defs_(defs) {}

    Expr run(const Expr& p) {
        if (p.is_var() && p.var_id() < n_) return p;
        if (!has_x(p)) return fresh(p);
        std::vector<Expr> with_x, without_x;
        for (const auto& c : p.children()) (has_x(c) ? with_x : without_x).push_back(c);
        std::vector<Expr> out;
        for (const auto& c : with_x) out.push_back(run(c));
        if (!without_x.empty()) out.push_back(fresh(Expr::op(p.kind(), std::move(without_x))));
        return Expr::op(p.kind(), std::move(out));
    }

private:
    bool has_x(const Expr& e) const {
        if (e.is_var()) return e.var_id() < n_;
        for (const auto& c : e.children())
            if (has_x(c)) return true;
        return false;
    }

    Expr fresh(const Expr& value) {
        VarId y = base_ + static_cast<VarId>(defs_.size());
        defs_.emplace(y, value);
        return Expr::var(y);
    }

    std::size_t n_;
    VarId base_;
    std::map<VarId, Expr>& defs_;
};

}  // namespace

XReduction x_reduce(const Expr& e, std::size_t num_registers, VarId fresh_base) {
    XReduction out;
    Reducer red(num_registers, out.defs, fresh_base);
    out.skeleton = red.run(flatten(e));
    return out;
}

namespace {

void reduce(TNode& t, Reducer& red) {
    std::vector<Expr> im;
    for (const auto& e : t.label.images()) im.push_back(red.run(flatten(e)));
    t.label = Substitution(std::move(im));
    for (auto& k : t.kids) reduce(k, red);
}

// Key with tree variables anonymized; op children and subtrees sorted.
std::string canonicalize_key(TNode& t, std::size_t n) {
    NameFn anon = [n](VarId v) { return v < n ? "x" + std::to_string(v) : std::string("?"); };
    std::string key = "[";
    std::vector<Expr> im;
    for (const auto& e : t.label.images()) {
        im.push_back(canonical_order(e, anon));
        key += canonical_key(im.back(), anon) + ";";
    }
    t.label = Substitution(std::move(im));
    key += "]" + std::to_string(t.state) + "(";
    std::vector<std::pair<std::string, TNode>> kids;
    for (auto& k : t.kids) {
        std::string kk = canonicalize_key(k, n);
        kids.emplace_back(std::move(kk), std::move(k));
    }
    std::sort(kids.begin(), kids.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    t.kids.clear();
    for (auto& [kk, k] : kids) {
        key += kk + ",";
        t.kids.push_back(std::move(k));
    }
    return key + ")";
}

void first_occurrence(const Expr& e, std::size_t n, std::map<VarId, VarId>& ren) {
    if (e.is_var() && e.var_id() >= n && !ren.count(e.var_id()))
        ren.emplace(e.var_id(), static_cast<VarId>(n + ren.size()));
    for (const auto& c : e.children()) first_occurrence(c, n, ren);
}

void number_vars(const TNode& t, std::size_t n, std::map<VarId, VarId>& ren) {
    for (const auto& e : t.label.images()) first_occurrence(e, n, ren);
    for (const auto& k : t.kids) number_vars(k, n, ren);
}

void apply_renaming(TNode& t, std::size_t n, const std::map<VarId, VarId>& ren) {
    std::vector<Expr> im;
    for (const auto& e : t.label.images()) im.push_back(rename(e, [&](VarId v) { return v < n ? v : ren.at(v); }));
    t.label = Substitution(std::move(im));
    for (auto& k : t.kids) apply_renaming(k, n, ren);
}

// Shortest word leading from q to a final state of u.
std::string to_final(const UCra& u, int q) {
    std::vector<int> prev(u.states.size(), -2);
    std::vector<char> via(u.states.size(), 0);
    std::deque<int> queue{q};
    prev[q] = -1;
    while (!queue.empty()) {
        int s = queue.front();
        queue.pop_front();
        if (u.final[s]) {
            std::string w;
            for (int v = s; prev[v] >= 0; v = prev[v]) w.push_back(via[v]);
            std::reverse(w.begin(), w.end());
            return w;
        }
        for (std::size_t a = 0; a < u.alphabet.size(); ++a)
            for (const auto& e : u.edges)
                if (e.from == s && e.letter == static_cast<int>(a) && prev[e.to] == -2) {
                    prev[e.to] = s;
                    via[e.to] = u.alphabet[a];
                    queue.push_back(e.to);
                }
    }
    return "";
}

void check_runs(const UCra& u, const std::vector<int>& leaf_states, const std::string& w) {
    std::vector<int> sorted = leaf_states;
    std::sort(sorted.begin(), sorted.end());
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end()) {
        std::string witness = w + to_final(u, *dup);
        throw Error(ErrorKind::Ambiguity, "two runs reach " + u.states[*dup] + " on \"" + w + "\"; \"" + witness +
                                              "\" has two accepting runs",
                    witness);
    }
    auto finals = std::count_if(sorted.begin(), sorted.end(), [&](int q) { return u.final[q]; });
    if (finals == 0) throw Error(ErrorKind::AcceptanceCount, "\"" + w + "\" has no accepting run", w);
    if (finals > 1) throw Error(ErrorKind::Ambiguity, "\"" + w + "\" has several accepting runs", w);
}

}  // namespace

std::vector<std::string> check_invariants(const DetState& t, const UCra& u, std::size_t budget) {
    const std::size_t n = u.registers.size();
    std::vector<std::string> problems;
    if (t.nodes.size() > 2 * u.states.size()) problems.push_back("too many nodes");
    std::vector<VarId> ys;
    for (const auto& node : t.nodes) {
        if (node.children.size() == 1) problems.push_back("node with a single child");
        for (const auto& e : node.label.images()) {
            std::function<void(const Expr&)> walk = [&](const Expr& x) {
                if (x.is_const()) problems.push_back("constant in a label");
                if (x.is_var() && x.var_id() >= n) ys.push_back(x.var_id());
                for (const auto& c : x.children()) walk(c);
            };
            walk(e);
            if (!is_copyless(e)) problems.push_back("label is not copyless");
        }
    }
    std::sort(ys.begin(), ys.end());
    if (std::adjacent_find(ys.begin(), ys.end()) != ys.end()) problems.push_back("tree variable used twice");
    if (ys.size() > budget) problems.push_back("tree variables exceed the budget");
    std::vector<int> states;
    for (int l : t.leaves()) states.push_back(t.nodes[l].state);
    std::sort(states.begin(), states.end());
    if (std::adjacent_find(states.begin(), states.end()) != states.end()) problems.push_back("leaf labelling not injective");
    if (std::count_if(states.begin(), states.end(), [&](int q) { return q >= 0 && u.final[q]; }) != 1)
        problems.push_back("not exactly one final leaf");
    return problems;
}

DetResult determinize(const UCra& input, std::size_t max_states) {
    // a register nobody reads may grow in alternation forever; its content is irrelevant
    const UCra u = drop_dead_registers(trim(input));
    const std::size_t n = u.registers.size();
    const std::size_t k = u.alphabet.size();
    const auto index = u.by_source_letter();
    if (n > 0 && std::any_of(u.edges.begin(), u.edges.end(), [](const auto& e) { return !is_copyless(e.update); }))
        throw Error(ErrorKind::CopylessViolation, "automaton is not copyless");

    DetResult res;
    res.alt_bound = u.alt_bound ? *u.alt_bound : std::max(1u, 2 * ucra_max_alternation(u, 8));
    res.register_budget = 2 * u.states.size() * n * (n * res.alt_bound + 1);

    struct Step {
        int target;
        std::vector<Expr> assign;  // new tree variable j := expression over old ones
    };
    std::vector<std::vector<Step>> steps;
    std::vector<std::string> prefix;
    std::unordered_map<std::string, int> ids;

    auto add_state = [&](TNode t, const std::string& word) -> std::pair<int, std::map<VarId, VarId>> {
        std::string key = canonicalize_key(t, n);
        std::map<VarId, VarId> ren;
        number_vars(t, n, ren);
        auto it = ids.find(key);
        if (it != ids.end()) return {it->second, ren};
        if (res.trees.size() >= max_states)
            throw Error(ErrorKind::StateExplosion, "more than " + std::to_string(max_states) + " tree states", word);
        apply_renaming(t, n, ren);
        if (ren.size() > res.register_budget)
            throw Error(ErrorKind::RegisterBudget,
                        std::to_string(ren.size()) + " tree variables exceed the budget of " +
                            std::to_string(res.register_budget),
                        word);
        DetState flat;
        to_flat(t, flat);
        int id = static_cast<int>(res.trees.size());
        ids.emplace(key, id);
        res.trees.push_back(std::move(flat));
        prefix.push_back(word);
        return {id, ren};
    };

    {
        check_runs(u, {u.start}, "");
        std::vector<Expr> im;
        for (VarId x = 0; x < n; ++x) im.push_back(Expr::var(static_cast<VarId>(n + x)));
        add_state(TNode{Substitution(std::move(im)), u.start, {}}, "");
    }

    for (std::size_t s = 0; s < res.trees.size(); ++s) {
        steps.emplace_back();
        for (std::size_t a = 0; a < k; ++a) {
            const std::string word = prefix[s] + u.alphabet[a];
            TNode t = from_flat(res.trees[s]);
            extend(t, static_cast<int>(a), u, index);
            if (!prune(t)) throw Error(ErrorKind::AcceptanceCount, "\"" + word + "\" has no run", word);
            shrink(t);
            std::vector<int> leaf_states;
            collect_leaf_states(t, leaf_states);
            check_runs(u, leaf_states, word);

            std::map<VarId, Expr> defs;
            Reducer red(n, defs);
            reduce(t, red);
            auto [target, ren] = add_state(std::move(t), word);
            std::vector<Expr> assign(ren.size());
            for (const auto& [fresh, j] : ren) assign[j - n] = defs.at(fresh);
            steps.back().push_back({target, std::move(assign)});
        }
    }

    std::size_t m = 0;
    for (const auto& t : res.trees) m = std::max(m, t.num_tree_vars(n));
    std::vector<std::string> regs;
    for (std::size_t j = 0; j < m; ++j) regs.push_back("y" + std::to_string(j));
    std::vector<std::string> names;
    for (std::size_t s = 0; s < res.trees.size(); ++s) names.push_back("t" + std::to_string(s));

    auto shift = [n](const Expr& e) { return rename(e, [n](VarId v) { return static_cast<VarId>(v - n); }); };
    Cra& out = res.cra;
    out = Cra(u.sr, u.alphabet, names, regs);
    out.start = 0;
    for (std::size_t j = 0; j < m; ++j) out.init[j] = j < n ? u.init[j] : u.sr.zero();
    for (std::size_t s = 0; s < res.trees.size(); ++s) {
        const DetState& t = res.trees[s];
        for (int l : t.leaves())
            if (u.final[t.nodes[l].state]) out.output[s] = shift(apply(tree_collapse(t, l), u.output[t.nodes[l].state], true));
        for (std::size_t a = 0; a < k; ++a) {
            const Step& st = steps[s][a];
            std::vector<Expr> im(m, Expr::constant(u.sr.zero()));
            for (std::size_t j = 0; j < st.assign.size(); ++j) im[j] = shift(st.assign[j]);
            out.edge(static_cast<int>(s), static_cast<int>(a)) = {st.target, Substitution(std::move(im))};
        }
    }
    return res;
}

Cra eliminate_lookahead(const CraRla& r, std::size_t max_states) {
    return determinize(to_unambiguous(r), max_states).cra;
}

}  // namespace cra
