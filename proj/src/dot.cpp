#include "cra/dot.hpp"

namespace cra {

namespace {

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '\n') {
            out += "\\n";
            continue;
        }
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

std::string node(const std::string& name, const std::string& label, bool accepting) {
    return "  " + quote(name) + " [label=" + quote(label) + (accepting ? ", shape=doublecircle" : "") + "];\n";
}

std::string edge(const std::string& from, const std::string& to, const std::string& label) {
    return "  " + quote(from) + " -> " + quote(to) + " [label=" + quote(label) + "];\n";
}

std::string start(const std::string& name) {
    return "  __start [shape=point];\n  __start -> " + quote(name) + ";\n";
}

std::string render(const Cra& a) {
    auto names = a.names();
    std::string out = "digraph cra {\n  rankdir=LR;\n  node [shape=circle];\n";
    for (std::size_t q = 0; q < a.num_states(); ++q)
        out += node(a.states[q], a.states[q] + "\nout: " + to_string(a.output[q], names), false);
    out += start(a.states[a.start]);
    for (std::size_t q = 0; q < a.num_states(); ++q)
        for (std::size_t l = 0; l < a.alphabet.size(); ++l) {
            const auto& e = a.edge(static_cast<int>(q), static_cast<int>(l));
            if (e.target >= 0)
                out += edge(a.states[q], a.states[e.target], std::string(1, a.alphabet[l]) + " / " + to_string(e.update, names));
        }
    return out + "}\n";
}

std::string render(const UCra& u) {
    auto names = u.names();
    std::string out = "digraph ucra {\n  rankdir=LR;\n  node [shape=circle];\n";
    for (std::size_t q = 0; q < u.states.size(); ++q)
        out += node(u.states[q], u.states[q] + "\nout: " + to_string(u.output[q], names), u.final[q]);
    out += start(u.states[u.start]);
    for (const auto& e : u.edges)
        out += edge(u.states[e.from], u.states[e.to], std::string(1, u.alphabet[e.letter]) + " / " + to_string(e.update, names));
    return out + "}\n";
}

std::string render(const CraRla& r) {
    auto names = r.names();
    std::string out = "digraph rla {\n  rankdir=LR;\n  node [shape=circle];\n";
    for (std::size_t q = 0; q < r.states.size(); ++q)
        out += node(r.states[q], r.states[q] + "\nout: " + to_string(r.output[q], names), false);
    out += start(r.states[r.start]);
    for (const auto& e : r.edges)
        out += edge(r.states[e.from], r.states[e.to], "[" + r.langs[e.lang].name + "] / " + to_string(e.update, names));
    return out + "}\n";
}

std::string render(const WeightedAutomaton& w) {
    std::string out = "digraph wa {\n  rankdir=LR;\n  node [shape=circle];\n";
    for (std::size_t p = 0; p < w.num_states(); ++p)
        out += node(w.states[p], w.states[p] + "\nI=" + w.initial[p].str() + " F=" + w.final[p].str(),
                    !w.sr.is_zero(w.final[p]));
    const int n = static_cast<int>(w.num_states());
    for (int p = 0; p < n; ++p)
        for (std::size_t a = 0; a < w.alphabet.size(); ++a)
            for (int q = 0; q < n; ++q) {
                Value v = w.weight(static_cast<int>(a), p, q);
                if (!w.sr.is_zero(v)) out += edge(w.states[p], w.states[q], std::string(1, w.alphabet[a]) + " / " + v.str());
            }
    return out + "}\n";
}

}  // namespace

std::string to_dot(const Machine& m) {
    return std::visit([](const auto& x) { return render(x); }, m);
}

}  // namespace cra
