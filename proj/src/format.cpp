#include "cra/format.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "cra/error.hpp"

namespace cra {

namespace {

// A piece of the input with its position (1-based line and column).
struct Src {
    std::string_view text;
    int line = 1;
    int col = 1;

    [[noreturn]] void fail(const std::string& msg, ErrorKind k = ErrorKind::Syntax) const {
        throw ParseError(k, line, col, msg);
    }
    [[noreturn]] void semantic(const std::string& msg) const { fail(msg, ErrorKind::Semantic); }

    Src sub(std::size_t pos, std::size_t len = std::string_view::npos) const {
        return {text.substr(pos, len), line, col + static_cast<int>(pos)};
    }
    Src trimmed() const {
        std::size_t b = 0, e = text.size();
        while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
        while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
        return sub(b, e - b);
    }
    std::string str() const { return std::string(text); }
};

std::vector<Src> tokens(const Src& s) {
    std::vector<Src> out;
    std::size_t i = 0;
    while (i < s.text.size()) {
        while (i < s.text.size() && std::isspace(static_cast<unsigned char>(s.text[i]))) ++i;
        std::size_t j = i;
        while (j < s.text.size() && !std::isspace(static_cast<unsigned char>(s.text[j]))) ++j;
        if (j > i) out.push_back(s.sub(i, j - i));
        i = j;
    }
    return out;
}

std::vector<Src> split(const Src& s, char sep) {
    std::vector<Src> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.text.size(); ++i)
        if (i == s.text.size() || s.text[i] == sep) {
            out.push_back(s.sub(start, i - start));
            start = i + 1;
        }
    return out;
}

bool is_identifier(std::string_view s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'')) return false;
    return s != "ZERO" && s != "ONE";
}

struct Directive {
    std::string key;
    Src value;
    Src whole;
};

struct LangBlock {
    Src name;
    std::vector<Directive> items;
};

struct RawDoc {
    std::vector<Directive> directives;
    std::vector<LangBlock> langs;
    std::vector<Src> wa_states, wa_edges;
};

Directive directive(const Src& item) {
    Src t = item.trimmed();
    auto colon = t.text.find(':');
    if (colon == std::string_view::npos || colon == 0) t.fail("expected 'key: value'");
    Src key = t.sub(0, colon).trimmed();
    for (char c : key.text)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '-')) key.fail("malformed directive name");
    return {key.str(), t.sub(colon + 1).trimmed(), t};
}

RawDoc scan(std::string_view text) {
    std::vector<Src> lines;
    int no = 1;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i)
        if (i == text.size() || text[i] == '\n') {
            std::string_view l = text.substr(start, i - start);
            if (!l.empty() && l.back() == '\r') l.remove_suffix(1);
            lines.push_back({l, no++, 1});
            start = i + 1;
        }

    RawDoc doc;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        Src line = lines[i].trimmed();
        if (line.text.empty() || line.text.front() == '#') continue;
        auto toks = tokens(line);
        if (toks[0].text == "state") {
            doc.wa_states.push_back(line);
        } else if (toks[0].text == "edge") {
            doc.wa_edges.push_back(line);
        } else if (toks[0].text == "lang") {
            if (toks.size() < 3 || toks[2].text.front() != '{') line.fail("expected 'lang NAME {'");
            LangBlock block{toks[1], {}};
            Src rest = line.sub(static_cast<std::size_t>(toks[2].col - line.col) + 1);
            bool closed = false;
            while (true) {
                auto close = rest.text.find('}');
                Src body = close == std::string_view::npos ? rest : rest.sub(0, close);
                for (const Src& item : split(body, ';'))
                    if (!item.trimmed().text.empty()) block.items.push_back(directive(item));
                if (close != std::string_view::npos) {
                    if (!rest.sub(close + 1).trimmed().text.empty()) rest.sub(close + 1).fail("text after '}'");
                    closed = true;
                    break;
                }
                if (++i >= lines.size()) break;
                rest = lines[i];
                if (rest.trimmed().text.starts_with("#")) rest = rest.sub(rest.text.size());
            }
            if (!closed) line.fail("unterminated lang block");
            doc.langs.push_back(std::move(block));
        } else {
            doc.directives.push_back(directive(line));
        }
    }
    return doc;
}

// Single-valued header lookup.
std::optional<Directive> header(const RawDoc& doc, const std::string& key, bool required = true) {
    std::optional<Directive> found;
    for (const auto& d : doc.directives)
        if (d.key == key) {
            if (found) d.whole.semantic("duplicate '" + key + ":' line");
            found = d;
        }
    if (!found && required) throw ParseError(ErrorKind::Semantic, 1, 1, "missing '" + key + ":' line");
    return found;
}

std::vector<Directive> all(const RawDoc& doc, const std::string& key) {
    std::vector<Directive> out;
    for (const auto& d : doc.directives)
        if (d.key == key) out.push_back(d);
    return out;
}

void check_known(const RawDoc& doc, std::initializer_list<std::string_view> keys) {
    for (const auto& d : doc.directives)
        if (std::find(keys.begin(), keys.end(), d.key) == keys.end())
            d.whole.fail("unknown directive '" + d.key + ":'");
}

Semiring semiring_of(const RawDoc& doc) {
    auto d = *header(doc, "semiring");
    try {
        return Semiring::from_name(d.value.text);
    } catch (const Error& e) {
        d.value.semantic(e.what());
    }
}

std::string alphabet_of(const RawDoc& doc) {
    auto d = *header(doc, "alphabet");
    std::string out;
    for (const Src& t : tokens(d.value)) {
        if (t.text.size() != 1) t.fail("letters are single characters");
        if (out.find(t.text[0]) != std::string::npos) t.semantic("duplicate letter '" + t.str() + "'");
        out += t.text[0];
    }
    if (out.empty()) d.value.semantic("empty alphabet");
    return out;
}

std::vector<std::string> names_of(const Directive& d, bool identifiers) {
    std::vector<std::string> out;
    for (const Src& t : tokens(d.value)) {
        if (identifiers && !is_identifier(t.text)) t.fail("malformed register name '" + t.str() + "'");
        if (std::find(out.begin(), out.end(), t.text) != out.end()) t.semantic("duplicate name '" + t.str() + "'");
        out.push_back(t.str());
    }
    return out;
}

int index_in(const std::vector<std::string>& names, const Src& t, const char* what) {
    auto it = std::find(names.begin(), names.end(), t.text);
    if (it == names.end()) t.semantic(std::string("unknown ") + what + " '" + t.str() + "'");
    return static_cast<int>(it - names.begin());
}

Value value_of(const Src& s, Semiring sr) {
    Src t = s.trimmed();
    try {
        return parse_value(t.text, sr);
    } catch (const Error& e) {
        t.semantic(e.what());
    }
}

LookupFn lookup_in(const std::vector<std::string>& regs) {
    return [&regs](std::string_view name) -> VarId {
        auto it = std::find(regs.begin(), regs.end(), name);
        if (it == regs.end()) throw Error(ErrorKind::Semantic, "unknown register '" + std::string(name) + "'");
        return static_cast<VarId>(it - regs.begin());
    };
}

Expr expr_of(const Src& s, Semiring sr, const std::vector<std::string>& regs) {
    return parse_expr(s.text, sr, lookup_in(regs), s.line, s.col);
}

// "[ x := e ; y := f ]", identity for unlisted registers.
Substitution subst_of(const Src& s, Semiring sr, const std::vector<std::string>& regs) {
    Src t = s.trimmed();
    if (t.text.size() < 2 || t.text.front() != '[' || t.text.back() != ']') t.fail("expected '[ ... ]'");
    Src inner = t.sub(1, t.text.size() - 2);
    Substitution out = Substitution::identity(regs.size());
    if (inner.trimmed().text.empty()) return out;
    std::set<VarId> seen;
    for (const Src& piece : split(inner, ';')) {
        Src p = piece.trimmed();
        auto eq = p.text.find(":=");
        if (eq == std::string_view::npos) p.fail("expected 'register := expression'");
        Src lhs = p.sub(0, eq).trimmed();
        VarId x = static_cast<VarId>(index_in(regs, lhs, "register"));
        if (!seen.insert(x).second) lhs.semantic("register '" + lhs.str() + "' assigned twice");
        Src rhs = p.sub(eq + 2).trimmed();
        if (rhs.text.empty()) rhs.fail("expected an expression");
        out[x] = expr_of(rhs, sr, regs);
    }
    return out;
}

struct Arrow {
    Src from, label, to, rest;
};

// "q --a--> p [ ... ]" or "q --[L]--> p [ ... ]"
Arrow arrow_of(const Directive& d) {
    auto toks = tokens(d.value);
    if (toks.size() < 3) d.value.fail("expected 'state --letter--> state [ ... ]'");
    const Src& arrow = toks[1];
    if (arrow.text.size() < 6 || !arrow.text.starts_with("--") || !arrow.text.ends_with("-->"))
        arrow.fail("expected an arrow '--letter-->'");
    Src rest = d.value.sub(static_cast<std::size_t>(toks[2].col - d.value.col) + toks[2].text.size());
    return {toks[0], arrow.sub(2, arrow.text.size() - 5), toks[2], rest};
}

struct Common {
    Semiring sr;
    std::string alphabet;
    std::vector<std::string> states, registers;
    std::optional<Directive> states_line, registers_line;
    int start = 0;
    std::vector<Value> init;
    std::vector<Expr> output;
};

Common common(const RawDoc& doc) {
    Common c;
    c.sr = semiring_of(doc);
    c.alphabet = alphabet_of(doc);
    c.states_line = header(doc, "states");
    c.states = names_of(*c.states_line, false);
    if (c.states.empty()) c.states_line->value.semantic("no states");
    c.registers_line = header(doc, "registers");
    c.registers = names_of(*c.registers_line, true);
    c.start = index_in(c.states, header(doc, "start")->value.trimmed(), "state");

    c.init.assign(c.registers.size(), c.sr.zero());
    std::vector<char> have(c.registers.size(), 0);
    for (const auto& d : all(doc, "init")) {
        auto eq = d.value.text.find('=');
        if (eq == std::string_view::npos) d.value.fail("expected 'register = value'");
        Src reg = d.value.sub(0, eq).trimmed();
        int x = index_in(c.registers, reg, "register");
        if (have[x]) reg.semantic("register '" + reg.str() + "' initialized twice");
        have[x] = 1;
        c.init[x] = value_of(d.value.sub(eq + 1), c.sr);
    }
    for (std::size_t x = 0; x < have.size(); ++x)
        if (!have[x]) c.registers_line->value.semantic("no initial value for register '" + c.registers[x] + "'");

    c.output.assign(c.states.size(), Expr());
    std::vector<char> out(c.states.size(), 0);
    for (const auto& d : all(doc, "output")) {
        auto eq = d.value.text.find('=');
        if (eq == std::string_view::npos) d.value.fail("expected 'state = expression'");
        Src st = d.value.sub(0, eq).trimmed();
        int q = index_in(c.states, st, "state");
        if (out[q]) st.semantic("state '" + st.str() + "' has two outputs");
        out[q] = 1;
        c.output[q] = expr_of(d.value.sub(eq + 1).trimmed(), c.sr, c.registers);
    }
    for (std::size_t q = 0; q < out.size(); ++q)
        if (!out[q]) c.states_line->value.semantic("no output for state '" + c.states[q] + "'");
    return c;
}

std::string kind_of(const RawDoc& doc) { return header(doc, "kind")->value.str(); }

void expect_kind(const RawDoc& doc, const std::string& want) {
    auto d = *header(doc, "kind");
    if (d.value.text != want) d.value.semantic("expected kind '" + want + "', found '" + d.value.str() + "'");
}

Cra build_cra(const RawDoc& doc) {
    check_known(doc, {"kind", "semiring", "alphabet", "states", "registers", "start", "init", "trans", "output"});
    Common c = common(doc);
    Cra a(c.sr, c.alphabet, c.states, c.registers);
    a.start = c.start;
    a.init = c.init;
    a.output = c.output;
    for (const auto& d : all(doc, "trans")) {
        Arrow ar = arrow_of(d);
        int q = index_in(c.states, ar.from, "state");
        if (ar.label.text.size() != 1) ar.label.fail("expected a single letter");
        if (c.alphabet.find(ar.label.text[0]) == std::string::npos) ar.label.semantic("letter not in the alphabet");
        int l = a.letter(ar.label.text[0]);
        if (a.edge(q, l).target >= 0) d.whole.semantic("duplicate transition from '" + ar.from.str() + "' on '" + ar.label.str() + "'");
        int p = index_in(c.states, ar.to, "state");
        a.edge(q, l) = {p, subst_of(ar.rest, c.sr, c.registers)};
    }
    for (std::size_t q = 0; q < a.num_states(); ++q)
        for (std::size_t l = 0; l < a.alphabet.size(); ++l)
            if (a.edge(static_cast<int>(q), static_cast<int>(l)).target < 0)
                c.states_line->value.semantic("no transition from '" + a.states[q] + "' on '" + a.alphabet[l] + "'");
    return a;
}

UCra build_ucra(const RawDoc& doc) {
    check_known(doc, {"kind", "semiring", "alphabet", "states", "registers", "start", "final", "init", "trans", "output",
                      "alt-bound"});
    Common c = common(doc);
    UCra u;
    u.sr = c.sr;
    u.alphabet = c.alphabet;
    u.states = c.states;
    u.registers = c.registers;
    u.start = c.start;
    u.init = c.init;
    u.output = c.output;
    u.final.assign(c.states.size(), 0);
    for (const Src& t : tokens(header(doc, "final")->value)) u.final[index_in(c.states, t, "state")] = 1;
    if (auto d = header(doc, "alt-bound", false)) u.alt_bound = static_cast<unsigned>(value_of(d->value, Semiring(SemiringKind::Nat)).raw());
    for (const auto& d : all(doc, "trans")) {
        Arrow ar = arrow_of(d);
        int q = index_in(c.states, ar.from, "state");
        if (ar.label.text.size() != 1) ar.label.fail("expected a single letter");
        if (c.alphabet.find(ar.label.text[0]) == std::string::npos) ar.label.semantic("letter not in the alphabet");
        int p = index_in(c.states, ar.to, "state");
        u.edges.push_back({q, letter_index(c.alphabet, ar.label.text[0]), p, subst_of(ar.rest, c.sr, c.registers)});
    }
    return u;
}

Dfa build_dfa(const LangBlock& b, const std::string& alphabet) {
    Dfa d;
    d.name = b.name.str();
    std::optional<Directive> states, start, final;
    std::vector<Directive> trans;
    for (const auto& it : b.items) {
        auto once = [&](std::optional<Directive>& slot) {
            if (slot) it.whole.semantic("duplicate '" + it.key + ":' in lang " + d.name);
            slot = it;
        };
        if (it.key == "states") once(states);
        else if (it.key == "start") once(start);
        else if (it.key == "final") once(final);
        else if (it.key == "trans") trans.push_back(it);
        else it.whole.fail("unknown item '" + it.key + ":' in lang " + d.name);
    }
    if (!states || !start || !final) b.name.semantic("lang " + d.name + " needs states, start and final");
    d.states = names_of(*states, false);
    d.start = index_in(d.states, start->value.trimmed(), "lang state");
    d.final.assign(d.states.size(), 0);
    for (const Src& t : tokens(final->value)) d.final[index_in(d.states, t, "lang state")] = 1;
    d.delta.assign(d.states.size() * alphabet.size(), -1);
    for (const auto& t : trans) {
        auto toks = tokens(t.value);
        if (toks.size() != 3 || toks[1].text.size() != 4 || toks[1].text[0] != '-' || !toks[1].text.ends_with("->"))
            t.value.fail("expected 'p -letter-> q'");
        int p = index_in(d.states, toks[0], "lang state");
        char c = toks[1].text[1];
        if (alphabet.find(c) == std::string::npos) toks[1].semantic("letter not in the alphabet");
        int& slot = d.delta[p * alphabet.size() + letter_index(alphabet, c)];
        if (slot >= 0) t.whole.semantic("duplicate transition in lang " + d.name);
        slot = index_in(d.states, toks[2], "lang state");
    }
    for (std::size_t p = 0; p < d.states.size(); ++p)
        for (std::size_t a = 0; a < alphabet.size(); ++a)
            if (d.delta[p * alphabet.size() + a] < 0)
                b.name.semantic("lang " + d.name + ": no transition from '" + d.states[p] + "' on '" + alphabet[a] + "'");
    return d;
}

CraRla build_rla(const RawDoc& doc) {
    check_known(doc, {"kind", "semiring", "alphabet", "states", "registers", "start", "init", "trans", "output", "alt-bound"});
    Common c = common(doc);
    CraRla r;
    r.sr = c.sr;
    r.alphabet = c.alphabet;
    r.states = c.states;
    r.registers = c.registers;
    r.start = c.start;
    r.init = c.init;
    r.output = c.output;
    if (auto d = header(doc, "alt-bound", false)) r.alt_bound = static_cast<unsigned>(value_of(d->value, Semiring(SemiringKind::Nat)).raw());
    std::vector<std::string> lang_names;
    for (const auto& b : doc.langs) {
        if (std::find(lang_names.begin(), lang_names.end(), b.name.text) != lang_names.end())
            b.name.semantic("duplicate lang '" + b.name.str() + "'");
        lang_names.push_back(b.name.str());
        r.langs.push_back(build_dfa(b, r.alphabet));
    }
    std::vector<Directive> lines = all(doc, "trans");
    for (const auto& d : lines) {
        Arrow ar = arrow_of(d);
        int q = index_in(c.states, ar.from, "state");
        if (ar.label.text.size() < 3 || ar.label.text.front() != '[' || ar.label.text.back() != ']')
            ar.label.fail("expected a lookahead '[NAME]'");
        int l = index_in(lang_names, ar.label.sub(1, ar.label.text.size() - 2), "lang");
        int p = index_in(c.states, ar.to, "state");
        r.edges.push_back({q, l, p, subst_of(ar.rest, c.sr, c.registers)});
    }
    if (auto o = find_overlap(r))
        lines[o->second].whole.semantic("lookahead overlaps an earlier transition from the same state on \"" + o->word + "\"");
    return r;
}

WeightedAutomaton build_wa(const RawDoc& doc) {
    check_known(doc, {"kind", "semiring", "alphabet"});
    Semiring sr = semiring_of(doc);
    std::string alphabet = alphabet_of(doc);
    std::vector<std::string> names;
    for (const Src& line : doc.wa_states) {
        auto toks = tokens(line);
        if (toks.size() < 2) line.fail("expected 'state NAME [I=v] [F=v]'");
        if (std::find(names.begin(), names.end(), toks[1].text) != names.end()) toks[1].semantic("duplicate state");
        names.push_back(toks[1].str());
    }
    if (names.empty()) throw ParseError(ErrorKind::Semantic, 1, 1, "no states");
    WeightedAutomaton w(sr, alphabet, names);
    for (std::size_t i = 0; i < doc.wa_states.size(); ++i) {
        auto toks = tokens(doc.wa_states[i]);
        for (std::size_t j = 2; j < toks.size(); ++j) {
            const Src& t = toks[j];
            if (t.text.starts_with("I=")) w.initial[i] = value_of(t.sub(2), sr);
            else if (t.text.starts_with("F=")) w.final[i] = value_of(t.sub(2), sr);
            else t.fail("expected I=value or F=value");
        }
    }
    std::set<std::tuple<int, int, int>> seen;
    for (const Src& line : doc.wa_edges) {
        auto toks = tokens(line);
        if (toks.size() != 4) line.fail("expected 'edge p -letter/weight-> q'");
        const Src& lab = toks[2];
        if (lab.text.size() < 6 || lab.text[0] != '-' || lab.text[2] != '/' || !lab.text.ends_with("->"))
            lab.fail("expected '-letter/weight->'");
        int p = index_in(names, toks[1], "state");
        int q = index_in(names, toks[3], "state");
        if (alphabet.find(lab.text[1]) == std::string::npos) lab.semantic("letter not in the alphabet");
        int a = letter_index(alphabet, lab.text[1]);
        if (!seen.insert({p, a, q}).second) line.semantic("duplicate edge");
        w.weight(a, p, q) = value_of(lab.sub(3, lab.text.size() - 5), sr);
    }
    return w;
}

std::string join(const std::vector<std::string>& v) {
    std::string out;
    for (const auto& s : v) out += (out.empty() ? "" : " ") + s;
    return out;
}

std::string header_text(const char* kind, Semiring sr, const std::string& alphabet, const std::vector<std::string>& states,
                        const std::vector<std::string>& regs) {
    std::string out = std::string("kind: ") + kind + "\nsemiring: " + std::string(sr.name()) + "\nalphabet:";
    for (char c : alphabet) out += std::string(" ") + c;
    out += "\nstates: " + join(states) + "\nregisters: " + join(regs) + "\n";
    return out;
}

std::string init_text(const std::vector<std::string>& regs, const std::vector<Value>& init) {
    std::string out;
    for (std::size_t x = 0; x < regs.size(); ++x) out += "init: " + regs[x] + " = " + init[x].str() + "\n";
    return out;
}

std::string bracket(const Substitution& s, const NameFn& names) {
    std::string body = to_string(s, names);
    return body.empty() ? "[ ]" : "[ " + body + " ]";
}

std::string output_text(const std::vector<std::string>& states, const std::vector<Expr>& out, const NameFn& names) {
    std::string s;
    for (std::size_t q = 0; q < states.size(); ++q) s += "output: " + states[q] + " = " + to_string(out[q], names) + "\n";
    return s;
}

}  // namespace

Machine parse_machine(std::string_view text) {
    RawDoc doc = scan(text);
    std::string kind = kind_of(doc);
    if (kind == "cra") return build_cra(doc);
    if (kind == "ucra") return build_ucra(doc);
    if (kind == "rla") return build_rla(doc);
    if (kind == "wa") return build_wa(doc);
    header(doc, "kind")->value.semantic("unknown kind '" + kind + "'");
}

Cra parse_cra(std::string_view text) {
    RawDoc doc = scan(text);
    expect_kind(doc, "cra");
    return build_cra(doc);
}

UCra parse_ucra(std::string_view text) {
    RawDoc doc = scan(text);
    expect_kind(doc, "ucra");
    return build_ucra(doc);
}

CraRla parse_rla(std::string_view text) {
    RawDoc doc = scan(text);
    expect_kind(doc, "rla");
    return build_rla(doc);
}

WeightedAutomaton parse_wa(std::string_view text) {
    RawDoc doc = scan(text);
    expect_kind(doc, "wa");
    return build_wa(doc);
}

std::string serialize(const Cra& a) {
    auto names = a.names();
    std::string out = header_text("cra", a.sr, a.alphabet, a.states, a.registers);
    out += "start: " + a.states[a.start] + "\n";
    out += init_text(a.registers, a.init);
    for (std::size_t q = 0; q < a.num_states(); ++q)
        for (std::size_t l = 0; l < a.alphabet.size(); ++l) {
            const auto& e = a.edge(static_cast<int>(q), static_cast<int>(l));
            if (e.target < 0) continue;
            out += "trans: " + a.states[q] + " --" + a.alphabet[l] + "--> " + a.states[e.target] + " " +
                   bracket(e.update, names) + "\n";
        }
    return out + output_text(a.states, a.output, names);
}

std::string serialize(const UCra& u) {
    auto names = u.names();
    std::string out = header_text("ucra", u.sr, u.alphabet, u.states, u.registers);
    if (u.alt_bound) out += "alt-bound: " + std::to_string(*u.alt_bound) + "\n";
    out += "start: " + u.states[u.start] + "\nfinal:";
    for (std::size_t q = 0; q < u.states.size(); ++q)
        if (u.final[q]) out += " " + u.states[q];
    out += "\n" + init_text(u.registers, u.init);
    for (const auto& e : u.edges)
        out += "trans: " + u.states[e.from] + " --" + u.alphabet[e.letter] + "--> " + u.states[e.to] + " " +
               bracket(e.update, names) + "\n";
    return out + output_text(u.states, u.output, names);
}

std::string serialize(const CraRla& r) {
    auto names = r.names();
    std::string out = header_text("rla", r.sr, r.alphabet, r.states, r.registers);
    if (r.alt_bound) out += "alt-bound: " + std::to_string(*r.alt_bound) + "\n";
    for (const auto& d : r.langs) {
        out += "lang " + d.name + " {\n  states: " + join(d.states) + "\n  start: " + d.states[d.start] + "\n  final:";
        for (std::size_t p = 0; p < d.states.size(); ++p)
            if (d.final[p]) out += " " + d.states[p];
        out += "\n";
        for (std::size_t p = 0; p < d.states.size(); ++p)
            for (std::size_t a = 0; a < r.alphabet.size(); ++a)
                out += "  trans: " + d.states[p] + " -" + r.alphabet[a] + "-> " + d.states[d.delta[p * r.alphabet.size() + a]] + "\n";
        out += "}\n";
    }
    out += "start: " + r.states[r.start] + "\n" + init_text(r.registers, r.init);
    for (const auto& e : r.edges)
        out += "trans: " + r.states[e.from] + " --[" + r.langs[e.lang].name + "]--> " + r.states[e.to] + " " +
               bracket(e.update, names) + "\n";
    return out + output_text(r.states, r.output, names);
}

std::string serialize(const WeightedAutomaton& w) {
    std::string out = "kind: wa\nsemiring: " + std::string(w.sr.name()) + "\nalphabet:";
    for (char c : w.alphabet) out += std::string(" ") + c;
    out += "\n";
    for (std::size_t p = 0; p < w.num_states(); ++p)
        out += "state " + w.states[p] + " I=" + w.initial[p].str() + " F=" + w.final[p].str() + "\n";
    const int n = static_cast<int>(w.num_states());
    for (int p = 0; p < n; ++p)
        for (std::size_t a = 0; a < w.alphabet.size(); ++a)
            for (int q = 0; q < n; ++q) {
                Value v = w.weight(static_cast<int>(a), p, q);
                if (!w.sr.is_zero(v))
                    out += "edge " + w.states[p] + " -" + w.alphabet[a] + "/" + v.str() + "-> " + w.states[q] + "\n";
            }
    return out;
}

std::string serialize(const Machine& m) {
    return std::visit([](const auto& x) { return serialize(x); }, m);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::Semantic, "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Machine load_machine(const std::string& path) { return parse_machine(read_file(path)); }

}  // namespace cra
