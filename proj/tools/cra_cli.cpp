#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "cra/corpus.hpp"
#include "cra/dot.hpp"
#include "cra/error.hpp"
#include "cra/format.hpp"
#include "cra/harness.hpp"
#include "cra/transforms.hpp"

using namespace cra;

namespace {

template <typename T>
T load_as(const std::string& path, const char* kind) {
    Machine m = load_machine(path);
    if (auto* x = std::get_if<T>(&m)) return *x;
    throw Error(ErrorKind::Semantic, path + ": expected a " + kind + " file");
}

UCra load_unambiguous(const std::string& path) {
    Machine m = load_machine(path);
    if (auto* r = std::get_if<CraRla>(&m)) return to_unambiguous(*r);
    if (auto* u = std::get_if<UCra>(&m)) return *u;
    throw Error(ErrorKind::Semantic, path + ": expected an rla or ucra file");
}

std::string join_names(const std::vector<VarId>& xs, const Cra& a) {
    std::string out;
    for (VarId x : xs) out += (out.empty() ? "" : " ") + a.registers[x];
    return out.empty() ? "(none)" : out;
}

int check(const std::string& path, unsigned max_len) {
    Cra a = load_as<Cra>(path, "cra");
    auto rep = validate(a);
    std::cout << "copyless: " << (rep.copyless ? "true" : "false") << "\n";
    std::cout << "normal_form: " << (rep.normal_form ? "true" : "false") << "\n";
    std::cout << "total: " << (rep.total ? "true" : "false") << "\n";
    std::cout << "strongly_connected: " << (is_strongly_connected(a) ? "true" : "false") << "\n";
    if (rep.normal_form)
        std::cout << "stable_registers: " << join_names(stable_registers(a), a) << "\n";
    else
        std::cout << "stable_registers: n/a (not in normal form)\n";
    std::cout << "max_alternation(" << max_len << "): " << max_alternation(a, max_len) << "\n";
    for (const auto& p : rep.problems) std::cout << "  " << p << "\n";
    return 0;
}

RegisterOrder parse_order(const Cra& a, const std::string& list) {
    std::vector<VarId> order;
    std::stringstream ss(list);
    std::string name;
    while (std::getline(ss, name, ',')) order.push_back(a.register_index(name));
    return RegisterOrder(order);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Copyless cost register automata toolkit"};
    app.require_subcommand(1);

    std::string file, file2, word, from, to, order, dir;
    unsigned max_len = 6, random_count = 0, random_len = 10, max_states = 10000;
    std::uint64_t seed = 1;

    auto* eval_cmd = app.add_subcommand("eval", "Evaluate a cra (or ucra) file on a word");
    eval_cmd->add_option("FILE", file)->required();
    eval_cmd->add_option("WORD", word, "word (\"\" for the empty word)")->required();

    auto* wa_cmd = app.add_subcommand("wa-eval", "Evaluate a weighted automaton on a word");
    wa_cmd->add_option("FILE", file)->required();
    wa_cmd->add_option("WORD", word)->required();

    auto* rla_cmd = app.add_subcommand("rla-eval", "Evaluate a CRA with lookahead on a word");
    rla_cmd->add_option("FILE", file)->required();
    rla_cmd->add_option("WORD", word)->required();

    auto* check_cmd = app.add_subcommand("check", "Report copyless/normal-form/stability/alternation facts");
    check_cmd->add_option("FILE", file)->required();
    check_cmd->add_option("--max-len", max_len, "word length bound for the alternation measurement");

    auto* norm_cmd = app.add_subcommand("normalize", "Print an equivalent CRA in normal form");
    norm_cmd->add_option("FILE", file)->required();
    norm_cmd->add_option("--order", order, "registers in increasing order, comma separated");

    auto* zero_cmd = app.add_subcommand("remove-zeros", "Print an equivalent CRA without zero constants");
    zero_cmd->add_option("FILE", file)->required();

    auto* collapse_cmd = app.add_subcommand("collapse-word", "Find a collapse word between two states");
    collapse_cmd->add_option("FILE", file)->required();
    collapse_cmd->add_option("--from", from)->required();
    collapse_cmd->add_option("--to", to)->required();

    auto* elim_cmd = app.add_subcommand("eliminate-lookahead", "Print an equivalent CRA without lookahead");
    elim_cmd->add_option("FILE", file, "rla or ucra file")->required();
    elim_cmd->add_option("--max-states", max_states);

    auto* equiv_cmd = app.add_subcommand("equiv", "Compare two machines on all short words (and random ones)");
    equiv_cmd->add_option("FILE1", file)->required();
    equiv_cmd->add_option("FILE2", file2)->required();
    equiv_cmd->add_option("--max-len", max_len)->required();
    equiv_cmd->add_option("--random", random_count);
    equiv_cmd->add_option("--len", random_len);
    equiv_cmd->add_option("--seed", seed);

    auto* amb_cmd = app.add_subcommand("ambiguity", "Largest number of accepting runs per word length");
    amb_cmd->add_option("FILE", file)->required();
    amb_cmd->add_option("--max-len", max_len)->required();

    auto* dot_cmd = app.add_subcommand("dot", "Print a Graphviz description");
    dot_cmd->add_option("FILE", file)->required();

    auto* corpus_cmd = app.add_subcommand("corpus", "Reference machines");
    corpus_cmd->require_subcommand(1);
    auto* emit_cmd = corpus_cmd->add_subcommand("emit", "Write the reference machines to DIR");
    emit_cmd->add_option("DIR", dir)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*eval_cmd) {
            Machine m = load_machine(file);
            if (std::holds_alternative<Cra>(m))
                std::cout << eval(std::get<Cra>(m), word).str() << "\n";
            else if (std::holds_alternative<UCra>(m))
                std::cout << ucra_eval(std::get<UCra>(m), word).str() << "\n";
            else
                throw Error(ErrorKind::Semantic, file + ": expected a cra or ucra file");
        } else if (*wa_cmd) {
            std::cout << wa_eval(load_as<WeightedAutomaton>(file, "wa"), word).str() << "\n";
        } else if (*rla_cmd) {
            std::cout << rla_eval(load_as<CraRla>(file, "rla"), word).str() << "\n";
        } else if (*check_cmd) {
            return check(file, max_len);
        } else if (*norm_cmd) {
            Cra a = load_as<Cra>(file, "cra");
            RegisterOrder o = order.empty() ? RegisterOrder::natural(a.num_registers()) : parse_order(a, order);
            std::cout << serialize(normalize(a, o));
        } else if (*zero_cmd) {
            std::cout << serialize(remove_zeros(load_as<Cra>(file, "cra")));
        } else if (*collapse_cmd) {
            Cra a = load_as<Cra>(file, "cra");
            auto cw = collapse_word(a, a.state_index(from), a.state_index(to));
            std::cout << "word: " << cw.word << "\n";
            std::cout << "update: " << to_string(cw.update, a.names(), true) << "\n";
        } else if (*elim_cmd) {
            std::cout << serialize(determinize(load_unambiguous(file), max_states).cra);
        } else if (*equiv_cmd) {
            Machine m1 = load_machine(file), m2 = load_machine(file2);
            std::string alpha = alphabet_of(m1);
            if (alpha != alphabet_of(m2)) throw Error(ErrorKind::Alphabet, "the two machines have different alphabets");
            auto v = equiv_harness(word_function(m1), word_function(m2), alpha, max_len, random_count, random_len, seed);
            if (v.equivalent) {
                std::cout << "equivalent (" << v.checked << " words checked)\n";
                return 0;
            }
            std::cout << "mismatch on \"" << v.witness << "\": " << v.left << " vs " << v.right << "\n";
            return 1;
        } else if (*amb_cmd) {
            Machine m = load_machine(file);
            std::vector<std::size_t> profile;
            if (const auto* u = std::get_if<UCra>(&m)) {
                profile.assign(max_len + 1, 0);
                for_each_word(u->alphabet, max_len, [&](const std::string& w) {
                    profile[w.size()] = std::max(profile[w.size()], ucra_accepting_runs(*u, w));
                });
            } else if (const auto* w = std::get_if<WeightedAutomaton>(&m)) {
                profile = ambiguity_profile(*w, max_len);
            } else {
                throw Error(ErrorKind::Semantic, file + ": expected a wa or ucra file");
            }
            for (std::size_t n = 0; n < profile.size(); ++n) std::cout << n << ": " << profile[n] << "\n";
        } else if (*dot_cmd) {
            std::cout << to_dot(load_machine(file));
        } else if (*emit_cmd) {
            emit_corpus(dir);
            for (const auto& f : corpus_files()) std::cout << dir << "/" << f.name << "\n";
        }
    } catch (const Error& e) {
        std::cerr << "error (" << kind_name(e.kind()) << "): " << e.what();
        if (e.witness()) std::cerr << " [word: \"" << *e.witness() << "\"]";
        std::cerr << "\n";
        return 2;
    }
    return 0;
}
