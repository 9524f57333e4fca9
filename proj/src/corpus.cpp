#include "cra/corpus.hpp"

#include <filesystem>
#include <fstream>

#include "cra/error.hpp"

namespace cra {

namespace {

const char* const kA1 = R"(kind: cra
semiring: max-plus
alphabet: a b
states: q
registers: y x
start: q
init: y = 0
init: x = 0
trans: q --a--> q [ y := x + y ; x := 0 ]
trans: q --b--> q [ x := x * 1 ]
output: q = x + y
)";

const char* const kA2 = R"(kind: cra
semiring: max-plus
alphabet: a b #
states: q
registers: z x y
start: q
init: z = 0
init: x = 0
init: y = 0
trans: q --a--> q [ x := x * 1 ]
trans: q --b--> q [ y := y * 1 ]
trans: q --#--> q [ z := z * (x + y) ; x := 0 ; y := 0 ]
output: q = z * (x + y)
)";

const char* const kB = R"(kind: cra
semiring: max-plus
alphabet: a b #
states: q
registers: x y
start: q
init: x = 0
init: y = 0
trans: q --a--> q [ x := x * 1 ]
trans: q --b--> q [ y := y * 1 ]
trans: q --#--> q [ x := x + y ; y := 0 ]
output: q = x + y
)";

const char* const kSwap = R"(kind: cra
semiring: max-plus
alphabet: a b
states: q1 q2
registers: x y
start: q1
init: x = 0
init: y = 0
trans: q1 --a--> q1 [ x := x * 1 ]
trans: q1 --b--> q2 [ x := y * 1 ; y := x ]
trans: q2 --a--> q2 [ y := y * 1 ]
trans: q2 --b--> q1 [ x := y ; y := x * 1 ]
output: q1 = x
output: q2 = y
)";

const char* const kAPrime = R"(kind: wa
semiring: max-plus
alphabet: a b #
state p0 I=0 F=0
state p1 I=0 F=0
state p2 I=-inf F=0
edge p0 -a/1-> p0
edge p0 -b/0-> p0
edge p0 -#/0-> p0
edge p0 -#/0-> p1
edge p1 -a/0-> p1
edge p1 -b/1-> p1
edge p1 -#/0-> p2
edge p2 -a/0-> p2
edge p2 -b/0-> p2
edge p2 -#/0-> p2
)";

const char* const kR1 = R"(kind: rla
semiring: max-plus
alphabet: a b #
states: q
registers: x
lang later_b {
  states: s0 s1 s2 d
  start: s0
  final: s2
  trans: s0 -a-> s1
  trans: s0 -b-> d
  trans: s0 -#-> d
  trans: s1 -a-> s1
  trans: s1 -b-> s2
  trans: s1 -#-> s1
  trans: s2 -a-> s2
  trans: s2 -b-> s2
  trans: s2 -#-> s2
  trans: d -a-> d
  trans: d -b-> d
  trans: d -#-> d
}
lang otherwise {
  states: s0 s1 s2 d
  start: s0
  final: s0 s1 d
  trans: s0 -a-> s1
  trans: s0 -b-> d
  trans: s0 -#-> d
  trans: s1 -a-> s1
  trans: s1 -b-> s2
  trans: s1 -#-> s1
  trans: s2 -a-> s2
  trans: s2 -b-> s2
  trans: s2 -#-> s2
  trans: d -a-> d
  trans: d -b-> d
  trans: d -#-> d
}
start: q
init: x = 0
trans: q --[later_b]--> q [ x := x * 1 ]
trans: q --[otherwise]--> q [ ]
output: q = x
)";

const char* const kR2 = R"(kind: rla
semiring: max-plus
alphabet: a b
states: s t
registers: x y
alt-bound: 3
lang a_then_b {
  states: s0 s1 s2 d
  start: s0
  final: s2
  trans: s0 -a-> s1
  trans: s0 -b-> d
  trans: s1 -a-> s1
  trans: s1 -b-> s2
  trans: s2 -a-> s2
  trans: s2 -b-> s2
  trans: d -a-> d
  trans: d -b-> d
}
lang only_a {
  states: u0 u1 d
  start: u0
  final: u1
  trans: u0 -a-> u1
  trans: u0 -b-> d
  trans: u1 -a-> u1
  trans: u1 -b-> d
  trans: d -a-> d
  trans: d -b-> d
}
lang starts_b {
  states: v0 v1 d
  start: v0
  final: v1
  trans: v0 -a-> d
  trans: v0 -b-> v1
  trans: v1 -a-> v1
  trans: v1 -b-> v1
  trans: d -a-> d
  trans: d -b-> d
}
lang any {
  states: w
  start: w
  final: w
  trans: w -a-> w
  trans: w -b-> w
}
start: s
init: x = 0
init: y = 0
trans: s --[a_then_b]--> s [ x := x * 1 ]
trans: s --[only_a]--> t [ x := 0 ; y := (x + y) * 2 ]
trans: s --[starts_b]--> s [ x := 0 ; y := x + y ]
trans: t --[any]--> t [ y := y * 2 ]
output: s = x + y
output: t = y * 1
)";

const char* const kAmbiguous = R"(kind: ucra
semiring: max-plus
alphabet: a b
states: p q r s
registers: x
start: p
final: p q s
init: x = 0
trans: p --a--> q [ x := x * 1 ]
trans: p --a--> r [ x := x * 2 ]
trans: p --b--> p [ ]
trans: q --a--> q [ ]
trans: r --a--> r [ ]
trans: q --b--> s [ ]
trans: r --b--> s [ x := x * 3 ]
trans: s --a--> s [ ]
trans: s --b--> s [ ]
output: p = x
output: q = x
output: r = x
output: s = x
)";

const char* const kTropical = "# Semiring max-plus: '+' is max, '*' is numeric addition, -inf is the zero.\n";

}  // namespace

Cra corpus_a1() { return parse_cra(kA1); }
Cra corpus_a2() { return parse_cra(kA2); }
Cra corpus_b() { return parse_cra(kB); }
Cra corpus_swap() { return parse_cra(kSwap); }
WeightedAutomaton corpus_a_prime() { return parse_wa(kAPrime); }
CraRla corpus_r1() { return parse_rla(kR1); }
CraRla corpus_r2() { return parse_rla(kR2); }
UCra corpus_ambiguous() { return parse_ucra(kAmbiguous); }

std::vector<CorpusFile> corpus_files() {
    auto file = [](const char* name, const char* what, const char* text) {
        return CorpusFile{name, std::string("# ") + what + "\n" + kTropical + serialize(parse_machine(text))};
    };
    return {
        file("a1.cra", "Longest block of consecutive b's.", kA1),
        file("a2.cra", "Sum over #-separated blocks of max(number of a's, number of b's).", kA2),
        file("b.cra", "Blockwise: b's of some block plus a's of all later blocks, or all a's.", kB),
        file("swap.cra", "Counts a's; the two registers swap roles on every b (not in normal form).", kSwap),
        file("a_prime.wa", "Reverse of b.cra as a linearly ambiguous weighted automaton.", kAPrime),
        file("r1.rla", "Counts the a's that have some b later in the word.", kR1),
        file("r2.rla", "Two-state machine with lookahead; mixes max and plus.", kR2),
        file("ambiguous.ucra", "Two accepting runs on \"ab\"; determinization reports it.", kAmbiguous),
    };
}

void emit_corpus(const std::string& dir) {
    std::filesystem::create_directories(dir);
    for (const auto& f : corpus_files()) {
        std::ofstream out(std::filesystem::path(dir) / f.name, std::ios::binary);
        if (!out) throw Error(ErrorKind::Semantic, "cannot write " + f.name);
        out << f.text;
    }
}

}  // namespace cra
