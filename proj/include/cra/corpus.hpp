#pragma once

#include <string>
#include <vector>

#include "cra/format.hpp"

namespace cra {

// Reference machines, all over max-plus.
Cra corpus_a1();      // longest block of b's
Cra corpus_a2();      // sum over #-blocks of max(#a, #b)
Cra corpus_b();       // see ref_fB
Cra corpus_swap();    // counts a's while swapping registers on b
WeightedAutomaton corpus_a_prime();  // reverse of B, linearly ambiguous
CraRla corpus_r1();   // a's followed later by some b
CraRla corpus_r2();
UCra corpus_ambiguous();  // "ab" has two accepting runs

struct CorpusFile {
    std::string name;  // file name
    std::string text;  // comment header + canonical serialization
};
std::vector<CorpusFile> corpus_files();
void emit_corpus(const std::string& dir);

}  // namespace cra
