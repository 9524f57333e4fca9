#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

#include "cra/format.hpp"

namespace cra {

using WordFn = std::function<Value(std::string_view)>;

struct HarnessVerdict {
    bool equivalent = true;
    std::size_t checked = 0;
    std::string witness;
    std::string left, right;  // printed values (or error messages) on the witness
};

// All words up to max_len, then random_count random words of length random_len.
// Exceptions thrown by f or g are compared by message.
HarnessVerdict equiv_harness(const WordFn& f, const WordFn& g, std::string_view alphabet, unsigned max_len,
                             unsigned random_count = 0, unsigned random_len = 0, std::uint64_t seed = 1);

// Word semantics of any machine kind (deterministic, unambiguous, lookahead, weighted).
WordFn word_function(const Machine& m);
std::string alphabet_of(const Machine& m);

}  // namespace cra
