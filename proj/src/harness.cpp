#include "cra/harness.hpp"

#include <random>

#include "cra/error.hpp"

namespace cra {

namespace {

std::string outcome(const WordFn& f, std::string_view w) {
    try {
        return f(w).str();
    } catch (const Error& e) {
        return std::string("error: ") + e.what();
    }
}

}  // namespace

HarnessVerdict equiv_harness(const WordFn& f, const WordFn& g, std::string_view alphabet, unsigned max_len,
                             unsigned random_count, unsigned random_len, std::uint64_t seed) {
    HarnessVerdict v;
    auto check = [&](const std::string& w) {
        if (!v.equivalent) return;
        ++v.checked;
        std::string l = outcome(f, w), r = outcome(g, w);
        if (l != r) {
            v.equivalent = false;
            v.witness = w;
            v.left = l;
            v.right = r;
        }
    };
    for_each_word(alphabet, max_len, check);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, alphabet.empty() ? 0 : alphabet.size() - 1);
    for (unsigned i = 0; i < random_count && v.equivalent && !alphabet.empty(); ++i) {
        std::string w;
        for (unsigned j = 0; j < random_len; ++j) w += alphabet[pick(rng)];
        check(w);
    }
    return v;
}

WordFn word_function(const Machine& m) {
    return std::visit(
        [](const auto& x) -> WordFn {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Cra>) return [x](std::string_view w) { return eval(x, w); };
            else if constexpr (std::is_same_v<T, UCra>) return [x](std::string_view w) { return ucra_eval(x, w); };
            else if constexpr (std::is_same_v<T, CraRla>) return [x](std::string_view w) { return rla_eval(x, w); };
            else return [x](std::string_view w) { return wa_eval(x, w); };
        },
        m);
}

std::string alphabet_of(const Machine& m) {
    return std::visit([](const auto& x) { return x.alphabet; }, m);
}

}  // namespace cra
