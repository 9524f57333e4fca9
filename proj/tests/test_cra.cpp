#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cra/corpus.hpp"
#include "cra/error.hpp"
#include "cra/oracles.hpp"
#include "support.hpp"

using namespace cra;
using testing::px;

namespace {
const Semiring maxplus(SemiringKind::MaxPlus);

Cra chain() {
    Cra a(maxplus, "a", {"q0", "q1"}, {"x"});
    a.set(0, 'a', 1, Substitution({px("x * 1")}));
    a.set(1, 'a', 1, Substitution({px("x * 1")}));
    a.output = {px("x"), px("x")};
    a.init = {0};
    return a;
}

// Alternation count done on the unflattened tree: a layer starts wherever the operator changes.
unsigned layers(const Expr& e, int parent = -1) {
    if (!e.is_op()) return 0;
    unsigned best = 0;
    for (const auto& c : e.children()) best = std::max(best, layers(c, static_cast<int>(e.kind())));
    return best + (static_cast<int>(e.kind()) == parent ? 0 : 1);
}
}  // namespace

TEST_CASE("evaluation of the reference machines") {
    Cra a1 = corpus_a1();
    CHECK(eval(a1, "bbabbb") == Value(3));
    CHECK(eval(a1, "") == Value(0));
    CHECK(eval(corpus_b(), "ab#ba") == Value(2));
    CHECK(eval(corpus_a2(), "ab#aab") == Value(3));
    CHECK_THROWS_AS(eval(a1, "abc"), Error);
}

TEST_CASE("undefined transitions") {
    Cra a(maxplus, "ab", {"q"}, {"x"});
    a.set(0, 'a', 0, Substitution::identity(1));
    a.output = {px("x")};
    a.init = {0};
    CHECK(eval(a, "aa") == Value(0));
    try {
        eval(a, "ab");
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::StuckRun);
    }
    CHECK_FALSE(validate(a).total);
}

TEST_CASE("extended transition function") {
    Cra a1 = corpus_a1();  // registers: y (id 0), x (id 1)
    auto [q, s] = delta_star(a1, a1.start, "");
    CHECK(q == a1.start);
    CHECK(s == Substitution::identity(2));
    auto [qb, sb] = delta_star(a1, a1.start, "b");
    CHECK(qb == a1.start);
    CHECK(sb[0] == Expr::var(0));
    CHECK(testing::same_values(sb[1], Expr::mul({Expr::var(1), Expr::constant(1)}), maxplus, 2, 20, 1));
}

TEST_CASE("evaluation equals the composed ground output") {
    for (const Cra& a : {corpus_a1(), corpus_a2(), corpus_b(), corpus_swap()}) {
        for_each_word(a.alphabet, 6, [&](const std::string& w) {
            auto [q, s] = delta_star(a, a.start, w);
            Expr out = apply(compose(Substitution::constants(a.init), s), a.output[q]);
            CHECK(is_ground(out));
            CHECK(evaluate(out, a.sr, {}) == eval(a, w));
            CHECK(evaluate(ground_output_expr(a, w), a.sr, {}) == eval(a, w));
        });
    }
    Cra a1 = corpus_a1();
    CHECK(ground_output_expr(a1, "") == apply(Substitution::constants(a1.init), a1.output[a1.start]));
    CHECK(alternation(ground_output_expr(a1, "b")) <= 2);
}

TEST_CASE("validation") {
    auto r = validate(corpus_a1());
    CHECK(r.copyless);
    CHECK(r.normal_form);
    CHECK(r.total);
    CHECK_FALSE(validate(corpus_swap()).normal_form);
    CHECK(validate(corpus_swap()).copyless);

    Cra bad = corpus_a1();
    bad.output[0] = px("x + x");
    CHECK_FALSE(validate(bad).copyless);
    CHECK_FALSE(validate(bad).problems.empty());
}

TEST_CASE("components") {
    Cra a1 = corpus_a1();
    CHECK(bottom_sccs(a1) == std::vector<std::vector<int>>{{0}});
    CHECK(is_strongly_connected(a1));
    CHECK(bottom_sccs(corpus_swap()) == std::vector<std::vector<int>>{{0, 1}});
    CHECK(is_strongly_connected(corpus_swap()));
    Cra c = chain();
    CHECK(bottom_sccs(c) == std::vector<std::vector<int>>{{1}});
    CHECK_FALSE(is_strongly_connected(c));
    CHECK(sccs(c).size() == 2);
    CHECK(shortest_word(c, 0, 1) == std::optional<std::string>("a"));
    CHECK_FALSE(shortest_word(c, 1, 0).has_value());
}

TEST_CASE("trimming") {
    Cra c = chain();
    c.start = 1;
    CHECK(accessible(c) == std::vector<int>{1});
    Cra t = trim(c);
    CHECK(t.num_states() == 1);
    CHECK(t.states[0] == "q1");
    for_each_word("a", 5, [&](const std::string& w) { CHECK(eval(t, w) == eval(c, w)); });
}

TEST_CASE("largest alternation over short words") {
    CHECK(max_alternation(corpus_a1(), 8) == 2);
    Cra k(maxplus, "a", {"q"}, {"x"});
    k.set(0, 'a', 0, Substitution({px("x * 1")}));
    k.output = {px("5")};
    CHECK(max_alternation(k, 6) == 0);

    Cra a2 = corpus_a2();
    unsigned expected = 0;
    for_each_word(a2.alphabet, 6, [&](const std::string& w) {
        expected = std::max(expected, layers(ground_output_expr(a2, w)));
    });
    CHECK(max_alternation(a2, 6) == expected);
}

TEST_CASE("word enumeration order") {
    std::vector<std::string> words;
    for_each_word("ba", 2, [&](const std::string& w) { words.push_back(w); });
    CHECK(words == std::vector<std::string>{"", "b", "a", "bb", "ba", "ab", "aa"});
}

TEST_CASE("random machines agree with their own composed semantics") {
    testing::Rng rng(31);
    testing::GenOptions opt;
    opt.allow_zero = true;
    for (int i = 0; i < 30; ++i) {
        Cra a = testing::random_cra(rng, maxplus, 3, 3, opt, false);
        CHECK(validate(a).copyless);
        CHECK(validate(a).total);
        for_each_word(a.alphabet, 5, [&](const std::string& w) {
            CHECK(evaluate(ground_output_expr(a, w), a.sr, {}) == eval(a, w));
        });
    }
}
