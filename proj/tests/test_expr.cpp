#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "cra/error.hpp"
#include "cra/expr.hpp"
#include "support.hpp"

using namespace cra;
using testing::px;

namespace {
const Semiring nat(SemiringKind::Nat), maxplus(SemiringKind::MaxPlus);

std::vector<Value> vals(std::initializer_list<Value> v) { return v; }

// Layers of alternating operators, counted directly on the unflattened tree.
unsigned layers(const Expr& e, int parent = -1) {
    if (!e.is_op()) return 0;
    unsigned best = 0;
    for (const auto& c : e.children()) best = std::max(best, layers(c, static_cast<int>(e.kind())));
    return best + (static_cast<int>(e.kind()) == parent ? 0 : 1);
}

bool has_zero_const(const Expr& e, Semiring sr) {
    if (e.is_const()) return sr.is_zero(e.value());
    for (const auto& c : e.children())
        if (has_zero_const(c, sr)) return true;
    return false;
}
}  // namespace

TEST_CASE("evaluation") {
    CHECK(evaluate(px("(x + y) * 2"), maxplus, vals({3, 5})) == Value(7));
    CHECK(evaluate(px("(x + y) * 2", nat), nat, vals({3, 5})) == Value(16));
    CHECK(evaluate(Expr::constant(4), maxplus, {}) == Value(4));
    CHECK(evaluate(px("x * -inf"), maxplus, vals({3})) == Value::minus_inf());
    CHECK_THROWS_AS(evaluate(px("x + y"), maxplus, vals({1})), Error);
}

TEST_CASE("variables and copylessness") {
    CHECK(vars(px("(x + y) * 2")) == std::vector<VarId>{0, 1});
    CHECK(vars(Expr::constant(4)).empty());
    CHECK(vars(px("x * (y + x)")) == std::vector<VarId>{0, 1});
    CHECK(is_copyless(px("x * (y + z)")));
    CHECK_FALSE(is_copyless(px("(x * y) + (x * z)")));
    CHECK(is_copyless(px("x")));
    CHECK(is_ground(px("3 * (4 + 5)")));
    CHECK_FALSE(is_ground(px("3 * y")));
    CHECK(occurs(px("3 * y"), 1));
    CHECK(size(px("x + y * 2")) == 5);
}

TEST_CASE("zero reduction") {
    const Expr zero = Expr::constant(maxplus.zero());
    CHECK(reduce_zeros(px("x + -inf"), maxplus) == px("x"));
    CHECK(reduce_zeros(px("x * -inf"), maxplus) == zero);
    CHECK(reduce_zeros(px("x * 2"), maxplus) == px("x * 2"));
    CHECK(reduce_zeros(px("(x * ZERO) + (y * 3) + ZERO"), maxplus) == px("y * 3"));
    CHECK(reduce_zeros(px("x * 0", nat), nat) == Expr::constant(0));
    CHECK(is_zero_reduced(px("y * 3"), maxplus));
    CHECK_FALSE(is_zero_reduced(px("y * 3 + -inf"), maxplus));
}

TEST_CASE("zero reduction on random expressions") {
    testing::Rng rng(3);
    testing::GenOptions opt;
    opt.allow_zero = true;
    for (int i = 0; i < 300; ++i) {
        Semiring sr = i % 2 ? nat : maxplus;
        Expr e = testing::random_copyless(rng, {0, 1, 2, 3}, sr, opt);
        Expr r = reduce_zeros(e, sr);
        CHECK((!has_zero_const(r, sr) || (r.is_const() && sr.is_zero(r.value()))));
        CHECK(is_copyless(r));
        CHECK(testing::same_values(e, r, sr, 4, 50, i));
    }
}

TEST_CASE("flattening") {
    Expr e = px("((x * (y * 2)) + 3) + (z * 4)");
    Expr f = flatten(e);
    REQUIRE(f.kind() == ExprKind::Add);
    REQUIRE(f.children().size() == 3);
    CHECK(f.children()[0] == px("x * y * 2"));
    CHECK(f.children()[1] == px("3"));
    CHECK(f.children()[2] == px("z * 4"));
    CHECK(flatten(f) == f);
    CHECK(flatten(px("(x + y) + z")) == px("x + y + z"));
    CHECK(is_flat(f));
    CHECK_FALSE(is_flat(e));
}

TEST_CASE("alternation") {
    CHECK(alternation(px("x")) == 0);
    CHECK(alternation(px("x + y")) == 1);
    CHECK(alternation(px("((x * (y * 2)) + 3) + (z * 4)")) == 2);
    CHECK(alternation(px("(x + y) + z")) == 1);
    CHECK(depth(px("(x + y) + z")) == 2);
}

TEST_CASE("alternation matches layer count on random expressions") {
    testing::Rng rng(5);
    testing::GenOptions opt;
    opt.max_depth = 5;
    for (int i = 0; i < 300; ++i) {
        Expr e = testing::random_copyless(rng, {0, 1, 2, 3, 4, 5}, maxplus, opt);
        CHECK(alternation(e) == layers(e));
        CHECK(alternation(flatten(e)) == alternation(e));
        CHECK(testing::same_values(e, flatten(e), maxplus, 6, 20, i));
    }
}

TEST_CASE("monomial form") {
    auto m = monomial_form(px("x * (y + z)", nat), nat);
    REQUIRE(m.size() == 2);
    CHECK(m[0].coeff == Value(1));
    CHECK(m[0].vars == std::vector<VarId>{0, 1});
    CHECK(m[1].coeff == Value(1));
    CHECK(m[1].vars == std::vector<VarId>{0, 2});

    auto c = monomial_form(Expr::constant(7), nat);
    REQUIRE(c.size() == 1);
    CHECK(c[0].coeff == Value(7));
    CHECK(c[0].vars.empty());

    auto v = monomial_form(px("x"), maxplus);
    REQUIRE(v.size() == 1);
    CHECK(v[0].coeff == maxplus.one());
    CHECK(v[0].vars == std::vector<VarId>{0});

    // equal variable sets are merged, zero coefficients dropped
    auto merged = monomial_form(px("(2 + 3) * x + y * 0", nat), nat);
    REQUIRE(merged.size() == 1);
    CHECK(merged[0].coeff == Value(5));
    CHECK(merged[0].vars == std::vector<VarId>{0});
}

TEST_CASE("monomial form on random expressions") {
    testing::Rng rng(8);
    testing::GenOptions opt;
    opt.allow_zero = true;
    opt.max_const = 3;
    for (int i = 0; i < 200; ++i) {
        Expr e = testing::random_copyless(rng, {0, 1, 2, 3, 4}, nat, opt);
        auto m = monomial_form(e, nat);
        std::set<std::vector<VarId>> seen;
        for (const auto& mono : m) {
            CHECK(seen.insert(mono.vars).second);
            CHECK_FALSE(nat.is_zero(mono.coeff));
        }
        for (int s = 0; s < 50; ++s) {
            auto val = testing::random_valuation(rng, 5, nat, 9, true);
            CHECK(evaluate(m, nat, val) == evaluate(e, nat, val));
        }
    }
}

TEST_CASE("affine form") {
    CHECK(affine_form(px("x"), 0, maxplus) == std::pair{maxplus.one(), maxplus.zero()});
    CHECK(affine_form(px("(x + 2) * 3", nat), 0, nat) == std::pair{Value(3), Value(6)});
    CHECK(affine_form(px("(x * 5) + 3"), 0, maxplus) == std::pair{Value(5), Value(3)});
    CHECK(affine_form(px("7"), 0, maxplus) == std::pair{maxplus.zero(), Value(7)});
    CHECK_THROWS_AS(affine_form(px("x * y"), 0, maxplus), Error);
}

TEST_CASE("affine form agrees with the expression") {
    testing::Rng rng(9);
    testing::GenOptions opt;
    opt.max_const = 3;
    for (int i = 0; i < 100; ++i) {
        Semiring sr = i % 2 ? nat : maxplus;
        Expr e = testing::random_copyless(rng, {0}, sr, opt);
        auto [c, d] = affine_form(e, 0, sr);
        for (int s = 0; s < 200; ++s) {
            auto v = testing::random_valuation(rng, 1, sr, 1000, true);
            CHECK(sr.add(sr.mul(c, v[0]), d) == evaluate(e, sr, v));
        }
    }
}

TEST_CASE("sampled equivalence") {
    CHECK(equiv_check(px("x + y"), px("y + x"), maxplus, 100, 1).equivalent);
    CHECK(equiv_check(px("x"), px("x * ONE"), maxplus, 100, 1).equivalent);
    auto v = equiv_check(px("x"), px("y"), maxplus, 100, 1);
    CHECK_FALSE(v.equivalent);
    REQUIRE(v.counterexample.size() >= 2);
    CHECK_FALSE(v.counterexample[0] == v.counterexample[1]);
    // distributivity holds in every semiring
    CHECK(equiv_check(px("x * (y + z)", nat), px("x * y + x * z", nat), nat, 100, 2).equivalent);
    CHECK(equiv_check(px("x * (y + z)"), px("x * y + x * z"), maxplus, 100, 2).equivalent);
    // x + x = x only in idempotent semirings
    CHECK(equiv_check(px("x + x"), px("x"), maxplus, 100, 3).equivalent);
    CHECK_FALSE(equiv_check(px("x + x", nat), px("x", nat), nat, 100, 3).equivalent);
}

TEST_CASE("printing and parsing round-trip") {
    for (const char* text : {"x", "x + y", "x * y + z", "(x + y) * z", "x * (y + z) * 2", "((x + y) + z) * u",
                             "x + (y + z)", "-inf + 3", "(x * y) * z"}) {
        Expr e = px(text);
        CHECK(px(to_string(e, [](VarId v) { return std::string(1, "xyzuvw"[v]); })) == e);
    }
    CHECK(to_string(px("(x + y) * 2"), [](VarId v) { return std::string(1, "xyz"[v]); }) == "(x + y) * 2");
    CHECK(to_string(px("x * y + z"), [](VarId v) { return std::string(1, "xyz"[v]); }) == "x * y + z");
    CHECK(to_string(px("x")) == "r0");

    testing::Rng rng(4);
    testing::GenOptions opt;
    opt.allow_zero = true;
    for (int i = 0; i < 300; ++i) {
        Expr e = testing::random_copyless(rng, {0, 1, 2, 3, 4, 5}, maxplus, opt);
        CHECK(px(to_string(e, [](VarId v) { return std::string(1, "xyzuvw"[v]); })) == e);
    }
}

TEST_CASE("parse errors carry positions") {
    auto error_at = [](const char* text, int line, int column) {
        try {
            px(text);
            FAIL("no error for " << text);
        } catch (const ParseError& e) {
            CHECK(e.line() == line);
            CHECK(e.column() == column);
        }
    };
    error_at("x +", 1, 4);
    error_at("x + q", 1, 5);
    error_at("(x + y", 1, 7);
    error_at("x $ y", 1, 3);
    try {
        parse_expr("x + q", maxplus, [](std::string_view id) -> VarId {
            if (id == "x") return 0;
            throw Error(ErrorKind::Semantic, "unknown");
        }, 7, 20);
        FAIL("expected an error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 7);
        CHECK(e.column() == 24);
    }
}

TEST_CASE("canonical keys ignore child order") {
    CHECK(canonical_key(px("x + y * z")) == canonical_key(px("z * y + x")));
    CHECK(canonical_key(px("x + y")) != canonical_key(px("x * y")));
    CHECK(canonical_order(px("z * y + x")) == canonical_order(px("x + y * z")));
}

TEST_CASE("renaming and substitution") {
    CHECK(rename(px("x + y"), [](VarId v) { return v + 1; }) == px("y + z"));
    Expr s = substitute(px("x * y"), [](VarId v) { return v == 0 ? px("z + 1") : Expr::var(v); });
    CHECK(s == px("(z + 1) * y"));
}
