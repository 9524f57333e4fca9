#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "cra/error.hpp"
#include "cra/subst.hpp"
#include "support.hpp"

using namespace cra;
using testing::px;

namespace {
const Semiring nat(SemiringKind::Nat), maxplus(SemiringKind::MaxPlus);

Substitution subst(std::initializer_list<const char*> images, Semiring sr = maxplus) {
    std::vector<Expr> im;
    for (const char* t : images) im.push_back(px(t, sr));
    return Substitution(std::move(im));
}

std::vector<VarId> intersect(std::vector<VarId> a, const std::vector<VarId>& b) {
    std::vector<VarId> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

const NameFn xyz = [](VarId v) { return std::string(1, "xyz"[v]); };
}  // namespace

TEST_CASE("application") {
    CHECK(apply(subst({"2 * x", "3 * y"}), px("x + y")) == px("2 * x + 3 * y"));
    CHECK(apply(Substitution::identity(3), px("x * (y + z)")) == px("x * (y + z)"));
    CHECK(apply(subst({"5"}), px("x * x")) == px("5 * 5"));
    CHECK_THROWS_AS(apply(subst({"5"}), px("x * y")), Error);
    CHECK(apply(subst({"5"}), px("x * y"), true) == px("5 * y"));
}

TEST_CASE("composition order") {
    // register x is id 0, y is id 1
    Substitution on_a = subst({"0", "x + y"});    // x := 0, y := x + y
    Substitution on_b = subst({"x * 1", "y"});    // x := x * 1
    Substitution ab = compose(on_b, on_a);         // read a, then b
    CHECK(ab[1] == px("x * 1 + y"));
    CHECK(ab[0] == px("0"));
    CHECK(compose(Substitution::identity(2), on_a) == on_a);
    CHECK(is_ground(compose(subst({"1", "2"}), subst({"3", "4"}))));
}

TEST_CASE("copylessness") {
    CHECK(is_copyless(subst({"0", "x + y"})));
    CHECK_FALSE(is_copyless(subst({"x", "x"})));
    CHECK_FALSE(is_copyless(subst({"y + y", "x"})));
    CHECK(is_copyless(subst({"y", "x"})));
}

TEST_CASE("normal form") {
    RegisterOrder y_below_x({1, 0});
    CHECK(is_normal_form(subst({"3", "x + y"}), y_below_x));
    CHECK_FALSE(is_normal_form(subst({"3", "x + y"}), RegisterOrder::natural(2)));
    CHECK_FALSE(is_normal_form(subst({"y", "x"}), RegisterOrder::natural(2)));
    CHECK(is_normal_form(Substitution::identity(3), RegisterOrder::natural(3)));
    CHECK(y_below_x.leq(1, 0));
    CHECK_FALSE(y_below_x.leq(0, 1));
}

TEST_CASE("stable registers of a substitution") {
    CHECK(stable_vars(subst({"0", "x + y"})) == std::vector<VarId>{1});
    CHECK(stable_vars(Substitution::identity(3)) == std::vector<VarId>{0, 1, 2});
    CHECK(stable_vars(subst({"1", "2", "3"})).empty());
}

TEST_CASE("collapse") {
    std::vector<VarId> all{0, 1};
    CHECK(is_collapse(subst({"x * 1", "y + 2"}), all));
    std::vector<VarId> only_y{1};
    CHECK(is_collapse(subst({"3", "y"}), only_y));
    CHECK_FALSE(is_collapse(subst({"x * 1", "y"}), only_y));
}

TEST_CASE("evaluation and powers") {
    Substitution s = subst({"x * 2", "x + y"});
    auto v = evaluate(s, maxplus, std::vector<Value>{3, 1});
    CHECK(v == std::vector<Value>{5, 3});
    Substitution p = power(subst({"x * 2"}), 3);
    CHECK(evaluate(p[0], maxplus, std::vector<Value>{1}) == Value(7));
    CHECK(power(s, 0) == Substitution::identity(2));
}

TEST_CASE("printing") {
    CHECK(to_string(subst({"0", "x + y"}), xyz) == "x := 0 ; y := x + y");
    CHECK(to_string(subst({"x", "y * 1"}), xyz) == "y := y * 1");
    CHECK(to_string(Substitution::identity(2), xyz).empty());
    CHECK(to_string(Substitution::identity(2), xyz, true) == "x := x ; y := y");
}

TEST_CASE("composition properties on random substitutions") {
    testing::Rng rng(21);
    testing::GenOptions opt;
    for (int i = 0; i < 200; ++i) {
        Semiring sr = i % 2 ? nat : maxplus;
        opt.max_const = sr == nat ? 3 : 5;
        Substitution s1 = testing::random_substitution(rng, 3, sr, false, opt);
        Substitution s2 = testing::random_substitution(rng, 3, sr, false, opt);
        Expr e = testing::random_copyless(rng, {0, 1, 2}, sr, opt);
        CHECK(testing::same_values(apply(compose(s1, s2), e), apply(s1, apply(s2, e)), sr, 3, 20, i));
        CHECK(is_copyless(compose(s1, s2)));

        Substitution n1 = testing::random_substitution(rng, 3, sr, true, opt);
        Substitution n2 = testing::random_substitution(rng, 3, sr, true, opt);
        CHECK(is_normal_form(n1, RegisterOrder::natural(3)));
        CHECK(is_normal_form(compose(n1, n2), RegisterOrder::natural(3)));
    }
}

TEST_CASE("stability of a composition is the intersection") {
    testing::Rng rng(22);
    testing::GenOptions opt;
    for (int i = 0; i < 500; ++i) {
        std::size_t n = 1 + i % 3;
        Substitution s1 = testing::random_substitution(rng, n, maxplus, true, opt);
        Substitution s2 = testing::random_substitution(rng, n, maxplus, true, opt);
        CHECK(stable_vars(compose(s1, s2)) == intersect(stable_vars(s1), stable_vars(s2)));
    }
}
