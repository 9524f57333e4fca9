#include "cra/semiring.hpp"

#include <charconv>

#include "cra/error.hpp"

namespace cra {

const char* kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::ArithmeticOverflow: return "arithmetic-overflow";
        case ErrorKind::InvalidValue: return "invalid-value";
        case ErrorKind::MissingBinding: return "missing-binding";
        case ErrorKind::CopylessViolation: return "copyless-violation";
        case ErrorKind::NotUnivariate: return "not-univariate";
        case ErrorKind::Alphabet: return "alphabet";
        case ErrorKind::Precondition: return "precondition";
        case ErrorKind::NonZeroViolation: return "non-zero-violation";
        case ErrorKind::DomainMismatch: return "domain-mismatch";
        case ErrorKind::StuckRun: return "stuck-run";
        case ErrorKind::Disjointness: return "disjointness";
        case ErrorKind::Ambiguity: return "ambiguity";
        case ErrorKind::AcceptanceCount: return "acceptance-count";
        case ErrorKind::RegisterBudget: return "register-budget";
        case ErrorKind::StateExplosion: return "state-explosion";
        case ErrorKind::Limit: return "limit";
        case ErrorKind::Syntax: return "syntax";
        case ErrorKind::Semantic: return "semantic";
    }
    return "error";
}

std::string Value::str() const {
    switch (tag_) {
        case Tag::PlusInf: return "+inf";
        case Tag::MinusInf: return "-inf";
        case Tag::Finite: break;
    }
    return std::to_string(v_);
}

Value Semiring::zero() const {
    switch (kind_) {
        case SemiringKind::Nat: return Value(0);
        case SemiringKind::MaxPlus: return Value::minus_inf();
        case SemiringKind::MinPlus: return Value::plus_inf();
    }
    return Value(0);
}

Value Semiring::one() const {
    return kind_ == SemiringKind::Nat ? Value(1) : Value(0);
}

bool Semiring::valid(Value a) const {
    switch (kind_) {
        case SemiringKind::Nat: return a.finite() && a.raw() >= 0;
        case SemiringKind::MaxPlus: return a.tag() != Value::Tag::PlusInf;
        case SemiringKind::MinPlus: return a.tag() != Value::Tag::MinusInf;
    }
    return false;
}

void Semiring::check(Value a) const {
    if (!valid(a))
        throw Error(ErrorKind::InvalidValue, "value " + a.str() + " is not in the " + std::string(name()) + " semiring");
}

static std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorKind::ArithmeticOverflow, "integer overflow in addition");
    return r;
}

static std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorKind::ArithmeticOverflow, "integer overflow in multiplication");
    return r;
}

Value Semiring::add(Value a, Value b) const {
    check(a);
    check(b);
    switch (kind_) {
        case SemiringKind::Nat: return checked_add(a.raw(), b.raw());
        case SemiringKind::MaxPlus: return a < b ? b : a;
        case SemiringKind::MinPlus: return a < b ? a : b;
    }
    return a;
}

Value Semiring::mul(Value a, Value b) const {
    check(a);
    check(b);
    if (kind_ == SemiringKind::Nat) return checked_mul(a.raw(), b.raw());
    if (is_zero(a) || is_zero(b)) return zero();
    return checked_add(a.raw(), b.raw());
}

Value Semiring::pow(Value a, unsigned n) const {
    Value r = one();
    for (unsigned i = 0; i < n; ++i) r = mul(r, a);
    return r;
}

std::string_view Semiring::name() const {
    switch (kind_) {
        case SemiringKind::Nat: return "nat";
        case SemiringKind::MaxPlus: return "max-plus";
        case SemiringKind::MinPlus: return "min-plus";
    }
    return "?";
}

Semiring Semiring::from_name(std::string_view name) {
    if (name == "nat") return Semiring(SemiringKind::Nat);
    if (name == "max-plus") return Semiring(SemiringKind::MaxPlus);
    if (name == "min-plus") return Semiring(SemiringKind::MinPlus);
    throw Error(ErrorKind::InvalidValue, "unknown semiring '" + std::string(name) + "'");
}

Value parse_value(std::string_view text, Semiring sr) {
    Value v;
    if (text == "ZERO") {
        v = sr.zero();
    } else if (text == "ONE") {
        v = sr.one();
    } else if (text == "-inf") {
        v = Value::minus_inf();
    } else if (text == "+inf") {
        v = Value::plus_inf();
    } else {
        std::int64_t n = 0;
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), n);
        if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
            throw Error(ErrorKind::InvalidValue, "malformed value '" + std::string(text) + "'");
        v = n;
    }
    sr.check(v);
    return v;
}

}  // namespace cra
