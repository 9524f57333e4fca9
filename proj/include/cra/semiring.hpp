#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace cra {

// A semiring element: a 64-bit integer or one of the two infinities.
class Value {
public:
    enum class Tag : std::uint8_t { Finite, PlusInf, MinusInf };

    constexpr Value() = default;
    constexpr Value(std::int64_t v) : tag_(Tag::Finite), v_(v) {}

    static constexpr Value plus_inf() { return Value(Tag::PlusInf); }
    static constexpr Value minus_inf() { return Value(Tag::MinusInf); }

    constexpr Tag tag() const { return tag_; }
    constexpr bool finite() const { return tag_ == Tag::Finite; }
    constexpr std::int64_t raw() const { return v_; }

    friend constexpr bool operator==(Value a, Value b) {
        return a.tag_ == b.tag_ && (a.tag_ != Tag::Finite || a.v_ == b.v_);
    }
    // Numeric order with -inf < finite < +inf.
    friend constexpr bool operator<(Value a, Value b) {
        return a.rank() < b.rank() || (a.rank() == b.rank() && a.finite() && a.v_ < b.v_);
    }

    std::string str() const;

private:
    constexpr explicit Value(Tag t) : tag_(t) {}
    constexpr int rank() const { return tag_ == Tag::MinusInf ? 0 : tag_ == Tag::Finite ? 1 : 2; }

    Tag tag_ = Tag::Finite;
    std::int64_t v_ = 0;
};

enum class SemiringKind { Nat, MaxPlus, MinPlus };

class Semiring {
public:
    constexpr Semiring(SemiringKind k = SemiringKind::MaxPlus) : kind_(k) {}

    constexpr SemiringKind kind() const { return kind_; }
    Value zero() const;
    Value one() const;
    // Both throw ArithmeticOverflow on int64 overflow and InvalidValue on carrier violations.
    Value add(Value a, Value b) const;
    Value mul(Value a, Value b) const;
    Value pow(Value a, unsigned n) const;
    bool is_zero(Value a) const { return a == zero(); }
    bool valid(Value a) const;
    void check(Value a) const;

    std::string_view name() const;
    static Semiring from_name(std::string_view name);

    friend constexpr bool operator==(Semiring a, Semiring b) { return a.kind_ == b.kind_; }

private:
    SemiringKind kind_;
};

// Literal syntax: integer, -inf, +inf, ZERO, ONE. Throws InvalidValue.
Value parse_value(std::string_view text, Semiring sr);

}  // namespace cra
