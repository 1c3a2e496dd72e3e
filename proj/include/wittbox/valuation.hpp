#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace wittbox {

// Additive p-adic valuation with a distinguished +infinity (valuation of 0).
class Valuation {
public:
    constexpr explicit Valuation(std::int64_t value) : value_(value) {}

    static constexpr Valuation infinity() { return Valuation(); }

    constexpr bool is_infinite() const noexcept { return !value_.has_value(); }
    // Throws std::bad_optional_access on infinity.
    constexpr std::int64_t value() const { return value_.value(); }

    // True iff the valuation is at least `bound`; infinity satisfies every bound.
    constexpr bool at_least(std::int64_t bound) const noexcept {
        return is_infinite() || *value_ >= bound;
    }

    std::string to_string() const { return is_infinite() ? "inf" : std::to_string(*value_); }

    friend constexpr bool operator==(const Valuation&, const Valuation&) = default;
    friend constexpr std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
        if (a.is_infinite() || b.is_infinite()) {
            return a.is_infinite() <=> b.is_infinite();
        }
        return *a.value_ <=> *b.value_;
    }

private:
    constexpr Valuation() = default;
    std::optional<std::int64_t> value_;
};

// ord_p of a nonnegative integer; 0 maps to infinity.
inline Valuation ord_p_of_count(std::uint64_t n, std::uint64_t p) {
    if (n == 0) return Valuation::infinity();
    std::int64_t e = 0;
    while (n % p == 0) {
        n /= p;
        ++e;
    }
    return Valuation(e);
}

}  // namespace wittbox
