#pragma once

#include <compare>
#include <string>
#include <variant>

namespace homdist
{
    struct PositiveInfinity
    {
        auto operator==(const PositiveInfinity &) const -> bool = default;
    };

    inline constexpr PositiveInfinity infinity{};

    /// A non-negative real or +inf. The infimum over an empty homomorphism set
    /// is +inf, and it is carried as its own alternative rather than as a
    /// floating-point sentinel.
    class ExtendedReal
    {
    public:
        constexpr ExtendedReal() : _value(0.0) {}
        constexpr ExtendedReal(double value) : _value(value) {}
        constexpr ExtendedReal(PositiveInfinity) : _value(PositiveInfinity{}) {}

        [[nodiscard]] constexpr auto is_infinite() const -> bool { return std::holds_alternative<PositiveInfinity>(_value); }
        [[nodiscard]] constexpr auto is_finite() const -> bool { return ! is_infinite(); }

        /// Throws std::bad_variant_access on +inf.
        [[nodiscard]] constexpr auto value() const -> double { return std::get<double>(_value); }

        constexpr auto operator==(const ExtendedReal & other) const -> bool = default;

        constexpr auto operator<=>(const ExtendedReal & other) const -> std::partial_ordering
        {
            if (is_infinite())
                return other.is_infinite() ? std::partial_ordering::equivalent : std::partial_ordering::greater;
            if (other.is_infinite())
                return std::partial_ordering::less;
            return value() <=> other.value();
        }

    private:
        std::variant<double, PositiveInfinity> _value;
    };

    [[nodiscard]] inline auto max(const ExtendedReal & a, const ExtendedReal & b) -> ExtendedReal
    {
        return a < b ? b : a;
    }

    [[nodiscard]] inline auto min(const ExtendedReal & a, const ExtendedReal & b) -> ExtendedReal
    {
        return b < a ? b : a;
    }

    /// "inf" for +inf, otherwise 17 significant digits.
    [[nodiscard]] auto to_string(const ExtendedReal & x) -> std::string;

    /// Inverse of to_string; throws DataError on anything else.
    [[nodiscard]] auto parse_extended_real(const std::string & text) -> ExtendedReal;

    /// 17 significant digits, the shortest width that round-trips every double.
    [[nodiscard]] auto format_double(double x) -> std::string;
}
