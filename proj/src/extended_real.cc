#include <homdist/errors.hh>
#include <homdist/extended_real.hh>

#include <charconv>
#include <cmath>
#include <cstdio>

namespace homdist
{
    auto format_double(double x) -> std::string
    {
        char buffer[64];
        std::snprintf(buffer, sizeof(buffer), "%.17g", x);
        return buffer;
    }

    auto to_string(const ExtendedReal & x) -> std::string
    {
        return x.is_infinite() ? std::string{"inf"} : format_double(x.value());
    }

    auto parse_extended_real(const std::string & text) -> ExtendedReal
    {
        if (text == "inf")
            return infinity;
        double value = 0.0;
        auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec != std::errc{} || end != text.data() + text.size() || ! std::isfinite(value))
            throw DataError("cannot parse '" + text + "' as an extended real");
        return value;
    }
}
