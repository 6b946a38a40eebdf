#pragma once

#include <span>
#include <string>

namespace homdist
{
    enum class Norm
    {
        l2,
        linf
    };

    [[nodiscard]] auto to_string(Norm norm) -> std::string;
    [[nodiscard]] auto parse_norm(const std::string & text) -> Norm;

    /// ||a - b|| under the chosen norm. Spans must have equal length.
    [[nodiscard]] auto feature_distance(std::span<const double> a, std::span<const double> b, Norm norm) -> double;
}
