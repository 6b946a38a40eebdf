#include <homdist/errors.hh>
#include <homdist/norm.hh>

#include <algorithm>
#include <cmath>

namespace homdist
{
    auto to_string(Norm norm) -> std::string
    {
        return norm == Norm::l2 ? "l2" : "linf";
    }

    auto parse_norm(const std::string & text) -> Norm
    {
        if (text == "l2")
            return Norm::l2;
        if (text == "linf")
            return Norm::linf;
        throw DataError("unknown norm '" + text + "' (expected l2 or linf)");
    }

    auto feature_distance(std::span<const double> a, std::span<const double> b, Norm norm) -> double
    {
        if (a.size() != b.size())
            throw DataError("feature vectors of different dimension");
        double acc = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            double diff = std::abs(a[i] - b[i]);
            if (norm == Norm::l2)
                acc += diff * diff;
            else
                acc = std::max(acc, diff);
        }
        return norm == Norm::l2 ? std::sqrt(acc) : acc;
    }
}
