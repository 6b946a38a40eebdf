#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>

namespace homdist
{
    /// Counter-based generator: output i of stream (seed, stream) is a pure
    /// function of those three values, so independent streams can be handed
    /// to parallel workers and every draw is reproducible regardless of
    /// scheduling. The mixer is the SplitMix64 finaliser.
    class CounterRng
    {
    public:
        using result_type = std::uint64_t;

        explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0);

        /// A generator for sub-stream `id` of this one. Does not advance `*this`.
        [[nodiscard]] auto split(std::uint64_t id) const -> CounterRng;

        static constexpr auto min() -> result_type { return 0; }
        static constexpr auto max() -> result_type { return std::numeric_limits<result_type>::max(); }

        auto operator()() -> result_type;

        /// Uniform in [0, bound), bound > 0, by rejection (no modulo bias).
        auto uniform_below(std::uint64_t bound) -> std::uint64_t;
        auto uniform_below(const boost::multiprecision::cpp_int & bound) -> boost::multiprecision::cpp_int;

        auto coin() -> bool { return ((*this)() >> 63) != 0; }

        [[nodiscard]] auto seed() const -> std::uint64_t { return _seed; }

    private:
        std::uint64_t _seed;
        std::uint64_t _key;
        std::uint64_t _counter = 0;
    };

    [[nodiscard]] auto mix64(std::uint64_t x) -> std::uint64_t;

    /// Fisher-Yates shuffle driven by CounterRng::uniform_below, so the result
    /// does not depend on the standard library's distribution implementations.
    template <typename Range>
    auto shuffle(Range & range, CounterRng & rng) -> void
    {
        auto n = static_cast<std::uint64_t>(range.size());
        for (std::uint64_t i = n; i > 1; --i) {
            auto j = rng.uniform_below(i);
            using std::swap;
            swap(range[i - 1], range[j]);
        }
    }
}
