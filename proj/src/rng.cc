#include <homdist/errors.hh>
#include <homdist/rng.hh>

using boost::multiprecision::cpp_int;
using std::uint64_t;

namespace homdist
{
    auto mix64(uint64_t x) -> uint64_t
    {
        x += 0x9e3779b97f4a7c15ull;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
        return x ^ (x >> 31);
    }

    CounterRng::CounterRng(uint64_t seed, uint64_t stream) :
        _seed(seed),
        _key(mix64(mix64(seed) ^ (stream * 0xd1b54a32d192ed03ull + 0x8bb84b93962eacc9ull)))
    {
    }

    auto CounterRng::split(uint64_t id) const -> CounterRng
    {
        CounterRng child(_seed);
        child._key = mix64(_key ^ mix64(id + 0x632be59bd9b4e019ull));
        return child;
    }

    auto CounterRng::operator()() -> result_type
    {
        return mix64(_key ^ mix64(_counter++));
    }

    auto CounterRng::uniform_below(uint64_t bound) -> uint64_t
    {
        if (bound == 0)
            throw DataError("uniform_below needs a positive bound");
        uint64_t limit = max() - max() % bound;
        for (;;) {
            auto x = (*this)();
            if (x < limit)
                return x % bound;
        }
    }

    auto CounterRng::uniform_below(const cpp_int & bound) -> cpp_int
    {
        if (bound <= 0)
            throw DataError("uniform_below needs a positive bound");
        if (bound <= cpp_int(max()))
            return cpp_int(uniform_below(bound.convert_to<uint64_t>()));

        auto bits = msb(bound) + 1;
        for (;;) {
            cpp_int candidate = 0;
            unsigned produced = 0;
            while (produced < bits) {
                candidate = (candidate << 64) | cpp_int((*this)());
                produced += 64;
            }
            candidate >>= (produced - bits);
            if (candidate < bound)
                return candidate;
        }
    }
}
