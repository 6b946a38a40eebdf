#include <doctest.h>

#include <homdist/errors.hh>
#include <homdist/extended_real.hh>
#include <homdist/norm.hh>
#include <homdist/rng.hh>

#include <cmath>
#include <vector>

using namespace homdist;

TEST_CASE("ordering and max/min with infinity")
{
    ExtendedReal inf = infinity;
    CHECK(ExtendedReal{1.0} < inf);
    CHECK_FALSE(inf < inf);
    CHECK(inf == inf);
    CHECK(max(ExtendedReal{2.0}, inf).is_infinite());
    CHECK(min(ExtendedReal{2.0}, inf) == ExtendedReal{2.0});
    CHECK(ExtendedReal{0.5} <= ExtendedReal{0.5});
}

TEST_CASE("text round trip keeps every bit")
{
    auto rng = CounterRng{5};
    for (int i = 0; i < 500; ++i) {
        double x = static_cast<double>(rng() >> 11) * 0x1.0p-40;
        CHECK(parse_extended_real(to_string(x)) == ExtendedReal{x});
    }
    CHECK(to_string(infinity) == "inf");
    CHECK(parse_extended_real("inf").is_infinite());
    CHECK_THROWS_AS(parse_extended_real("1.0x"), DataError);
    CHECK_THROWS_AS(parse_extended_real(""), DataError);
    CHECK_THROWS_AS(parse_extended_real("nan"), DataError);
}

TEST_CASE("feature norms")
{
    std::vector<double> a{0.0, 3.0}, b{4.0, 0.0};
    CHECK(feature_distance(a, b, Norm::l2) == doctest::Approx(5.0));
    CHECK(feature_distance(a, b, Norm::linf) == 4.0);
    CHECK(parse_norm("l2") == Norm::l2);
    CHECK(parse_norm("linf") == Norm::linf);
    CHECK_THROWS_AS(parse_norm("l1"), DataError);
}
