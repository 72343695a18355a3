#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hochschild/bar_oracle.hpp"
#include "hochschild/direct.hpp"
#include "hochschild/errors.hpp"
#include "support.hpp"

using namespace testing;

TEST_CASE("dims_bar: worked examples")
{
    CHECK(dims_bar(corpus("a2"), 2, FieldSpec::rationals(), 2) == ints({1, 0, 0}));
    CHECK(dims_bar(corpus("l1"), 2, FieldSpec::rationals(), 2) == ints({2, 1, 1}));
    CHECK(dims_bar(corpus("c2"), 2, FieldSpec::rationals(), 2) == ints({1, 1, 1}));
}

TEST_CASE("center_dim_bruteforce: worked examples")
{
    CHECK(center_dim_bruteforce(corpus("l1"), 2, FieldSpec::rationals()) == 2);
    CHECK(center_dim_bruteforce(corpus("c2"), 2, FieldSpec::rationals()) == 1);
    CHECK(center_dim_bruteforce(corpus("c2"), 3, FieldSpec::rationals()) == 3);
}

TEST_CASE("algebra_dim")
{
    CHECK(algebra_dim(corpus("a2"), 2) == BigInt(3));
    CHECK(algebra_dim(corpus("th"), 3) == BigInt(2 + 3 + 4));
    CHECK(BarComplex(corpus("th"), 2).algebra_dim() == 5);
}

TEST_CASE("bar coboundary squares to zero")
{
    for (const auto& name : corpus_names()) {
        const auto q = corpus(name);
        for (int n : {2, 3}) {
            if (algebra_dim(q, n) > BigInt(12))
                continue;
            const BarComplex bar(q, n);
            for (int m = 0; m <= 3; ++m) {
                const auto lower = bar.coboundary(m);
                const auto upper = bar.coboundary(m + 1);
                CHECK(lower.cols() == bar.cochain_dim(m));
                CHECK(lower.rows() == bar.cochain_dim(m + 1));
                CHECK((upper * lower).is_zero());
            }
        }
    }
}

TEST_CASE("bar complex and path-pair complex have equal cochain dimensions")
{
    // for n = 2 both count parallel pairs (path of length m, path of length < 2)
    const auto a3 = corpus("a3");
    const BarComplex bar(a3, 2);
    for (int m = 0; m <= 3; ++m)
        CHECK(BigInt(static_cast<unsigned long>(bar.cochain_dim(m))) == cochain_dim(a3, 2, m));
}

TEST_CASE("guards")
{
    CHECK_THROWS_AS(dims_bar(corpus("th"), 4, FieldSpec::rationals(), 2), CapExceeded);
    CHECK_THROWS_AS(center_dim_bruteforce(corpus("th"), 4, FieldSpec::rationals()), CapExceeded);
    CHECK_THROWS_AS(dims_bar(corpus("a2"), 2, FieldSpec::rationals(), 5), std::invalid_argument);
    OracleLimits wide;
    wide.max_algebra_dim = 40;
    CHECK_NOTHROW(dims_bar(corpus("th"), 4, FieldSpec::rationals(), 1, wide));
}

TEST_CASE("oracle matches the direct engine on the small corpus")
{
    for (const auto& name : corpus_names()) {
        const auto q = corpus(name);
        for (int n : {2, 3})
            for (auto c : test_chars()) {
                if (algebra_dim(q, n) > BigInt(12))
                    continue;
                const auto field = FieldSpec::of_characteristic(c);
                const auto direct = dims_direct(q, n, field, 3).dims;
                CHECK(dims_bar(q, n, field, 3) == direct);
            }
    }
}
