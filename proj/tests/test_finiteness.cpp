#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hochschild/direct.hpp"
#include "hochschild/errors.hpp"
#include "hochschild/finiteness.hpp"
#include "support.hpp"

using namespace testing;

TEST_CASE("decide_finiteness: worked examples")
{
    CHECK(decide_finiteness(corpus("a2"), 2).finite);
    CHECK(decide_finiteness(corpus("sc"), 3).finite);
    const auto th = corpus("th");
    const auto v = decide_finiteness(th, 2);
    CHECK(!v.finite);
    REQUIRE(v.witness_cycle);
    CHECK(format_path(th, *v.witness_cycle) == "ab");
    CHECK_THROWS_AS(decide_finiteness(th, 1), std::invalid_argument);
}

TEST_CASE("witness_cocycle shape")
{
    const auto th = corpus("th");
    const auto w = witness_cocycle(th, 2, 1);
    CHECK(format_pair(th, w) == "(b,babab)");
    const auto l1 = corpus("l1");
    CHECK(format_pair(l1, witness_cocycle(l1, 3, 0)) == "(x,x)");
    CHECK(format_pair(l1, witness_cocycle(l1, 3, 2)) == "(x,xxxxxxx)");
    CHECK_THROWS_AS(witness_cocycle(corpus("a2"), 2, 0), std::invalid_argument);
}

TEST_CASE("witness_nonvanishing: worked examples")
{
    CHECK(witness_nonvanishing(corpus("c2"), 2, FieldSpec::rationals(), 0));
    CHECK(witness_nonvanishing(corpus("l1"), 2, FieldSpec::rationals(), 0));
    CHECK(witness_nonvanishing(corpus("th"), 2, FieldSpec::rationals(), 1));
}

TEST_CASE("certificates agree with the direct engine")
{
    for (const auto& name : {"c2", "c3", "c4", "l1", "th", "l1tail"}) {
        const auto q = corpus(name);
        for (int n : {2, 3})
            for (auto c : test_chars()) {
                const auto field = FieldSpec::of_characteristic(c);
                const auto certs = finiteness_certificates(q, n, field, {0, 1});
                REQUIRE(certs.size() == 2);
                const int top = certs.back().degree;
                const auto dims = dims_direct(q, n, field, top).dims;
                for (const auto& cert : certs) {
                    CHECK(cert.nonvanishing);
                    CHECK(dims.at(static_cast<std::size_t>(cert.degree)) >= BigInt(1));
                }
            }
    }
}

TEST_CASE("acyclic quivers carry no certificates")
{
    CHECK(finiteness_certificates(corpus("a3"), 3, FieldSpec::rationals(), {0, 1}).empty());
}

TEST_CASE("certificate cap")
{
    CHECK_THROWS_AS(witness_nonvanishing(corpus("th"), 4, FieldSpec::rationals(), 2, EnumerationLimits{10}),
                    CapExceeded);
}
