#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hochschild/bar_oracle.hpp"
#include "hochschild/direct.hpp"
#include "hochschild/errors.hpp"
#include "support.hpp"

using namespace testing;

TEST_CASE("dims_direct: worked examples")
{
    CHECK(dims_direct(corpus("l1"), 2, FieldSpec::rationals(), 4).dims == ints({2, 1, 1, 1, 1}));
    CHECK(dims_direct(corpus("l1"), 2, FieldSpec::prime(2), 4).dims == ints({2, 2, 2, 2, 2}));
    CHECK(dims_direct(corpus("a2"), 2, FieldSpec::rationals(), 4).dims == ints({1, 0, 0, 0, 0}));
    CHECK(dims_direct(corpus("c2"), 2, FieldSpec::rationals(), 3).dims == ints({1, 1, 1, 1}));
}

TEST_CASE("basic cycles with char | n agree with the bar oracle")
{
    const auto c2 = corpus("c2");
    CHECK(dims_direct(c2, 3, FieldSpec::prime(3), 4).dims == ints({3, 1, 1, 2, 2}));
    CHECK(dims_bar(c2, 3, FieldSpec::prime(3), 4) == ints({3, 1, 1, 2, 2}));
    const auto c3 = corpus("c3");
    CHECK(dims_direct(c3, 2, FieldSpec::prime(2), 4).dims == ints({1, 1, 0, 1, 1}));
    CHECK(dims_bar(c3, 2, FieldSpec::prime(2), 4) == ints({1, 1, 0, 1, 1}));
}

TEST_CASE("report shape and detail bookkeeping")
{
    const auto q = corpus("th");
    const auto report = dims_direct(q, 3, FieldSpec::prime(3), 6);
    CHECK(report.complete(6));
    CHECK(report.quiver_name == "th");
    CHECK(report.n == 3);
    CHECK(report.characteristic == 3);
    REQUIRE(report.details.size() == 7);
    for (int m = 0; m <= 6; ++m) {
        const auto& d = report.details[static_cast<std::size_t>(m)];
        CHECK(d.degree == m);
        CHECK(d.cochain_dim == cochain_dim(q, 3, m));
        CHECK(report.dims[static_cast<std::size_t>(m)] == d.cochain_dim - d.rank_in - d.rank_out);
        CHECK(report.engines[static_cast<std::size_t>(m)] == Engine::direct);
    }
    CHECK(report.details[0].rank_in == BigInt(0));
}

TEST_CASE("H^0 equals the brute-force center")
{
    for (const auto& name : corpus_names()) {
        const auto q = corpus(name);
        for (int n : {2, 3})
            for (auto c : test_chars()) {
                const auto field = FieldSpec::of_characteristic(c);
                if (algebra_dim(q, n) > BigInt(12))
                    continue;
                const auto h0 = dims_direct(q, n, field, 0).dims.at(0);
                CHECK(h0 == BigInt(static_cast<unsigned long>(center_dim_bruteforce(q, n, field))));
            }
    }
}

TEST_CASE("independent of declaration order")
{
    const auto th = corpus("th");
    const auto permuted = parse_quiver("vertex 2\nvertex 1\narrow c 1 2\narrow b 2 1\narrow a 1 2\n");
    const auto sc = corpus("sc");
    const auto sc_permuted =
        parse_quiver("vertex 4\nvertex 3\nvertex 2\nvertex 1\narrow d 1 4\narrow c 3 4\narrow b 2 3\narrow a 1 2\n");
    for (auto c : test_chars())
        for (int n : {2, 3}) {
            const auto field = FieldSpec::of_characteristic(c);
            CHECK(dims_direct(th, n, field, 6).dims == dims_direct(permuted, n, field, 6).dims);
            CHECK(dims_direct(sc, n, field, 6).dims == dims_direct(sc_permuted, n, field, 6).dims);
        }
}

TEST_CASE("acyclic quivers vanish once the bases do")
{
    for (const auto& name : {"a2", "a3", "k2", "sc"}) {
        const auto q = corpus(name);
        for (int n : {2, 3, 4}) {
            const auto report = dims_direct(q, n, FieldSpec::rationals(), 8);
            for (int m = 0; m <= 8; ++m)
                if (cochain_dim(q, n, m).is_zero() && cochain_dim(q, n, m + 1).is_zero())
                    CHECK(report.dims[static_cast<std::size_t>(m)].is_zero());
        }
    }
}

TEST_CASE("cap overflow truncates but keeps lower degrees")
{
    const auto th = corpus("th");
    const auto full = dims_direct(th, 3, FieldSpec::rationals(), 8);
    const auto cut = dims_direct(th, 3, FieldSpec::rationals(), 8, EnumerationLimits{20});
    REQUIRE(cut.truncated_at);
    CHECK(!cut.complete(8));
    CHECK(!cut.truncation_reason.empty());
    CHECK(cut.dims.size() == static_cast<std::size_t>(*cut.truncated_at));
    for (std::size_t m = 0; m < cut.dims.size(); ++m)
        CHECK(cut.dims[m] == full.dims[m]);
}

TEST_CASE("disconnected quivers are computed with a warning")
{
    const auto q = parse_quiver("vertex 1\nvertex 2\nvertex 3\narrow a 1 2\n", "split");
    const auto report = dims_direct(q, 2, FieldSpec::rationals(), 3);
    CHECK(report.dims == ints({2, 0, 0, 0}));
    CHECK(report.warnings.size() == 1);
}

TEST_CASE("argument validation")
{
    CHECK_THROWS_AS(dims_direct(corpus("a2"), 1, FieldSpec::rationals(), 3), std::invalid_argument);
    CHECK_THROWS_AS(dims_direct(corpus("a2"), 2, FieldSpec::rationals(), -1), std::invalid_argument);
}

TEST_CASE("TruncatedComplex caches ranks per field")
{
    TruncatedComplex complex(corpus("l1"), 2);
    CHECK(complex.rank_of(0, FieldSpec::rationals()) == 0);
    CHECK(complex.rank_of(2, FieldSpec::rationals()) == 1);
    CHECK(complex.rank_of(2, FieldSpec::prime(2)) == 0);
    CHECK(complex.cochain_dim(2) == BigInt(2));
    CHECK(complex.differential(2).degree == 2);
}
