#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hochschild/errors.hpp"
#include "hochschild/formula.hpp"
#include "support.hpp"

using namespace testing;

namespace {

Quiver basic_cycle(std::size_t e)
{
    std::string text;
    for (std::size_t v = 0; v < e; ++v)
        text += "vertex v" + std::to_string(v) + "\n";
    for (std::size_t v = 0; v < e; ++v)
        text += "arrow a" + std::to_string(v) + " v" + std::to_string(v) + " v" + std::to_string((v + 1) % e) + "\n";
    return parse_quiver(text, "cycle" + std::to_string(e));
}

// counts j in [0, n-2] with j = r i mod e by walking j
std::size_t c_oracle(std::size_t n, std::size_t e, std::size_t i)
{
    std::size_t count = 0;
    for (std::size_t j = 0; j + 2 <= n; ++j)
        if ((j + e * 100 - (n % e) * i % e) % e == 0)
            ++count;
    return count;
}

} // namespace

TEST_CASE("BasicCycleParams")
{
    const auto p = BasicCycleParams::from(3, 11);
    CHECK(p.m == 3);
    CHECK(p.r == 2);
    CHECK(p.m * p.e + p.r == p.n);
    CHECK_THROWS_AS(BasicCycleParams::from(0, 3), std::invalid_argument);
}

TEST_CASE("c_value: worked examples")
{
    CHECK(c_value(2, 2, 1) == 1);
    CHECK(c_value(3, 2, 2) == 1);
    CHECK(c_value(5, 1, 1) == 4);
    for (std::size_t n = 2; n <= 9; ++n)
        for (std::size_t e = 1; e <= 5; ++e)
            for (std::size_t i = 1; i <= 4; ++i)
                CHECK(c_value(n, e, i) == c_oracle(n, e, i));
}

TEST_CASE("theorem1_dims: worked examples")
{
    CHECK(theorem1_dims(2, 3, FieldSpec::rationals(), 0).dims == ints({3}));
    CHECK(theorem1_dims(2, 2, FieldSpec::rationals(), 3).dims == ints({1, 1, 1, 1}));
    CHECK(theorem1_dims(2, 3, FieldSpec::prime(3), 2).dims.at(2) == BigInt(1));
}

TEST_CASE("theorem1_dims: H^0 and H^1 cases")
{
    // r = 0, r = 1, r >= 2
    CHECK(theorem1_dims(3, 6, FieldSpec::rationals(), 1).dims == ints({2, 2}));
    CHECK(theorem1_dims(3, 7, FieldSpec::rationals(), 1).dims == ints({5, 2}));
    CHECK(theorem1_dims(3, 5, FieldSpec::rationals(), 1).dims == ints({2, 2}));
}

TEST_CASE("theorem1_dims: characteristic correction")
{
    // e = 2, n = 2: e | 2(i-1)+1 never holds
    for (int d = 2; d <= 8; ++d)
        CHECK(theorem1_dims(2, 2, FieldSpec::prime(2), 8).dims[static_cast<std::size_t>(d)] == BigInt(1));
    // e = 3, n = 2: char 2 | 2 and 3 | 2(i-1)+1 at i = 2
    const auto with = theorem1_dims(3, 2, FieldSpec::prime(2), 5).dims;
    const auto without = theorem1_dims(3, 2, FieldSpec::rationals(), 5).dims;
    CHECK(with[4] == without[4] + BigInt(1));
    CHECK(with[5] == without[5] + BigInt(1));
    CHECK(with[2] == without[2]);
}

TEST_CASE("theorem1_dims declines the single loop")
{
    CHECK_THROWS_AS(theorem1_dims(1, 2, FieldSpec::rationals(), 3), FormulaDeclined);
    CHECK_THROWS_AS(dims_formula(corpus("l1"), 2, FieldSpec::rationals(), 3), FormulaDeclined);
}

TEST_CASE("theorem1_dims parity")
{
    for (std::size_t e = 2; e <= 5; ++e)
        for (int n = 2; n <= 7; ++n)
            for (auto c : {0u, 2u, 3u, 5u, 7u}) {
                const auto d = theorem1_dims(e, n, FieldSpec::of_characteristic(c), 9).dims;
                for (std::size_t k = 2; k + 1 < d.size(); k += 2)
                    CHECK(d[k] == d[k + 1]);
            }
}

TEST_CASE("theorem2_dims: worked examples")
{
    const auto a2 = theorem2_dims(corpus("a2"), 2, FieldSpec::rationals(), 1).dims;
    CHECK(a2 == ints({1, 0}));
    const auto th = theorem2_dims(corpus("th"), 2, FieldSpec::rationals(), 1).dims;
    CHECK(th == ints({1, 4}));
    CHECK(theorem2_dims(corpus("sc"), 3, FieldSpec::rationals(), 2).dims.at(2) == BigInt(1));
}

TEST_CASE("theorem2_dims refuses its exclusions")
{
    CHECK_THROWS_AS(theorem2_dims(corpus("c2"), 2, FieldSpec::rationals(), 3), FormulaDeclined);
    const auto split = parse_quiver("vertex 1\nvertex 2\nvertex 3\narrow a 1 2\n");
    CHECK_THROWS_AS(theorem2_dims(split, 2, FieldSpec::rationals(), 3), FormulaDeclined);
    CHECK_THROWS_AS(dims_formula(split, 2, FieldSpec::rationals(), 3), FormulaDeclined);
}

TEST_CASE("theorem2_dims truncates on the cap")
{
    const auto r = theorem2_dims(corpus("th"), 4, FieldSpec::rationals(), 8, EnumerationLimits{30});
    REQUIRE(r.truncated_at);
    CHECK(r.dims.size() == static_cast<std::size_t>(*r.truncated_at));
}

TEST_CASE("dims_formula dispatch")
{
    const auto c3 = dims_formula(corpus("c3"), 4, FieldSpec::rationals(), 5);
    CHECK(c3.dims == theorem1_dims(3, 4, FieldSpec::rationals(), 5).dims);
    CHECK(c3.quiver_name == "c3");
    CHECK(c3.engines.front() == Engine::formula);
    CHECK(dims_formula(basic_cycle(5), 7, FieldSpec::prime(7), 4).dims ==
          theorem1_dims(5, 7, FieldSpec::prime(7), 4).dims);
}
