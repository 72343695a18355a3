#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "hochschild/errors.hpp"
#include "hochschild/extremes.hpp"
#include "support.hpp"

using namespace testing;

namespace {

std::vector<std::string> show(const Quiver& q, const std::vector<PathPair>& pairs)
{
    std::vector<std::string> out;
    for (const auto& p : pairs)
        out.push_back(format_pair(q, p));
    return out;
}

std::map<int, BigInt> counts(std::initializer_list<std::pair<const int, long>> values)
{
    std::map<int, BigInt> out;
    for (const auto& [k, v] : values)
        out.emplace(k, BigInt(v));
    return out;
}

} // namespace

TEST_CASE("movement_neighbors: worked examples")
{
    const auto th = corpus("th");
    auto moves = movement_neighbors(th, pair(th, "a", "aba"));
    CHECK(show(th, moves.plus) == std::vector<std::string>{"(b,bab)"});

    moves = movement_neighbors(th, pair(th, "c", "aba"));
    CHECK(moves.plus.empty());
    CHECK(is_plus_extreme(th, pair(th, "c", "aba")));

    const auto sc = corpus("sc");
    moves = movement_neighbors(sc, pair(sc, "d", "abc"));
    CHECK(moves.plus.empty());
    CHECK(moves.minus.empty());
    CHECK(is_plus_extreme(sc, pair(sc, "d", "abc")));
    CHECK(is_minus_extreme(sc, pair(sc, "d", "abc")));
}

TEST_CASE("movement_neighbors rejects non-parallel and trivial pairs")
{
    const auto th = corpus("th");
    CHECK_THROWS_AS(movement_neighbors(th, pair(th, "a", "ab")), std::invalid_argument);
    CHECK_THROWS_AS(movement_neighbors(th, pair(th, "e_1", "ab")), std::invalid_argument);
}

TEST_CASE("movement symmetry")
{
    for (const auto& name : corpus_names()) {
        const auto q = corpus(name);
        for (int n : {3, 4})
            for (int i : {1, 2}) {
                const std::size_t L = static_cast<std::size_t>(n * i);
                if (L > 6)
                    continue;
                for (int j = 1; j <= n - 2; ++j)
                    for (const auto& p : build_basis(q, static_cast<std::size_t>(j), L)) {
                        for (const auto& next : movement_neighbors(q, p).plus) {
                            const auto back = movement_neighbors(q, next).minus;
                            CHECK(std::find(back.begin(), back.end(), p) != back.end());
                        }
                        for (const auto& prev : movement_neighbors(q, p).minus) {
                            const auto fwd = movement_neighbors(q, prev).plus;
                            CHECK(std::find(fwd.begin(), fwd.end(), p) != fwd.end());
                        }
                    }
            }
    }
}

TEST_CASE("movement classes partition the basis and are closed under movements")
{
    for (const auto& name : corpus_names()) {
        const auto q = corpus(name);
        for (int n : {3, 4})
            for (int i : {1, 2})
                for (int j = 1; j <= n - 2; ++j) {
                    const auto part = movement_classes(q, static_cast<std::size_t>(j), static_cast<std::size_t>(n * i));
                    std::vector<int> owner(part.basis.size(), -1);
                    for (std::size_t c = 0; c < part.classes.size(); ++c)
                        for (auto k : part.classes[c].members) {
                            CHECK(owner[k] == -1);
                            owner[k] = static_cast<int>(c);
                        }
                    CHECK(std::count(owner.begin(), owner.end(), -1) == 0);
                    for (std::size_t k = 0; k < part.basis.size(); ++k) {
                        const auto moves = movement_neighbors(q, part.basis[k]);
                        for (const auto& list : {moves.plus, moves.minus})
                            for (const auto& nb : list)
                                CHECK(owner[*part.basis.index_of(nb)] == owner[k]);
                    }
                    for (const auto& c : part.classes) {
                        bool plus_bad = false, minus_bad = false, any_plus = false, any_minus = false;
                        for (auto k : c.members) {
                            const auto& pr = part.basis[k];
                            if (is_plus_extreme(q, pr)) {
                                any_plus = true;
                                plus_bad |= !is_sink(q, terminus(q, pr.first));
                            }
                            if (is_minus_extreme(q, pr)) {
                                any_minus = true;
                                minus_bad |= !is_source(q, origin(q, pr.first));
                            }
                        }
                        CHECK(c.plus_extreme_off_sink == plus_bad);
                        CHECK(c.minus_extreme_off_source == minus_bad);
                        CHECK(c.has_plus_extreme == any_plus);
                        CHECK(c.has_minus_extreme == any_minus);
                        CHECK(std::is_sorted(c.members.begin(), c.members.end()));
                    }
                }
    }
}

TEST_CASE("count_extremes: worked examples")
{
    CHECK(count_extremes(corpus("sc"), 3, 1) == counts({{1, 1}, {2, 0}}));
    // j = n-1 counts (2//3), which is empty for TH; 16 is |(2//4)|
    CHECK(count_extremes(corpus("th"), 3, 1) == counts({{1, 0}, {2, 0}}));
    CHECK(brute_parallel(corpus("th"), 2, 3) == 0);
    CHECK(brute_parallel(corpus("th"), 2, 4) == 16);
    CHECK(brute_parallel(corpus("th"), 2, 6) == 32);
    CHECK(count_extremes(corpus("th"), 3, 2) == counts({{1, 0}, {2, 32}}));
    CHECK(count_extremes(corpus("th"), 2, 1) == counts({{1, 0}}));
}

TEST_CASE("count_extremes top convention and cap")
{
    for (const auto& name : general_names()) {
        const auto q = corpus(name);
        for (int n : {2, 3, 4}) {
            const auto c = count_extremes(q, n, 1);
            CHECK(c.size() == static_cast<std::size_t>(n - 1));
            CHECK(c.at(n - 1) == count_parallel(q, static_cast<std::size_t>(n - 1), static_cast<std::size_t>(n)));
        }
    }
    CHECK_THROWS_AS(count_extremes(corpus("th"), 4, 2, EnumerationLimits{5}), CapExceeded);
}

TEST_CASE("vacuous classes are flagged")
{
    // (x, xxx) only moves to itself
    const auto l1 = corpus("l1");
    const auto part = movement_classes(l1, 1, 3);
    REQUIRE(part.classes.size() == 1);
    CHECK(part.classes[0].vacuous());
    CHECK(part.classes[0].is_j_extreme());

    const auto sc = movement_classes(corpus("sc"), 1, 3);
    REQUIRE(sc.classes.size() == 1);
    CHECK(!sc.classes[0].vacuous());
}
