#include "hochschild/extremes.hpp"

#include <stdexcept>

#include "hochschild/disjoint_sets.hpp"

namespace hochschild {

namespace {

void check_pair(const Quiver& q, const PathPair& pair)
{
    const auto& [p, r] = pair;
    if (p.trivial() || r.trivial())
        throw std::invalid_argument("movements need pairs of nontrivial paths");
    if (origin(q, p) != origin(q, r) || terminus(q, p) != terminus(q, r))
        throw std::invalid_argument("pair is not parallel");
}

bool start_together(const PathPair& pair) { return pair.first.arrows.front() == pair.second.arrows.front(); }

bool end_together(const PathPair& pair) { return pair.first.arrows.back() == pair.second.arrows.back(); }

} // namespace

bool is_plus_extreme(const Quiver& q, const PathPair& pair)
{
    check_pair(q, pair);
    return !start_together(pair) || is_sink(q, terminus(q, pair.first));
}

bool is_minus_extreme(const Quiver& q, const PathPair& pair)
{
    check_pair(q, pair);
    return !end_together(pair) || is_source(q, origin(q, pair.first));
}

Movements movement_neighbors(const Quiver& q, const PathPair& pair)
{
    Movements out;
    const auto& [p, r] = pair;
    if (!is_plus_extreme(q, pair)) {
        std::vector<ArrowId> p_tail(p.arrows.begin() + 1, p.arrows.end());
        std::vector<ArrowId> r_tail(r.arrows.begin() + 1, r.arrows.end());
        for (ArrowId b : q.arrows_out(terminus(q, p))) {
            auto pb = p_tail;
            auto rb = r_tail;
            pb.push_back(b);
            rb.push_back(b);
            out.plus.emplace_back(make_path(q, std::move(pb)), make_path(q, std::move(rb)));
        }
    }
    if (!is_minus_extreme(q, pair)) {
        for (ArrowId b : q.arrows_in(origin(q, p))) {
            std::vector<ArrowId> bp{b};
            std::vector<ArrowId> br{b};
            bp.insert(bp.end(), p.arrows.begin(), p.arrows.end() - 1);
            br.insert(br.end(), r.arrows.begin(), r.arrows.end() - 1);
            out.minus.emplace_back(make_path(q, std::move(bp)), make_path(q, std::move(br)));
        }
    }
    return out;
}

MovementPartition movement_classes(const Quiver& q, std::size_t j, std::size_t length, const EnumerationLimits& limits)
{
    if (j == 0)
        throw std::invalid_argument("movements are defined for j >= 1");
    MovementPartition result{build_basis(q, j, length, limits), {}};
    const ParallelBasis& basis = result.basis;

    // -movements mirror +movements, so +edges alone generate the relation
    DisjointSets sets(basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k)
        for (const auto& image : movement_neighbors(q, basis[k]).plus) {
            auto idx = basis.index_of(image);
            if (!idx)
                throw std::logic_error("movement left the basis");
            sets.unite(k, *idx);
        }

    const auto labels = sets.labels();
    std::size_t count = 0;
    for (auto l : labels)
        count = std::max(count, l + 1);
    result.classes.resize(count);
    for (std::size_t k = 0; k < basis.size(); ++k) {
        MovementClass& cls = result.classes[labels[k]];
        cls.members.push_back(k);
        const auto& pair = basis[k];
        if (is_plus_extreme(q, pair)) {
            cls.has_plus_extreme = true;
            if (!is_sink(q, terminus(q, pair.first)))
                cls.plus_extreme_off_sink = true;
        }
        if (is_minus_extreme(q, pair)) {
            cls.has_minus_extreme = true;
            if (!is_source(q, origin(q, pair.first)))
                cls.minus_extreme_off_source = true;
        }
    }
    return result;
}

std::map<int, BigInt> count_extremes(const Quiver& q, int n, int i, const EnumerationLimits& limits)
{
    if (n < 2 || i < 1)
        throw std::invalid_argument("count_extremes needs n >= 2 and i >= 1");
    const std::size_t length = static_cast<std::size_t>(n) * static_cast<std::size_t>(i);
    std::map<int, BigInt> counts;
    for (int j = 1; j <= n - 2; ++j) {
        const auto partition = movement_classes(q, static_cast<std::size_t>(j), length, limits);
        unsigned long extremes = 0;
        for (const auto& cls : partition.classes)
            extremes += cls.is_j_extreme();
        counts[j] = BigInt(extremes);
    }
    counts[n - 1] = count_parallel(q, static_cast<std::size_t>(n - 1), length);
    return counts;
}

} // namespace hochschild
