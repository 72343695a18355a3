#include "hochschild/finiteness.hpp"

#include <stdexcept>

namespace hochschild {

FinitenessVerdict decide_finiteness(const Quiver& q, int n)
{
    if (n < 2)
        throw std::invalid_argument("truncation index must be at least 2");
    const auto shape = classify(q);
    return FinitenessVerdict{!shape.has_oriented_cycle, shape.shortest_cycle};
}

PathPair witness_cocycle(const Quiver& q, int n, int r)
{
    if (r < 0 || n < 2)
        throw std::invalid_argument("need n >= 2 and r >= 0");
    const auto cycle = classify(q).shortest_cycle;
    if (!cycle)
        throw std::invalid_argument("quiver has no oriented cycle");
    const ArrowId last = cycle->arrows.back();
    Path second{q.source(last), {last}};
    const std::size_t repeats = static_cast<std::size_t>(n) * static_cast<std::size_t>(r);
    for (std::size_t k = 0; k < repeats; ++k)
        second.arrows.insert(second.arrows.end(), cycle->arrows.begin(), cycle->arrows.end());
    return {Path{q.source(last), {last}}, std::move(second)};
}

bool witness_nonvanishing(const Quiver& q, int n, FieldSpec field, int r, const EnumerationLimits& limits)
{
    const PathPair target_pair = witness_cocycle(q, n, r);
    const std::size_t e = classify(q).shortest_cycle->length();
    const std::size_t length = static_cast<std::size_t>(n) * static_cast<std::size_t>(r) * e;

    const auto domain = build_basis(q, 0, length, limits);
    const auto codomain = build_basis(q, 1, length + 1, limits);
    const auto block = odd_block(q, domain, codomain);

    std::vector<BigInt> target(codomain.size(), BigInt(0));
    const auto idx = codomain.index_of(target_pair);
    if (!idx)
        throw std::logic_error("witness pair missing from its basis");
    target[*idx] = 1;
    return !is_in_image(block, target, field);
}

std::vector<Certificate> finiteness_certificates(const Quiver& q, int n, FieldSpec field, const std::vector<int>& rs,
                                                 const EnumerationLimits& limits)
{
    std::vector<Certificate> out;
    const auto verdict = decide_finiteness(q, n);
    if (verdict.finite)
        return out;
    const int e = static_cast<int>(verdict.witness_cycle->length());
    for (int r : rs)
        out.push_back({r, 2 * r * e + 1, witness_nonvanishing(q, n, field, r, limits)});
    return out;
}

} // namespace hochschild
