#include "hochschild/bar_oracle.hpp"

#include <map>
#include <optional>
#include <stdexcept>

#include "hochschild/errors.hpp"

namespace hochschild {

BigInt algebra_dim(const Quiver& q, int n)
{
    BigInt total = 0;
    for (int l = 0; l < n; ++l)
        total += path_count_matrix(q, static_cast<std::size_t>(l)).sum();
    return total;
}

BarComplex::BarComplex(const Quiver& q, int n, const OracleLimits& limits) : quiver_(&q), n_(n), limits_(limits)
{
    if (n < 2)
        throw std::invalid_argument("truncation index must be at least 2");
    const BigInt dim = hochschild::algebra_dim(q, n);
    if (dim > BigInt(static_cast<unsigned long>(limits.max_algebra_dim)))
        throw CapExceeded("algebra has dimension " + dim.str() + " (oracle bound " +
                          std::to_string(limits.max_algebra_dim) + ")");

    const std::size_t nv = q.vertex_count();
    for (int l = 0; l < n; ++l)
        for (VertexId u = 0; u < nv; ++u)
            for (VertexId v = 0; v < nv; ++v)
                for (auto& p : enumerate_paths(q, static_cast<std::size_t>(l), u, v))
                    paths_.push_back(std::move(p));

    std::map<Path, int> id;
    for (std::size_t k = 0; k < paths_.size(); ++k)
        id.emplace(paths_[k], static_cast<int>(k));
    parallel_.assign(nv, std::vector<std::vector<int>>(nv));
    for (std::size_t k = 0; k < paths_.size(); ++k) {
        origin_.push_back(hochschild::origin(q, paths_[k]));
        terminus_.push_back(hochschild::terminus(q, paths_[k]));
        parallel_[origin_[k]][terminus_[k]].push_back(static_cast<int>(k));
    }
    const std::size_t dimA = paths_.size();
    product_.assign(dimA, std::vector<int>(dimA, -1));
    for (std::size_t x = 0; x < dimA; ++x)
        for (std::size_t y = 0; y < dimA; ++y) {
            if (terminus_[x] != origin_[y] || paths_[x].length() + paths_[y].length() >= static_cast<std::size_t>(n))
                continue;
            product_[x][y] = id.at(concat(q, paths_[x], paths_[y]));
        }
}

int BarComplex::product(int x, int y) const { return product_[x][y]; }

VertexId BarComplex::chain_origin(const Chain& c) const { return c.elems.empty() ? c.anchor : origin_[c.elems.front()]; }

VertexId BarComplex::chain_terminus(const Chain& c) const
{
    return c.elems.empty() ? c.anchor : terminus_[c.elems.back()];
}

std::vector<BarComplex::Chain> BarComplex::chains(int m) const
{
    std::vector<Chain> out;
    if (m == 0) {
        for (VertexId v = 0; v < quiver_->vertex_count(); ++v)
            out.push_back(Chain{v, {}});
        return out;
    }
    std::vector<int> radical;
    for (std::size_t k = 0; k < paths_.size(); ++k)
        if (!paths_[k].trivial())
            radical.push_back(static_cast<int>(k));
    Chain current;
    auto grow = [&](auto&& self) -> void {
        if (static_cast<int>(current.elems.size()) == m) {
            out.push_back(current);
            return;
        }
        for (int x : radical) {
            if (!current.elems.empty() && terminus_[current.elems.back()] != origin_[x])
                continue;
            current.elems.push_back(x);
            self(self);
            current.elems.pop_back();
        }
    };
    grow(grow);
    return out;
}

std::vector<int> BarComplex::key(const Chain& c, int target) const
{
    std::vector<int> k;
    if (c.elems.empty())
        k.push_back(-1 - static_cast<int>(c.anchor));
    else
        k = c.elems;
    k.push_back(target);
    return k;
}

std::size_t BarComplex::cochain_dim(int m) const
{
    std::size_t total = 0;
    for (const auto& c : chains(m))
        total += parallel_[chain_origin(c)][chain_terminus(c)].size();
    return total;
}

SparseIntMatrix BarComplex::coboundary(int m) const
{
    if (m < 0)
        throw std::invalid_argument("negative degree");
    std::map<std::vector<int>, std::size_t> column;
    for (const auto& c : chains(m))
        for (int target : parallel_[chain_origin(c)][chain_terminus(c)])
            column.emplace(key(c, target), column.size());
    std::map<std::vector<int>, std::size_t> row;
    const auto longer = chains(m + 1);
    for (const auto& c : longer)
        for (int target : parallel_[chain_origin(c)][chain_terminus(c)])
            row.emplace(key(c, target), row.size());

    std::vector<MatrixEntry> entries;
    // (delta f)(y_1..y_{m+1}) = y_1 f(y_2..) + sum_k (-1)^k f(..y_k y_{k+1}..) + (-1)^{m+1} f(..y_m) y_{m+1}
    for (const auto& y : longer) {
        const auto& ys = y.elems;
        {
            Chain face{terminus_[ys.front()], {ys.begin() + 1, ys.end()}};
            for (int target : parallel_[chain_origin(face)][chain_terminus(face)]) {
                const int value = product(ys.front(), target);
                if (value >= 0)
                    entries.push_back({row.at(key(y, value)), column.at(key(face, target)), BigInt(1)});
            }
        }
        for (int k = 1; k <= m; ++k) {
            const int merged = product(ys[k - 1], ys[k]);
            if (merged < 0)
                continue;
            Chain face{0, {}};
            face.elems.assign(ys.begin(), ys.begin() + (k - 1));
            face.elems.push_back(merged);
            face.elems.insert(face.elems.end(), ys.begin() + (k + 1), ys.end());
            for (int target : parallel_[chain_origin(face)][chain_terminus(face)])
                entries.push_back({row.at(key(y, target)), column.at(key(face, target)), BigInt(k % 2 ? -1 : 1)});
        }
        {
            Chain face{origin_[ys.back()], {ys.begin(), ys.end() - 1}};
            for (int target : parallel_[chain_origin(face)][chain_terminus(face)]) {
                const int value = product(target, ys.back());
                if (value >= 0)
                    entries.push_back(
                        {row.at(key(y, value)), column.at(key(face, target)), BigInt((m + 1) % 2 ? -1 : 1)});
            }
        }
    }
    return SparseIntMatrix::from_triplets(row.size(), column.size(), std::move(entries));
}

std::vector<BigInt> dims_bar(const Quiver& q, int n, FieldSpec field, int max_degree, const OracleLimits& limits)
{
    if (max_degree < 0 || max_degree > limits.max_degree)
        throw std::invalid_argument("oracle degree must lie in 0.." + std::to_string(limits.max_degree));
    const BarComplex bar(q, n, limits);
    std::vector<std::size_t> ranks;  // ranks[m] = rank delta^m
    for (int m = 0; m <= max_degree; ++m)
        ranks.push_back(rank(bar.coboundary(m), field));
    std::vector<BigInt> dims;
    for (int m = 0; m <= max_degree; ++m) {
        const std::size_t in = m > 0 ? ranks[static_cast<std::size_t>(m - 1)] : 0;
        dims.push_back(BigInt(static_cast<unsigned long>(bar.cochain_dim(m) - ranks[static_cast<std::size_t>(m)] - in)));
    }
    return dims;
}

std::size_t center_dim_bruteforce(const Quiver& q, int n, FieldSpec field, const OracleLimits& limits)
{
    const BigInt dim = algebra_dim(q, n);
    if (dim > BigInt(static_cast<unsigned long>(limits.max_algebra_dim)))
        throw CapExceeded("algebra has dimension " + dim.str() + " (oracle bound " +
                          std::to_string(limits.max_algebra_dim) + ")");

    std::vector<Path> basis;
    for (int l = 0; l < n; ++l)
        for (VertexId u = 0; u < q.vertex_count(); ++u)
            for (VertexId v = 0; v < q.vertex_count(); ++v)
                for (auto& p : enumerate_paths(q, static_cast<std::size_t>(l), u, v))
                    basis.push_back(std::move(p));
    std::map<Path, std::size_t> id;
    for (std::size_t k = 0; k < basis.size(); ++k)
        id.emplace(basis[k], k);
    const std::size_t d = basis.size();
    auto multiply = [&](const Path& x, const Path& y) -> std::optional<std::size_t> {
        if (terminus(q, x) != origin(q, y) || x.length() + y.length() >= static_cast<std::size_t>(n))
            return std::nullopt;
        return id.at(concat(q, x, y));
    };

    // row (a, r): coefficient of basis path r in z a - a z
    std::vector<MatrixEntry> entries;
    for (std::size_t z = 0; z < d; ++z)
        for (std::size_t a = 0; a < d; ++a) {
            if (auto za = multiply(basis[z], basis[a]))
                entries.push_back({a * d + *za, z, BigInt(1)});
            if (auto az = multiply(basis[a], basis[z]))
                entries.push_back({a * d + *az, z, BigInt(-1)});
        }
    return d - rank(SparseIntMatrix::from_triplets(d * d, d, std::move(entries)), field);
}

} // namespace hochschild
