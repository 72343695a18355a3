#include "hochschild/linalg.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hochschild/disjoint_sets.hpp"

namespace hochschild {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a * b % p; }

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p)
{
    std::uint64_t r = 1;
    for (a %= p; e > 0; e >>= 1) {
        if (e & 1)
            r = mul_mod(r, a, p);
        a = mul_mod(a, a, p);
    }
    return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) { return pow_mod(a, p - 2, p); }

template <typename Scalar>
struct Component {
    std::vector<std::size_t> rows;
    std::vector<std::size_t> cols;
    std::vector<std::tuple<std::size_t, std::size_t, Scalar>> entries;  // local indices
};

// Splits the nonzero pattern into connected components of the bipartite
// row/column graph. Rank is additive over them.
template <typename Scalar>
std::vector<Component<Scalar>> split_components(std::size_t rows, std::size_t cols,
                                                std::vector<std::tuple<std::size_t, std::size_t, Scalar>> entries)
{
    DisjointSets sets(rows + cols);
    for (const auto& [r, c, v] : entries)
        sets.unite(r, rows + c);

    std::map<std::size_t, std::size_t> component_of_root;
    std::vector<Component<Scalar>> components;
    std::vector<std::size_t> local(rows + cols, static_cast<std::size_t>(-1));
    auto component = [&](std::size_t node) -> Component<Scalar>& {
        const std::size_t root = sets.find(node);
        auto [it, fresh] = component_of_root.emplace(root, components.size());
        if (fresh)
            components.emplace_back();
        return components[it->second];
    };
    for (auto& [r, c, v] : entries) {
        Component<Scalar>& comp = component(r);
        if (local[r] == static_cast<std::size_t>(-1)) {
            local[r] = comp.rows.size();
            comp.rows.push_back(r);
        }
        if (local[rows + c] == static_cast<std::size_t>(-1)) {
            local[rows + c] = comp.cols.size();
            comp.cols.push_back(c);
        }
        comp.entries.emplace_back(local[r], local[rows + c], std::move(v));
    }
    return components;
}

// Sparse rows: (column, value) sorted by column.
template <typename Scalar>
using SparseRow = std::vector<std::pair<std::size_t, Scalar>>;

template <typename Scalar>
std::vector<SparseRow<Scalar>> to_rows(const Component<Scalar>& comp)
{
    std::vector<SparseRow<Scalar>> rows(comp.rows.size());
    for (const auto& [r, c, v] : comp.entries)
        rows[r].emplace_back(c, v);
    for (auto& row : rows)
        std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return rows;
}

// row <- row - factor * pivot (mod p), pivot normalised to lead 1
void eliminate_mod(SparseRow<std::uint64_t>& row, const SparseRow<std::uint64_t>& pivot, std::uint64_t factor,
                   std::uint64_t p)
{
    SparseRow<std::uint64_t> out;
    out.reserve(row.size() + pivot.size());
    std::size_t i = 0, j = 0;
    while (i < row.size() || j < pivot.size()) {
        if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
            out.push_back(row[i++]);
        } else {
            const std::uint64_t sub = mul_mod(factor, pivot[j].second, p);
            std::uint64_t v = p - sub;
            if (i < row.size() && row[i].first == pivot[j].first)
                v = (row[i++].second + v) % p;
            v %= p;
            if (v != 0)
                out.emplace_back(pivot[j].first, v);
            ++j;
        }
    }
    row = std::move(out);
}

// row <- a * row - b * pivot, then divided by its content
void eliminate_int(SparseRow<BigInt>& row, const SparseRow<BigInt>& pivot, const BigInt& a, const BigInt& b)
{
    SparseRow<BigInt> out;
    out.reserve(row.size() + pivot.size());
    std::size_t i = 0, j = 0;
    while (i < row.size() || j < pivot.size()) {
        if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
            out.emplace_back(row[i].first, a * row[i].second);
            ++i;
        } else {
            BigInt v = -(b * pivot[j].second);
            if (i < row.size() && row[i].first == pivot[j].first)
                v += a * row[i++].second;
            if (!v.is_zero())
                out.emplace_back(pivot[j].first, std::move(v));
            ++j;
        }
    }
    BigInt content = 0;
    for (const auto& [c, v] : out)
        content = gcd(content, v);
    if (content > BigInt(1))
        for (auto& [c, v] : out)
            v = divexact(v, content);
    row = std::move(out);
}

// Row-by-row echelon reduction: each incoming row is reduced against the
// pivots found so far; its first surviving nonzero becomes a new pivot.
std::size_t sparse_rank_mod(const Component<std::uint64_t>& comp, std::uint64_t p)
{
    std::map<std::size_t, SparseRow<std::uint64_t>> pivots;
    for (auto& row : to_rows(comp)) {
        while (!row.empty()) {
            auto it = pivots.find(row.front().first);
            if (it == pivots.end())
                break;
            eliminate_mod(row, it->second, row.front().second, p);
        }
        if (row.empty())
            continue;
        const std::uint64_t inv = inv_mod(row.front().second, p);
        for (auto& [c, v] : row)
            v = mul_mod(v, inv, p);
        const std::size_t lead = row.front().first;
        pivots.emplace(lead, std::move(row));
    }
    return pivots.size();
}

std::size_t sparse_rank_int(const Component<BigInt>& comp)
{
    std::map<std::size_t, SparseRow<BigInt>> pivots;
    for (auto& row : to_rows(comp)) {
        while (!row.empty()) {
            auto it = pivots.find(row.front().first);
            if (it == pivots.end())
                break;
            const BigInt& lead_pivot = it->second.front().second;
            const BigInt g = gcd(lead_pivot, row.front().second);
            eliminate_int(row, it->second, divexact(lead_pivot, g), divexact(row.front().second, g));
        }
        if (row.empty())
            continue;
        const std::size_t lead = row.front().first;
        pivots.emplace(lead, std::move(row));
    }
    return pivots.size();
}

template <typename Scalar>
DenseMatrix<Scalar> to_dense(const Component<Scalar>& comp, const Scalar& zero)
{
    DenseMatrix<Scalar> d = DenseMatrix<Scalar>::Constant(static_cast<Eigen::Index>(comp.rows.size()),
                                                          static_cast<Eigen::Index>(comp.cols.size()), zero);
    for (const auto& [r, c, v] : comp.entries)
        d(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = v;
    return d;
}

bool small(std::size_t rows, std::size_t cols) { return rows <= dense_limit && cols <= dense_limit; }

} // namespace

bool is_prime(std::uint64_t p)
{
    if (p < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p)
{
    if (!is_prime(p))
        throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
    if (p >= (std::uint64_t{1} << 31))
        throw std::invalid_argument("characteristic " + std::to_string(p) + " is too large");
    return FieldSpec(p);
}

FieldSpec FieldSpec::of_characteristic(std::uint64_t characteristic)
{
    return characteristic == 0 ? rationals() : prime(characteristic);
}

std::string FieldSpec::name() const { return characteristic_ == 0 ? "Q" : "F_" + std::to_string(characteristic_); }

std::size_t bareiss_rank(DenseIntMatrix m)
{
    const Eigen::Index rows = m.rows();
    const Eigen::Index cols = m.cols();
    BigInt previous = 1;
    Eigen::Index rank = 0;
    for (Eigen::Index c = 0; c < cols && rank < rows; ++c) {
        Eigen::Index pivot = rank;
        while (pivot < rows && m(pivot, c).is_zero())
            ++pivot;
        if (pivot == rows)
            continue;
        if (pivot != rank)
            m.row(pivot).swap(m.row(rank));
        const BigInt lead = m(rank, c);
        for (Eigen::Index r = rank + 1; r < rows; ++r) {
            const BigInt factor = m(r, c);
            for (Eigen::Index k = c + 1; k < cols; ++k)
                m(r, k) = divexact(lead * m(r, k) - factor * m(rank, k), previous);
            m(r, c) = 0;
        }
        previous = lead;
        ++rank;
    }
    return static_cast<std::size_t>(rank);
}

std::size_t rank_mod_p(DenseMatrix<std::uint64_t> m, std::uint64_t p)
{
    const Eigen::Index rows = m.rows();
    const Eigen::Index cols = m.cols();
    Eigen::Index rank = 0;
    for (Eigen::Index c = 0; c < cols && rank < rows; ++c) {
        Eigen::Index pivot = rank;
        while (pivot < rows && m(pivot, c) % p == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        if (pivot != rank)
            m.row(pivot).swap(m.row(rank));
        const std::uint64_t inv = inv_mod(m(rank, c) % p, p);
        for (Eigen::Index k = c; k < cols; ++k)
            m(rank, k) = mul_mod(m(rank, k) % p, inv, p);
        for (Eigen::Index r = rank + 1; r < rows; ++r) {
            const std::uint64_t factor = m(r, c) % p;
            if (factor == 0)
                continue;
            for (Eigen::Index k = c; k < cols; ++k)
                m(r, k) = (m(r, k) % p + p - mul_mod(factor, m(rank, k), p)) % p;
        }
        ++rank;
    }
    return static_cast<std::size_t>(rank);
}

std::size_t rank(const SparseIntMatrix& mat, FieldSpec field)
{
    std::size_t total = 0;
    if (field.is_rationals()) {
        std::vector<std::tuple<std::size_t, std::size_t, BigInt>> entries;
        entries.reserve(mat.nonzeros());
        for (const auto& e : mat.entries())
            entries.emplace_back(e.row, e.col, e.value);
        for (const auto& comp : split_components(mat.rows(), mat.cols(), std::move(entries)))
            total += small(comp.rows.size(), comp.cols.size()) ? bareiss_rank(to_dense(comp, BigInt(0)))
                                                               : sparse_rank_int(comp);
        return total;
    }

    const std::uint64_t p = field.characteristic();
    std::vector<std::tuple<std::size_t, std::size_t, std::uint64_t>> entries;
    entries.reserve(mat.nonzeros());
    for (const auto& e : mat.entries())
        if (const std::uint64_t v = e.value.residue(p); v != 0)
            entries.emplace_back(e.row, e.col, v);
    for (const auto& comp : split_components(mat.rows(), mat.cols(), std::move(entries)))
        total += small(comp.rows.size(), comp.cols.size()) ? rank_mod_p(to_dense(comp, std::uint64_t{0}), p)
                                                           : sparse_rank_mod(comp, p);
    return total;
}

std::size_t kernel_dim(const SparseIntMatrix& mat, FieldSpec field) { return mat.cols() - rank(mat, field); }

bool is_in_image(const SparseIntMatrix& mat, std::span<const BigInt> target, FieldSpec field)
{
    if (target.size() != mat.rows())
        throw std::invalid_argument("target length does not match the row count");
    std::vector<MatrixEntry> augmented(mat.entries().begin(), mat.entries().end());
    for (std::size_t r = 0; r < target.size(); ++r)
        if (!target[r].is_zero())
            augmented.push_back({r, mat.cols(), target[r]});
    const auto extended = SparseIntMatrix::from_triplets(mat.rows(), mat.cols() + 1, std::move(augmented));
    return rank(extended, field) == rank(mat, field);
}

} // namespace hochschild
