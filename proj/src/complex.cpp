#include "hochschild/complex.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <tuple>

#include "hochschild/errors.hpp"

namespace hochschild {

namespace {

void hash_combine(std::size_t& seed, std::size_t value)
{
    seed ^= value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

std::size_t hash_path(const Path& p)
{
    std::size_t h = p.arrows.size();
    hash_combine(h, p.base);
    for (ArrowId a : p.arrows)
        hash_combine(h, a);
    return h;
}

Path prepend(const Quiver& q, ArrowId a, const Path& p)
{
    Path out{q.source(a), {}};
    out.arrows.reserve(p.length() + 1);
    out.arrows.push_back(a);
    out.arrows.insert(out.arrows.end(), p.arrows.begin(), p.arrows.end());
    return out;
}

Path append(const Path& p, ArrowId a)
{
    Path out = p;
    out.arrows.push_back(a);
    return out;
}

std::size_t require_index(const ParallelBasis& basis, const PathPair& pair)
{
    auto idx = basis.index_of(pair);
    if (!idx)
        throw std::logic_error("image pair missing from codomain basis");
    return *idx;
}

std::size_t total_size(const std::vector<ParallelBasis>& summands)
{
    std::size_t total = 0;
    for (const auto& b : summands)
        total += b.size();
    return total;
}

} // namespace

std::size_t PathPairHash::operator()(const PathPair& pp) const noexcept
{
    std::size_t h = hash_path(pp.first);
    hash_combine(h, hash_path(pp.second));
    return h;
}

ParallelBasis::ParallelBasis(std::size_t first_length, std::size_t second_length, std::vector<PathPair> pairs)
    : first_length_(first_length), second_length_(second_length), pairs_(std::move(pairs))
{
    std::sort(pairs_.begin(), pairs_.end());
    index_.reserve(pairs_.size());
    for (std::size_t k = 0; k < pairs_.size(); ++k) {
        const auto& [p, q] = pairs_[k];
        if (p.length() != first_length_ || q.length() != second_length_)
            throw std::invalid_argument("pair lengths do not match the basis");
        if (!index_.emplace(pairs_[k], k).second)
            throw std::invalid_argument("duplicate pair in basis");
    }
}

std::optional<std::size_t> ParallelBasis::index_of(const PathPair& pair) const
{
    auto it = index_.find(pair);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

SparseIntMatrix SparseIntMatrix::from_triplets(std::size_t rows, std::size_t cols, std::vector<MatrixEntry> entries)
{
    for (const auto& e : entries)
        if (e.row >= rows || e.col >= cols)
            throw std::out_of_range("matrix entry index out of range");
    std::sort(entries.begin(), entries.end(), [](const MatrixEntry& a, const MatrixEntry& b) {
        return std::tie(a.row, a.col) < std::tie(b.row, b.col);
    });
    SparseIntMatrix m(rows, cols);
    for (auto& e : entries) {
        if (!m.entries_.empty() && m.entries_.back().row == e.row && m.entries_.back().col == e.col) {
            m.entries_.back().value += e.value;
            continue;
        }
        if (!m.entries_.empty() && m.entries_.back().value.is_zero())
            m.entries_.pop_back();
        m.entries_.push_back(std::move(e));
    }
    if (!m.entries_.empty() && m.entries_.back().value.is_zero())
        m.entries_.pop_back();
    return m;
}

SparseIntMatrix SparseIntMatrix::from_dense(const DenseIntMatrix& dense)
{
    std::vector<MatrixEntry> entries;
    for (Eigen::Index r = 0; r < dense.rows(); ++r)
        for (Eigen::Index c = 0; c < dense.cols(); ++c)
            if (!dense(r, c).is_zero())
                entries.push_back({static_cast<std::size_t>(r), static_cast<std::size_t>(c), dense(r, c)});
    return from_triplets(static_cast<std::size_t>(dense.rows()), static_cast<std::size_t>(dense.cols()),
                         std::move(entries));
}

BigInt SparseIntMatrix::coeff(std::size_t row, std::size_t col) const
{
    auto it = std::lower_bound(entries_.begin(), entries_.end(), std::pair{row, col},
                               [](const MatrixEntry& e, const std::pair<std::size_t, std::size_t>& key) {
                                   return std::tie(e.row, e.col) < std::tie(key.first, key.second);
                               });
    if (it != entries_.end() && it->row == row && it->col == col)
        return it->value;
    return 0;
}

SparseIntMatrix SparseIntMatrix::transpose() const
{
    std::vector<MatrixEntry> flipped;
    flipped.reserve(entries_.size());
    for (const auto& e : entries_)
        flipped.push_back({e.col, e.row, e.value});
    return from_triplets(cols_, rows_, std::move(flipped));
}

DenseIntMatrix SparseIntMatrix::to_dense() const
{
    DenseIntMatrix d = DenseIntMatrix::Constant(static_cast<Eigen::Index>(rows_), static_cast<Eigen::Index>(cols_),
                                                BigInt(0));
    for (const auto& e : entries_)
        d(static_cast<Eigen::Index>(e.row), static_cast<Eigen::Index>(e.col)) = e.value;
    return d;
}

std::vector<BigInt> SparseIntMatrix::apply(std::span<const BigInt> x) const
{
    if (x.size() != cols_)
        throw std::invalid_argument("vector length does not match column count");
    std::vector<BigInt> y(rows_, BigInt(0));
    for (const auto& e : entries_)
        y[e.row] += e.value * x[e.col];
    return y;
}

SparseIntMatrix operator*(const SparseIntMatrix& a, const SparseIntMatrix& b)
{
    if (a.cols_ != b.rows_)
        throw std::invalid_argument("matrix product dimension mismatch");
    // b's rows are contiguous in its row-major entry list
    std::vector<std::size_t> row_start(b.rows_ + 1, 0);
    for (const auto& e : b.entries_)
        ++row_start[e.row + 1];
    for (std::size_t r = 0; r < b.rows_; ++r)
        row_start[r + 1] += row_start[r];

    std::vector<MatrixEntry> out;
    for (const auto& ea : a.entries_)
        for (std::size_t k = row_start[ea.col]; k < row_start[ea.col + 1]; ++k)
            out.push_back({ea.row, b.entries_[k].col, ea.value * b.entries_[k].value});
    return SparseIntMatrix::from_triplets(a.rows_, b.cols_, std::move(out));
}

bool operator==(const SparseIntMatrix& a, const SparseIntMatrix& b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || a.entries_.size() != b.entries_.size())
        return false;
    for (std::size_t k = 0; k < a.entries_.size(); ++k) {
        const auto& x = a.entries_[k];
        const auto& y = b.entries_[k];
        if (x.row != y.row || x.col != y.col || x.value != y.value)
            return false;
    }
    return true;
}

std::size_t ComplexSlice::domain_offset(std::size_t summand) const
{
    std::size_t off = 0;
    for (std::size_t s = 0; s < summand; ++s)
        off += domain.at(s).size();
    return off;
}

std::size_t ComplexSlice::codomain_offset(std::size_t summand) const
{
    std::size_t off = 0;
    for (std::size_t s = 0; s < summand; ++s)
        off += codomain.at(s).size();
    return off;
}

std::size_t cochain_path_length(int n, int m)
{
    if (n < 2 || m < 0)
        throw std::invalid_argument("need n >= 2 and a nonnegative degree");
    const auto i = static_cast<std::size_t>(m / 2);
    return static_cast<std::size_t>(n) * i + static_cast<std::size_t>(m % 2);
}

BigInt cochain_dim(const Quiver& q, int n, int m)
{
    const std::size_t length = cochain_path_length(n, m);
    BigInt total = 0;
    for (int j = 0; j < n; ++j)
        total += count_parallel(q, static_cast<std::size_t>(j), length);
    return total;
}

ParallelBasis build_basis(const Quiver& q, std::size_t j, std::size_t length, const EnumerationLimits& limits)
{
    const BigInt size = count_parallel(q, j, length);
    if (size > BigInt(static_cast<unsigned long>(limits.max_paths)))
        throw CapExceeded("basis (" + std::to_string(j) + "//" + std::to_string(length) + ") has " + size.str() +
                          " pairs (cap " + std::to_string(limits.max_paths) + ")");
    std::vector<PathPair> pairs;
    pairs.reserve(static_cast<std::size_t>(size.to_u64()));
    const DenseIntMatrix first_counts = path_count_matrix(q, j);
    const DenseIntMatrix second_counts = path_count_matrix(q, length);
    for (VertexId u = 0; u < q.vertex_count(); ++u) {
        for (VertexId v = 0; v < q.vertex_count(); ++v) {
            if (first_counts(u, v).is_zero() || second_counts(u, v).is_zero())
                continue;
            const auto firsts = enumerate_paths(q, j, u, v, limits);
            const auto seconds = enumerate_paths(q, length, u, v, limits);
            for (const auto& p : firsts)
                for (const auto& r : seconds)
                    pairs.emplace_back(p, r);
        }
    }
    return ParallelBasis(j, length, std::move(pairs));
}

std::vector<ParallelBasis> cochain_summands(const Quiver& q, int n, int m, const EnumerationLimits& limits)
{
    const std::size_t length = cochain_path_length(n, m);
    std::vector<ParallelBasis> summands;
    summands.reserve(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
        summands.push_back(build_basis(q, static_cast<std::size_t>(j), length, limits));
    return summands;
}

SparseIntMatrix odd_block(const Quiver& q, const ParallelBasis& domain, const ParallelBasis& codomain)
{
    std::vector<MatrixEntry> entries;
    for (std::size_t col = 0; col < domain.size(); ++col) {
        const auto& [p, r] = domain[col];
        for (ArrowId a : q.arrows_in(origin(q, p)))
            entries.push_back({require_index(codomain, {prepend(q, a, p), prepend(q, a, r)}), col, BigInt(1)});
        for (ArrowId a : q.arrows_out(terminus(q, p)))
            entries.push_back({require_index(codomain, {append(p, a), append(r, a)}), col, BigInt(-1)});
    }
    return SparseIntMatrix::from_triplets(codomain.size(), domain.size(), std::move(entries));
}

SparseIntMatrix build_odd_block(const Quiver& q, int n, int i, int j, const EnumerationLimits& limits)
{
    if (i < 0 || j < 0 || j > n - 2)
        throw std::invalid_argument("odd block needs i >= 0 and 0 <= j <= n-2");
    const std::size_t length = cochain_path_length(n, 2 * i);
    const auto domain = build_basis(q, static_cast<std::size_t>(j), length, limits);
    const auto codomain = build_basis(q, static_cast<std::size_t>(j + 1), length + 1, limits);
    return odd_block(q, domain, codomain);
}

SparseIntMatrix even_block(const Quiver& q, int n, const ParallelBasis& domain, const ParallelBasis& codomain,
                           const EnumerationLimits& limits)
{
    const auto top = static_cast<std::size_t>(n - 1);
    // heads[v][l]: length-l paths ending at v; tails[v][l]: length-l paths starting at v
    std::vector<std::vector<std::vector<Path>>> heads(q.vertex_count());
    std::vector<std::vector<std::vector<Path>>> tails(q.vertex_count());
    auto prepare = [&](VertexId v) {
        if (!heads[v].empty())
            return;
        heads[v].resize(top + 1);
        tails[v].resize(top + 1);
        for (std::size_t l = 0; l <= top; ++l) {
            for (VertexId u = 0; u < q.vertex_count(); ++u) {
                for (auto& s : enumerate_paths(q, l, u, v, limits))
                    heads[v][l].push_back(std::move(s));
                for (auto& t : enumerate_paths(q, l, v, u, limits))
                    tails[v][l].push_back(std::move(t));
            }
        }
    };

    std::vector<MatrixEntry> entries;
    for (std::size_t col = 0; col < domain.size(); ++col) {
        const Path& p = domain[col].second;
        const VertexId v = origin(q, p);
        prepare(v);
        for (std::size_t ls = 0; ls <= top; ++ls)
            for (const auto& s : heads[v][ls])
                for (const auto& t : tails[v][top - ls])
                    entries.push_back({require_index(codomain, {concat(q, s, t), concat(q, s, p, t)}), col, BigInt(1)});
    }
    return SparseIntMatrix::from_triplets(codomain.size(), domain.size(), std::move(entries));
}

SparseIntMatrix build_even_block(const Quiver& q, int n, int i, const EnumerationLimits& limits)
{
    if (i < 1)
        throw std::invalid_argument("even block needs i >= 1");
    const auto domain = build_basis(q, 0, cochain_path_length(n, 2 * i - 1), limits);
    const auto codomain = build_basis(q, static_cast<std::size_t>(n - 1), cochain_path_length(n, 2 * i), limits);
    return even_block(q, n, domain, codomain, limits);
}

ComplexSlice assemble_differential(const Quiver& q, int n, int m, const EnumerationLimits& limits)
{
    if (m < 1)
        throw std::invalid_argument("differentials start at degree 1");
    ComplexSlice slice;
    slice.degree = m;
    slice.domain = cochain_summands(q, n, m - 1, limits);
    slice.codomain = cochain_summands(q, n, m, limits);

    std::vector<MatrixEntry> entries;
    auto place = [&](const SparseIntMatrix& block, std::size_t from, std::size_t to) {
        const std::size_t col0 = slice.domain_offset(from);
        const std::size_t row0 = slice.codomain_offset(to);
        for (const auto& e : block.entries())
            entries.push_back({row0 + e.row, col0 + e.col, e.value});
    };
    const auto top = static_cast<std::size_t>(n - 1);
    if (m % 2 == 1) {
        for (std::size_t j = 0; j < top; ++j)
            place(odd_block(q, slice.domain[j], slice.codomain[j + 1]), j, j + 1);
    } else {
        place(even_block(q, n, slice.domain[0], slice.codomain[top], limits), 0, top);
    }
    slice.matrix = SparseIntMatrix::from_triplets(total_size(slice.codomain), total_size(slice.domain),
                                                  std::move(entries));
    return slice;
}

std::string format_pair(const Quiver& q, const PathPair& pair)
{
    return "(" + format_path(q, pair.first) + "," + format_path(q, pair.second) + ")";
}

void dump_slice(std::ostream& os, const Quiver& q, const ComplexSlice& slice)
{
    std::vector<std::string> cols;
    for (const auto& b : slice.domain)
        for (const auto& pair : b)
            cols.push_back(format_pair(q, pair));
    os << "d^" << slice.degree << ": " << slice.matrix.rows() << " x " << slice.matrix.cols() << "\n";
    os << "cols:";
    for (const auto& c : cols)
        os << ' ' << c;
    os << "\n";
    const DenseIntMatrix dense = slice.matrix.to_dense();
    std::size_t row = 0;
    for (const auto& b : slice.codomain) {
        for (const auto& pair : b) {
            os << format_pair(q, pair) << ':';
            for (std::size_t c = 0; c < cols.size(); ++c)
                os << ' ' << dense(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(c));
            os << "\n";
            ++row;
        }
    }
}

} // namespace hochschild
