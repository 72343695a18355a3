#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hochschild/bigint.hpp"
#include "hochschild/quiver.hpp"

namespace hochschild {

using PathPair = std::pair<Path, Path>;

struct PathPairHash {
    std::size_t operator()(const PathPair& pp) const noexcept;
};

/// Ordered basis of k(i//j): pairs (p, q) of parallel paths with l(p) = i,
/// l(q) = j, sorted lexicographically in (p, q).
class ParallelBasis {
public:
    ParallelBasis(std::size_t first_length, std::size_t second_length, std::vector<PathPair> pairs);

    std::size_t first_length() const { return first_length_; }
    std::size_t second_length() const { return second_length_; }
    std::size_t size() const { return pairs_.size(); }
    bool empty() const { return pairs_.empty(); }

    const PathPair& operator[](std::size_t k) const { return pairs_[k]; }
    auto begin() const { return pairs_.begin(); }
    auto end() const { return pairs_.end(); }

    std::optional<std::size_t> index_of(const PathPair& pair) const;

private:
    std::size_t first_length_;
    std::size_t second_length_;
    std::vector<PathPair> pairs_;
    std::unordered_map<PathPair, std::size_t, PathPairHash> index_;
};

struct MatrixEntry {
    std::size_t row = 0;
    std::size_t col = 0;
    BigInt value;
};

/// Integer matrix stored as its nonzero entries, sorted row-major, at most
/// one per position.
class SparseIntMatrix {
public:
    SparseIntMatrix(std::size_t rows = 0, std::size_t cols = 0) : rows_(rows), cols_(cols) {}

    /// Sums entries sharing a position and drops the resulting zeros.
    static SparseIntMatrix from_triplets(std::size_t rows, std::size_t cols, std::vector<MatrixEntry> entries);
    static SparseIntMatrix from_dense(const DenseIntMatrix& dense);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t nonzeros() const { return entries_.size(); }
    const std::vector<MatrixEntry>& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }

    BigInt coeff(std::size_t row, std::size_t col) const;
    SparseIntMatrix transpose() const;
    DenseIntMatrix to_dense() const;
    std::vector<BigInt> apply(std::span<const BigInt> x) const;

    friend SparseIntMatrix operator*(const SparseIntMatrix& a, const SparseIntMatrix& b);
    friend bool operator==(const SparseIntMatrix& a, const SparseIntMatrix& b);

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<MatrixEntry> entries_;
};

/// Differential d^m : M^{m-1} -> M^m with the summand bases on both sides.
struct ComplexSlice {
    int degree = 0;
    std::vector<ParallelBasis> domain;
    std::vector<ParallelBasis> codomain;
    SparseIntMatrix matrix;

    std::size_t domain_offset(std::size_t summand) const;
    std::size_t codomain_offset(std::size_t summand) const;
};

/// Length of the second path in every summand k(j//L) of M^m:
/// ni for m = 2i, ni + 1 for m = 2i + 1.
std::size_t cochain_path_length(int n, int m);

/// dim M^m = sum over j < n of |(j//L)|, computed by counting alone.
BigInt cochain_dim(const Quiver& q, int n, int m);

ParallelBasis build_basis(const Quiver& q, std::size_t j, std::size_t length, const EnumerationLimits& limits = {});

/// Summand bases k(0//L), ..., k(n-1//L) of M^m.
std::vector<ParallelBasis> cochain_summands(const Quiver& q, int n, int m, const EnumerationLimits& limits = {});

/// d^{2i+1}_j : k(j//ni) -> k(j+1//ni+1), (p,q) -> sum (ap,aq) - sum (pa,qa).
SparseIntMatrix build_odd_block(const Quiver& q, int n, int i, int j, const EnumerationLimits& limits = {});
SparseIntMatrix odd_block(const Quiver& q, const ParallelBasis& domain, const ParallelBasis& codomain);

/// d^{2i}_0 : k(0//n(i-1)+1) -> k(n-1//ni), (o(p),p) -> sum over l(sq)=n-1 of (sq, spq).
SparseIntMatrix build_even_block(const Quiver& q, int n, int i, const EnumerationLimits& limits = {});
SparseIntMatrix even_block(const Quiver& q, int n, const ParallelBasis& domain, const ParallelBasis& codomain,
                           const EnumerationLimits& limits = {});

/// The full differential d^m, m >= 1, laid out over the summand bases.
ComplexSlice assemble_differential(const Quiver& q, int n, int m, const EnumerationLimits& limits = {});

/// Text dump of a slice with path-labelled rows and columns.
void dump_slice(std::ostream& os, const Quiver& q, const ComplexSlice& slice);

std::string format_pair(const Quiver& q, const PathPair& pair);

} // namespace hochschild
