#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>

#include "hochschild/bigint.hpp"
#include "hochschild/complex.hpp"

namespace hochschild {

/// The working field: Q (characteristic 0) or F_p.
class FieldSpec {
public:
    static FieldSpec rationals() { return FieldSpec(0); }
    /// Throws std::invalid_argument unless `p` is a prime below 2^31.
    static FieldSpec prime(std::uint64_t p);
    /// 0 or a prime.
    static FieldSpec of_characteristic(std::uint64_t characteristic);

    std::uint64_t characteristic() const { return characteristic_; }
    bool is_rationals() const { return characteristic_ == 0; }
    std::string name() const;

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

private:
    explicit FieldSpec(std::uint64_t c) : characteristic_(c) {}
    std::uint64_t characteristic_;
};

bool is_prime(std::uint64_t p);

/// Components up to this size are reduced densely; larger ones sparsely.
inline constexpr std::size_t dense_limit = 256;

/// Rank over the field, with entries reduced into it.
///
/// The matrix is first split into the connected components of its
/// row/column incidence graph; the rank is the sum of component ranks.
/// Characteristic 0 uses fraction-free elimination on integers
/// (Bareiss when dense, content-normalised row reduction when sparse);
/// characteristic p eliminates over residues. No floating point is used.
std::size_t rank(const SparseIntMatrix& mat, FieldSpec field);

/// cols - rank.
std::size_t kernel_dim(const SparseIntMatrix& mat, FieldSpec field);

/// Whether mat * x = target has a solution over the field, decided by
/// comparing the rank of mat with the rank of [mat | target].
bool is_in_image(const SparseIntMatrix& mat, std::span<const BigInt> target, FieldSpec field);

/// Fraction-free Gaussian elimination; returns the rank over Q.
std::size_t bareiss_rank(DenseIntMatrix m);

/// Gaussian elimination over F_p on residues in [0, p).
std::size_t rank_mod_p(DenseMatrix<std::uint64_t> m, std::uint64_t p);

} // namespace hochschild
