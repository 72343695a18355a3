#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

#include <gmpxx.h>
#include <Eigen/Core>

namespace hochschild {

/// Arbitrary-precision signed integer.
///
/// A plain value wrapper over GMP. Operators return BigInt rather than GMP
/// expression templates, which keeps the type usable as an Eigen scalar.
class BigInt {
public:
    BigInt() = default;
    BigInt(int v) : value_(v) {}
    BigInt(long v) : value_(v) {}
    BigInt(long long v) : value_(static_cast<long>(v)) {}
    BigInt(unsigned v) : value_(v) {}
    BigInt(unsigned long v) : value_(v) {}
    BigInt(unsigned long long v) : value_(static_cast<unsigned long>(v)) {}
    explicit BigInt(mpz_class v) : value_(std::move(v)) {}
    explicit BigInt(const std::string& decimal) : value_(decimal, 10) {}

    BigInt& operator+=(const BigInt& o) { value_ += o.value_; return *this; }
    BigInt& operator-=(const BigInt& o) { value_ -= o.value_; return *this; }
    BigInt& operator*=(const BigInt& o) { value_ *= o.value_; return *this; }
    // truncating division; exact wherever the library uses it
    BigInt& operator/=(const BigInt& o) { mpz_tdiv_q(value_.get_mpz_t(), value_.get_mpz_t(), o.value_.get_mpz_t()); return *this; }
    BigInt& operator%=(const BigInt& o) { mpz_tdiv_r(value_.get_mpz_t(), value_.get_mpz_t(), o.value_.get_mpz_t()); return *this; }

    friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
    friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
    friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }
    friend BigInt operator/(BigInt a, const BigInt& b) { return a /= b; }
    friend BigInt operator%(BigInt a, const BigInt& b) { return a %= b; }
    BigInt operator-() const { return BigInt(mpz_class(-value_)); }

    friend bool operator==(const BigInt& a, const BigInt& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b)
    {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

    int sign() const { return sgn(value_); }
    bool is_zero() const { return sign() == 0; }
    bool fits_u64() const { return value_ >= 0 && mpz_sizeinbase(value_.get_mpz_t(), 2) <= 64; }
    std::uint64_t to_u64() const;
    std::string str() const { return value_.get_str(); }

    /// Least nonnegative residue modulo a positive machine-size modulus.
    std::uint64_t residue(std::uint64_t modulus) const
    {
        return mpz_fdiv_ui(value_.get_mpz_t(), static_cast<unsigned long>(modulus));
    }

    const mpz_class& mpz() const { return value_; }

    friend BigInt gcd(const BigInt& a, const BigInt& b)
    {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), a.value_.get_mpz_t(), b.value_.get_mpz_t());
        return BigInt(std::move(g));
    }
    friend BigInt abs(const BigInt& a) { return BigInt(mpz_class(::abs(a.value_))); }
    /// Exact quotient; undefined if `b` does not divide `a`.
    friend BigInt divexact(const BigInt& a, const BigInt& b)
    {
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), a.value_.get_mpz_t(), b.value_.get_mpz_t());
        return BigInt(std::move(q));
    }

    friend std::ostream& operator<<(std::ostream& os, const BigInt& b) { return os << b.value_; }

private:
    mpz_class value_;
};

inline std::uint64_t BigInt::to_u64() const
{
    std::uint64_t out = 0;
    mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, value_.get_mpz_t());
    return out;
}

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using DenseIntMatrix = DenseMatrix<BigInt>;

} // namespace hochschild

namespace Eigen {

template <>
struct NumTraits<hochschild::BigInt> : GenericNumTraits<hochschild::BigInt> {
    using Real = hochschild::BigInt;
    using NonInteger = hochschild::BigInt;
    using Literal = hochschild::BigInt;
    using Nested = hochschild::BigInt;
    enum {
        IsInteger = 1,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 6,
        AddCost = 150,
        MulCost = 100
    };
};

} // namespace Eigen
