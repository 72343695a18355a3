#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "hochschild/complex.hpp"
#include "hochschild/linalg.hpp"
#include "hochschild/quiver.hpp"

namespace testing {

using namespace hochschild;

inline Quiver corpus(const std::string& name) { return load_quiver(std::string(HH_DATA_DIR) + "/" + name + ".q"); }

inline const std::vector<std::string>& corpus_names()
{
    static const std::vector<std::string> names{"a2", "a3", "k2", "c2", "c3", "c4", "l1", "th", "sc", "l1tail"};
    return names;
}

// connected and not a basic cycle
inline const std::vector<std::string>& general_names()
{
    static const std::vector<std::string> names{"a2", "a3", "k2", "th", "sc", "l1tail"};
    return names;
}

inline const std::vector<std::uint64_t>& test_chars()
{
    static const std::vector<std::uint64_t> chars{0, 2, 3, 5};
    return chars;
}

inline Path word(const Quiver& q, const std::string& w) { return parse_path(q, w); }

inline PathPair pair(const Quiver& q, const std::string& p, const std::string& r)
{
    return {parse_path(q, p), parse_path(q, r)};
}

/// Every arrow word of the given length, filtered to composable ones from u to v.
inline std::vector<std::vector<ArrowId>> brute_paths(const Quiver& q, std::size_t length, VertexId u, VertexId v)
{
    std::vector<std::vector<ArrowId>> out;
    const std::size_t na = q.arrow_count();
    if (length == 0) {
        if (u == v)
            out.emplace_back();
        return out;
    }
    if (na == 0)
        return out;
    std::vector<ArrowId> w(length, 0);
    while (true) {
        bool ok = q.source(w.front()) == u && q.target(w.back()) == v;
        for (std::size_t k = 0; ok && k + 1 < length; ++k)
            ok = q.target(w[k]) == q.source(w[k + 1]);
        if (ok)
            out.push_back(w);
        std::size_t k = length;
        while (k > 0 && w[k - 1] + 1 == na)
            w[--k] = 0;
        if (k == 0)
            break;
        ++w[k - 1];
    }
    return out;
}

inline std::size_t brute_parallel(const Quiver& q, std::size_t i, std::size_t j)
{
    std::size_t total = 0;
    for (VertexId u = 0; u < q.vertex_count(); ++u)
        for (VertexId v = 0; v < q.vertex_count(); ++v)
            total += brute_paths(q, i, u, v).size() * brute_paths(q, j, u, v).size();
    return total;
}

/// Textbook Gaussian elimination over Q (mpq) or F_p (int64), dense.
inline std::size_t oracle_rank(const SparseIntMatrix& m, std::uint64_t p)
{
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    if (p == 0) {
        std::vector<std::vector<mpq_class>> a(rows, std::vector<mpq_class>(cols, 0));
        for (const auto& e : m.entries())
            a[e.row][e.col] = mpq_class(mpz_class(e.value.str()));
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols && r < rows; ++c) {
            std::size_t piv = r;
            while (piv < rows && a[piv][c] == 0)
                ++piv;
            if (piv == rows)
                continue;
            std::swap(a[piv], a[r]);
            for (std::size_t k = r + 1; k < rows; ++k) {
                if (a[k][c] == 0)
                    continue;
                mpq_class f = a[k][c] / a[r][c];
                for (std::size_t t = c; t < cols; ++t)
                    a[k][t] -= f * a[r][t];
            }
            ++r;
        }
        return r;
    }
    const auto P = static_cast<std::int64_t>(p);
    std::vector<std::vector<std::int64_t>> a(rows, std::vector<std::int64_t>(cols, 0));
    for (const auto& e : m.entries()) {
        mpz_class v(e.value.str());
        mpz_class red = v % mpz_class(P);
        if (red < 0)
            red += P;
        a[e.row][e.col] = red.get_si();
    }
    auto inverse = [&](std::int64_t x) {
        std::int64_t result = 1, base = x, ex = P - 2;
        while (ex > 0) {
            if (ex & 1)
                result = result * base % P;
            base = base * base % P;
            ex >>= 1;
        }
        return result;
    };
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv][c] == 0)
            ++piv;
        if (piv == rows)
            continue;
        std::swap(a[piv], a[r]);
        const std::int64_t inv = inverse(a[r][c]);
        for (std::size_t k = r + 1; k < rows; ++k) {
            if (a[k][c] == 0)
                continue;
            const std::int64_t f = a[k][c] * inv % P;
            for (std::size_t t = c; t < cols; ++t)
                a[k][t] = ((a[k][t] - f * a[r][t]) % P + P) % P;
        }
        ++r;
    }
    return r;
}

inline SparseIntMatrix dense(std::initializer_list<std::initializer_list<long>> rows)
{
    std::vector<MatrixEntry> entries;
    std::size_t r = 0, cols = 0;
    for (const auto& row : rows) {
        std::size_t c = 0;
        for (long v : row)
            entries.push_back({r, c++, BigInt(v)});
        cols = c;
        ++r;
    }
    return SparseIntMatrix::from_triplets(r, cols, std::move(entries));
}

inline std::vector<BigInt> ints(std::initializer_list<long> values)
{
    std::vector<BigInt> out;
    for (long v : values)
        out.emplace_back(v);
    return out;
}

} // namespace testing
