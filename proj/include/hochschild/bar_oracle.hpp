#pragma once

#include <cstddef>
#include <vector>

#include "hochschild/bigint.hpp"
#include "hochschild/complex.hpp"
#include "hochschild/linalg.hpp"
#include "hochschild/quiver.hpp"

namespace hochschild {

struct OracleLimits {
    std::size_t max_algebra_dim = 12;
    int max_degree = 4;
};

/// dim_k kQ/k^nQ: the number of paths of length < n.
BigInt algebra_dim(const Quiver& q, int n);

/// Cochains and differentials of the reduced bar complex of A = kQ/k^nQ
/// relative to the vertex subalgebra E: C^m = Hom_{E-E}(r^{(x)_E m}, A), r the
/// arrow ideal, with the usual Hochschild coboundary. Shares no code with the
/// path-pair complex.
class BarComplex {
public:
    BarComplex(const Quiver& q, int n, const OracleLimits& limits = {});

    std::size_t algebra_dim() const { return paths_.size(); }
    std::size_t cochain_dim(int m) const;
    /// delta^m : C^m -> C^{m+1}.
    SparseIntMatrix coboundary(int m) const;

private:
    struct Chain {
        VertexId anchor = 0;  // position of the empty chain
        std::vector<int> elems;
    };

    int product(int x, int y) const;
    VertexId chain_origin(const Chain& c) const;
    VertexId chain_terminus(const Chain& c) const;
    std::vector<Chain> chains(int m) const;
    std::vector<int> key(const Chain& c, int target) const;

    const Quiver* quiver_;
    int n_;
    OracleLimits limits_;
    std::vector<Path> paths_;
    std::vector<VertexId> origin_;
    std::vector<VertexId> terminus_;
    std::vector<std::vector<int>> product_;
    std::vector<std::vector<std::vector<int>>> parallel_;  // [u][v] -> path ids
};

/// dim H^m for m = 0..max_degree (max_degree <= limits.max_degree).
/// Throws CapExceeded when dim A exceeds the bound.
std::vector<BigInt> dims_bar(const Quiver& q, int n, FieldSpec field, int max_degree, const OracleLimits& limits = {});

/// dim Z(A) by solving z a = a z over every basis path a.
std::size_t center_dim_bruteforce(const Quiver& q, int n, FieldSpec field, const OracleLimits& limits = {});

} // namespace hochschild
