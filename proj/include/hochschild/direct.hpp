#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hochschild/bigint.hpp"
#include "hochschild/complex.hpp"
#include "hochschild/linalg.hpp"
#include "hochschild/quiver.hpp"

namespace hochschild {

enum class Engine { direct, formula };

std::string to_string(Engine e);

/// Rank bookkeeping behind one degree: dim H^m = cochain_dim - rank_in - rank_out,
/// where rank_in = rank d^m and rank_out = rank d^{m+1}.
struct DegreeDetail {
    int degree = 0;
    BigInt cochain_dim;
    BigInt rank_in;
    BigInt rank_out;
};

struct CohomologyReport {
    std::string quiver_name;
    int n = 0;
    std::uint64_t characteristic = 0;
    std::vector<BigInt> dims;
    std::vector<Engine> engines;
    std::vector<DegreeDetail> details;
    std::vector<std::string> warnings;
    /// First degree that could not be computed, when the run was cut short.
    std::optional<int> truncated_at;
    std::string truncation_reason;

    bool complete(int max_degree) const { return static_cast<int>(dims.size()) == max_degree + 1; }
};

/// The cochain complex of kQ/k^nQ with lazily built, cached differentials
/// and ranks. Not thread-safe; use one instance per thread.
class TruncatedComplex {
public:
    TruncatedComplex(Quiver q, int n, EnumerationLimits limits = {});

    const Quiver& quiver() const { return quiver_; }
    int n() const { return n_; }

    /// d^m for m >= 1. Throws CapExceeded.
    const ComplexSlice& differential(int m);
    BigInt cochain_dim(int m) const;
    /// rank d^m, with rank d^0 = 0.
    std::size_t rank_of(int m, FieldSpec field);

private:
    Quiver quiver_;
    int n_;
    EnumerationLimits limits_;
    std::map<int, ComplexSlice> slices_;
    std::map<std::pair<int, std::uint64_t>, std::size_t> ranks_;
};

/// dim H^m(kQ/k^nQ) for m = 0..max_degree from the cochain complex.
/// A size-cap overflow at degree m stops the run; degrees below m are kept.
CohomologyReport dims_direct(const Quiver& q, int n, FieldSpec field, int max_degree,
                             const EnumerationLimits& limits = {});
CohomologyReport dims_direct(TruncatedComplex& complex, FieldSpec field, int max_degree);

} // namespace hochschild
