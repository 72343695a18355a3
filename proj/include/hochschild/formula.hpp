#pragma once

#include <cstddef>

#include "hochschild/bigint.hpp"
#include "hochschild/direct.hpp"
#include "hochschild/linalg.hpp"
#include "hochschild/quiver.hpp"

namespace hochschild {

/// n = m e + r with 0 <= r < e, for a basic cycle of length e.
struct BasicCycleParams {
    std::size_t e = 0;
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t r = 0;

    static BasicCycleParams from(std::size_t e, std::size_t n);
};

/// Number of j in [0, n-2] with j congruent to (n mod e) * i modulo e.
std::size_t c_value(std::size_t n, std::size_t e, std::size_t i);

/// Closed-form dimensions for a basic cycle of length e >= 2.
/// Throws FormulaDeclined for e = 1 (the single loop).
CohomologyReport theorem1_dims(std::size_t e, int n, FieldSpec field, int max_degree);

/// Closed-form dimensions for a connected quiver that is not a basic cycle,
/// from path counts and j-extremes. dim H^0 = dim Z(A) is read off the
/// kernel of d^1. Throws FormulaDeclined for basic cycles and disconnected
/// quivers; a cap overflow truncates the report.
CohomologyReport theorem2_dims(const Quiver& q, int n, FieldSpec field, int max_degree,
                               const EnumerationLimits& limits = {});

/// Dispatches to theorem1_dims or theorem2_dims by classifying `q`.
CohomologyReport dims_formula(const Quiver& q, int n, FieldSpec field, int max_degree,
                              const EnumerationLimits& limits = {});

} // namespace hochschild
