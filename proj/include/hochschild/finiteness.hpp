#pragma once

#include <optional>
#include <vector>

#include "hochschild/complex.hpp"
#include "hochschild/linalg.hpp"
#include "hochschild/quiver.hpp"

namespace hochschild {

struct FinitenessVerdict {
    bool finite = true;
    std::optional<Path> witness_cycle;  // shortest oriented cycle when infinite
};

/// H^*(kQ/k^nQ) is finite-dimensional exactly when Q has no oriented cycle.
FinitenessVerdict decide_finiteness(const Quiver& q, int n);

/// For the shortest cycle w = a_1...a_e, the pair (a_e, a_e w^{nr}) in (1//nre+1).
PathPair witness_cocycle(const Quiver& q, int n, int r);

/// Whether (a_e, a_e w^{nr}) lies outside the image of
/// d^{2re+1}_0 : k(0//nre) -> k(1//nre+1) over the field, which certifies
/// H^{2re+1} != 0. Throws std::invalid_argument for acyclic quivers and
/// CapExceeded when the block is too large to build.
bool witness_nonvanishing(const Quiver& q, int n, FieldSpec field, int r, const EnumerationLimits& limits = {});

struct Certificate {
    int r = 0;
    int degree = 0;
    bool nonvanishing = false;
};

/// Certificates for each r in `rs`; empty for acyclic quivers.
std::vector<Certificate> finiteness_certificates(const Quiver& q, int n, FieldSpec field, const std::vector<int>& rs,
                                                 const EnumerationLimits& limits = {});

} // namespace hochschild
