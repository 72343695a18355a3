#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "hochschild/bigint.hpp"
#include "hochschild/complex.hpp"
#include "hochschild/quiver.hpp"

namespace hochschild {

struct Movements {
    std::vector<PathPair> plus;
    std::vector<PathPair> minus;
};

/// The +movements and -movements of a parallel pair (p, q) with l(p) >= 1.
///
/// +movements exist when p and q share their first arrow a and t(p) is not a
/// sink: (a p', a q') -> (p' b, q' b) for each arrow b leaving t(p). The
/// -movements are the mirror image on last arrows and sources. An empty list
/// marks the pair as a +extreme (resp. -extreme).
Movements movement_neighbors(const Quiver& q, const PathPair& pair);

bool is_plus_extreme(const Quiver& q, const PathPair& pair);
bool is_minus_extreme(const Quiver& q, const PathPair& pair);

/// One movement-equivalence class of (j//L).
struct MovementClass {
    std::vector<std::size_t> members;  // indices into the basis, ascending
    bool plus_extreme_off_sink = false;  // some +extreme does not end at a sink
    bool minus_extreme_off_source = false;  // some -extreme does not start at a source
    bool has_plus_extreme = false;
    bool has_minus_extreme = false;

    bool is_j_extreme() const { return !plus_extreme_off_sink && !minus_extreme_off_source; }
    /// A class without any extreme element qualifies only vacuously.
    bool vacuous() const { return !has_plus_extreme && !has_minus_extreme; }
};

struct MovementPartition {
    ParallelBasis basis;
    std::vector<MovementClass> classes;
};

/// Partition of (j//L) into movement-equivalence classes (union-find over
/// +movement edges), with the extremity diagnosis of each class.
MovementPartition movement_classes(const Quiver& q, std::size_t j, std::size_t length,
                                   const EnumerationLimits& limits = {});

/// |{j-extremes}| of (j//ni) for j = 1..n-1. For j = n-1 this is |(n-1//ni)|.
std::map<int, BigInt> count_extremes(const Quiver& q, int n, int i, const EnumerationLimits& limits = {});

} // namespace hochschild
