#pragma once

#include <cstdint>
#include <functional>

#include "spheres/sphere_class.hpp"

namespace spheres {

struct OracleConfig {
    // Hard cap on requested path lengths; LimitExceeded beyond it.
    int max_len_cap = 64;
};

// Literal signed crossing sum along an arbitrary edge path, backtracking
// included. Consecutive steps must chain (each starts where the previous
// ended; BrokenPath otherwise). Independent of the geodesic machinery, so it
// serves as a cross-check for pair_intersection_number.
Weight path_intersection_sum(std::span<const GeodesicStep> path, const SphereClass& A);

// An edge path inside a hull. A path of length 0 is a bare vertex.
struct HullPath {
    ReducedWord start;
    ReducedWord end;
    std::vector<GeodesicStep> steps;
};

// Visits every edge path within h of length <= max_len whose two endpoints
// lie on h.boundary, length-0 paths and backtracking included, in a fixed
// deterministic order. The visited object is reused between calls.
void enumerate_paths(const SupportHull& h, int max_len,
                     const std::function<void(const HullPath&)>& visit,
                     const OracleConfig& config = {});

// Deterministic seeded class: up to support_bound edges with base length
// <= radius and nonzero weights of magnitude <= weight_bound. Identical
// seeds and bounds give identical classes; duplicate edge draws collapse,
// so the support may end up smaller than support_bound.
SphereClass random_class(Rank rank, int support_bound, int radius, Weight weight_bound,
                         std::uint64_t seed);

}  // namespace spheres
