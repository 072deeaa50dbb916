#pragma once

#include "stpm/core/types.hpp"

namespace stpm {

/// A bare spatio-temporal location, detached from any instance.
struct STPoint {
    double x = 0.0;
    double y = 0.0; // 0 for 1-D data
    double t = 0.0;
};

inline STPoint point_of(const EventInstance& e) { return {e.x, e.y, e.t}; }

/// Volume of the embedding space: product of all spatial extents and the
/// temporal extent. Throws on a zero extent in any dimension.
double space_volume(const EmbeddingSpace& space);

/// Volume of the cylindrical neighborhood space: pi*R^2*T for 2-D spatial
/// data, 2*R*T for 1-D. Constant across instances; never clipped to the
/// boundary of V.
double neighborhood_volume(const NeighborhoodParams& params, int spatial_dim);

/// Euclidean distance over (location, time) after dividing spatial axes by
/// norm.spatial and the temporal axis by norm.temporal. Identity
/// normalization gives the plain Euclidean distance.
double st_distance(const STPoint& a, const STPoint& b,
                   const NormalizationParams& norm = {});

/// Squared st_distance. The evaluation order (dx*dx + dy*dy) + dt*dt is fixed:
/// the SIMD kernels replicate it term by term, so scalar and vector paths
/// produce bit-identical values.
double st_distance2(const STPoint& a, const STPoint& b,
                    const NormalizationParams& norm = {});

} // namespace stpm
