#include "stpm/core/geometry.hpp"

#include <cmath>
#include <numbers>

#include "stpm/errors.hpp"

namespace stpm {

double space_volume(const EmbeddingSpace& space) {
    double v = space.temporal.length();
    for (const auto& iv : space.spatial) v *= iv.length();
    if (!(v > 0.0)) throw std::invalid_argument("zero-volume space");
    return v;
}

double neighborhood_volume(const NeighborhoodParams& params, int spatial_dim) {
    if (!(params.radius > 0.0) || !(params.interval > 0.0))
        throw std::invalid_argument("neighborhood radius and interval must be positive");
    switch (spatial_dim) {
        case 1: return 2.0 * params.radius * params.interval;
        case 2: return std::numbers::pi * params.radius * params.radius * params.interval;
        default: throw std::invalid_argument("unsupported spatial dimensionality");
    }
}

double st_distance2(const STPoint& a, const STPoint& b, const NormalizationParams& norm) {
    const double dx = a.x / norm.spatial - b.x / norm.spatial;
    const double dy = a.y / norm.spatial - b.y / norm.spatial;
    const double dt = a.t / norm.temporal - b.t / norm.temporal;
    return (dx * dx + dy * dy) + dt * dt;
}

double st_distance(const STPoint& a, const STPoint& b, const NormalizationParams& norm) {
    return std::sqrt(st_distance2(a, b, norm));
}

} // namespace stpm
