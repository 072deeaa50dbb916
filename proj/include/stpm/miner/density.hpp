#pragma once

#include <optional>
#include <span>

#include "stpm/core/types.hpp"
#include "stpm/join/neighbors.hpp"
#include "stpm/microcluster/index.hpp"

namespace stpm {

/// Instances per unit volume. Throws on a non-positive volume.
double density(std::size_t count_in_space, double volume);

/// Strength of the following relation f1 -> f2 over raw instances: the mean
/// neighborhood density of f2 around the anchors divided by the global f2
/// density in V. Returns 0 when f2 has no instance inside V. Throws on an
/// empty anchor set.
double density_ratio(const EventDataset& ds, std::span<const Row> anchors,
                     TypeId follower, const NeighborhoodParams& params);

/// Modified density: total instance count of the given microclusters divided
/// by the volume.
double modified_density(const MicroclusterIndex& index,
                        std::span<const ClusterPos> clusters_inside, double volume);

/// Microcluster analogue of density_ratio: neighborhood densities are computed
/// from covered instance counts and weighted by anchor cluster sizes. The
/// global term counts instances of f2 clusters whose representative lies
/// inside V.
double modified_density_ratio(const EventDataset& ds, const MicroclusterIndex& index,
                              std::span<const ClusterPos> anchors, TypeId follower,
                              const NeighborhoodParams& params);

/// Sequence-index recursion step: the base case (no prefix) passes the ratio
/// through, longer sequences take the minimum.
double sequence_index(std::optional<double> prefix_index, double last_ratio);

} // namespace stpm
