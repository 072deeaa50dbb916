#pragma once

#include <cstddef>

#include "stpm/core/types.hpp"
#include "stpm/microcluster/index.hpp"

namespace stpm::detail {

// Shared ratio arithmetic: (mean neighborhood density) / (global density).
double ratio_from_counts(std::size_t neighbor_total, std::size_t anchor_count,
                         double neighborhood_vol, std::size_t global_count,
                         double space_vol);

std::size_t count_inside(const EventDataset& ds, TypeId type);

std::size_t cluster_instances_inside(const EventDataset& ds,
                                     const MicroclusterIndex& index, TypeId type);

} // namespace stpm::detail
