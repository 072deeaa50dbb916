#pragma once

#include <span>
#include <vector>

#include "stpm/core/types.hpp"
#include "stpm/microcluster/index.hpp"

namespace stpm {

struct JoinStats {
    std::size_t candidates_examined = 0;
};

/// A neighborhood query: anchors, the followed event type and the cylinder
/// parameters.
struct NeighborQuery {
    std::vector<std::uint32_t> sources; // rows or cluster positions
    TypeId target_type = 0;
    NeighborhoodParams params;
};

/// Neighborhoods over raw instances. For each anchor e the result holds the
/// rows p (ascending) of target-type instances with spatial distance <= R and
/// 0 < p.time - e.time <= T. Results align with the anchor order. Implemented
/// as a time sweep with an R-cell spatial grid over the active window;
/// equivalent to the brute-force definition set for set.
std::vector<std::vector<Row>> instance_neighbors(const EventDataset& ds,
                                                 std::span<const Row> anchor_rows,
                                                 TypeId target_type,
                                                 const NeighborhoodParams& params,
                                                 JoinStats* stats = nullptr);

/// Neighborhoods over microcluster representatives: same predicate evaluated
/// on representative locations/times. Entries are cluster positions into
/// index.clusters(), ascending.
std::vector<std::vector<ClusterPos>> microcluster_neighbors(
    const MicroclusterIndex& index, std::span<const ClusterPos> anchors,
    TypeId target_type, const NeighborhoodParams& params, JoinStats* stats = nullptr);

/// Union of the member sets of the given clusters, ascending rows.
std::vector<Row> covered_instances(const MicroclusterIndex& index,
                                   std::span<const ClusterPos> neighbor_positions);

} // namespace stpm
