#pragma once

#include <optional>
#include <span>
#include <vector>

#include "stpm/core/geometry.hpp"
#include "stpm/core/types.hpp"

namespace stpm {

using ClusterPos = std::uint32_t; // position in MicroclusterIndex::clusters()

/// One entry of the microclustering index: a group of same-type instances
/// summarized by their count and mean location/time.
struct Microcluster {
    std::uint32_t cid = 0;
    TypeId type = 0;
    std::vector<Row> members; // dataset rows, insertion order
    double rep_x = 0.0;
    double rep_y = 0.0;
    double rep_t = 0.0;

    std::size_t count() const { return members.size(); }
    STPoint rep() const { return {rep_x, rep_y, rep_t}; }
};

struct BuildParams {
    double diameter = 0.0;
    std::optional<std::size_t> cap; // max instances per cluster, when set
    NormalizationParams norm;
};

/// All microclusters of a dataset, grouped by event type. Clusters are stored
/// in ascending cid order; member sets partition the dataset within each type.
/// Immutable after construction.
class MicroclusterIndex {
public:
    MicroclusterIndex(std::vector<Microcluster> clusters, std::size_t type_count,
                      BuildParams params);

    const std::vector<Microcluster>& clusters() const { return clusters_; }
    const Microcluster& cluster(ClusterPos p) const { return clusters_[p]; }
    std::size_t size() const { return clusters_.size(); }
    const BuildParams& params() const { return params_; }

    /// Positions of all type-f clusters, ascending cid.
    const std::vector<ClusterPos>& positions_of_type(TypeId t) const {
        return by_type_[t];
    }

    std::optional<ClusterPos> position_of_cid(std::uint32_t cid) const;

private:
    std::vector<Microcluster> clusters_;
    std::vector<std::vector<ClusterPos>> by_type_;
    BuildParams params_;
};

/// Root-mean-square pairwise st_distance among members (0 for a singleton).
/// Throws on an empty set.
double cluster_diameter(std::span<const STPoint> points,
                        const NormalizationParams& norm = {});
double cluster_diameter(const EventDataset& ds, std::span<const Row> member_rows,
                        const NormalizationParams& norm = {});

/// dataset_size / index_size; throws when index_size is zero.
double compression_ratio(std::size_t dataset_size, std::size_t index_size);

/// Diameter-limited greedy clustering: per event type, instances are processed
/// in ascending (time, id) order, inserted into the nearest cluster by
/// instance-to-representative st_distance (ties to the lowest cid), and any
/// cluster whose diameter exceeds `d` is split recursively.
MicroclusterIndex build_index(const EventDataset& ds, double d,
                              const NormalizationParams& norm = {});

/// As build_index, but additionally splits any cluster holding more than
/// `cap` instances; every resulting cluster satisfies both bounds.
MicroclusterIndex build_index_capped(const EventDataset& ds, double d,
                                     std::size_t cap,
                                     const NormalizationParams& norm = {});

/// Splits a cluster at its farthest member pair (ties to the lexicographically
/// smallest id pair); remaining members join the nearer seed (ties to the
/// first seed). Throws on a singleton.
std::pair<Microcluster, Microcluster> split_cluster(
    const EventDataset& ds, const Microcluster& cluster,
    const NormalizationParams& norm = {});

} // namespace stpm
