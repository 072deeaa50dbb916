#include "stpm/miner/density.hpp"

#include <algorithm>

#include "density_internal.hpp"
#include "stpm/core/geometry.hpp"
#include "stpm/errors.hpp"

namespace stpm {

double density(std::size_t count_in_space, double volume) {
    if (!(volume > 0.0)) throw std::invalid_argument("zero-volume space");
    return static_cast<double>(count_in_space) / volume;
}

namespace detail {

double ratio_from_counts(std::size_t neighbor_total, std::size_t anchor_count,
                         double neighborhood_vol, std::size_t global_count,
                         double space_vol) {
    if (global_count == 0) return 0.0;
    const double mean_density =
        (static_cast<double>(neighbor_total) / static_cast<double>(anchor_count)) /
        neighborhood_vol;
    return mean_density / (static_cast<double>(global_count) / space_vol);
}

std::size_t count_inside(const EventDataset& ds, TypeId type) {
    std::size_t n = 0;
    for (Row r : ds.rows_of_type(type)) {
        const EventInstance& e = ds.instances()[r];
        if (ds.space().contains(e.x, e.y, e.t)) ++n;
    }
    return n;
}

std::size_t cluster_instances_inside(const EventDataset& ds,
                                     const MicroclusterIndex& index, TypeId type) {
    std::size_t n = 0;
    for (ClusterPos p : index.positions_of_type(type)) {
        const Microcluster& c = index.cluster(p);
        if (ds.space().contains(c.rep_x, c.rep_y, c.rep_t)) n += c.count();
    }
    return n;
}

} // namespace detail

double density_ratio(const EventDataset& ds, std::span<const Row> anchors,
                     TypeId follower, const NeighborhoodParams& params) {
    if (anchors.empty()) throw std::invalid_argument("empty tail");
    const auto lists = instance_neighbors(ds, anchors, follower, params);
    std::size_t total = 0;
    for (const auto& l : lists) total += l.size();
    return detail::ratio_from_counts(total, anchors.size(),
                                     neighborhood_volume(params, ds.spatial_dim()),
                                     detail::count_inside(ds, follower),
                                     space_volume(ds.space()));
}

double modified_density(const MicroclusterIndex& index,
                        std::span<const ClusterPos> clusters_inside, double volume) {
    if (!(volume > 0.0)) throw std::invalid_argument("zero-volume space");
    std::size_t total = 0;
    for (ClusterPos p : clusters_inside) total += index.cluster(p).count();
    return static_cast<double>(total) / volume;
}

double modified_density_ratio(const EventDataset& ds, const MicroclusterIndex& index,
                              std::span<const ClusterPos> anchors, TypeId follower,
                              const NeighborhoodParams& params) {
    if (anchors.empty()) throw std::invalid_argument("empty tail");
    const std::size_t global = detail::cluster_instances_inside(ds, index, follower);
    if (global == 0) return 0.0;

    const double vol_n = neighborhood_volume(params, ds.spatial_dim());
    const auto lists = microcluster_neighbors(index, anchors, follower, params);

    double weighted = 0.0;
    double weight_sum = 0.0;
    for (std::size_t i = 0; i < anchors.size(); ++i) {
        std::size_t covered = 0;
        for (ClusterPos p : lists[i]) covered += index.cluster(p).count();
        const double w = static_cast<double>(index.cluster(anchors[i]).count());
        weighted += w * (static_cast<double>(covered) / vol_n);
        weight_sum += w;
    }
    const double global_density = static_cast<double>(global) / space_volume(ds.space());
    return weighted / (weight_sum * global_density);
}

double sequence_index(std::optional<double> prefix_index, double last_ratio) {
    if (!prefix_index) return last_ratio;
    return std::min(*prefix_index, last_ratio);
}

} // namespace stpm
