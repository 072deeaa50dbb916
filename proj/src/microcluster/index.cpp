#include "stpm/microcluster/index.hpp"

#include <algorithm>
#include <cmath>

#include "stpm/errors.hpp"

namespace stpm {

MicroclusterIndex::MicroclusterIndex(std::vector<Microcluster> clusters,
                                     std::size_t type_count, BuildParams params)
    : clusters_(std::move(clusters)), params_(std::move(params)) {
    std::sort(clusters_.begin(), clusters_.end(),
              [](const Microcluster& a, const Microcluster& b) { return a.cid < b.cid; });
    by_type_.resize(type_count);
    for (ClusterPos p = 0; p < clusters_.size(); ++p) {
        const Microcluster& c = clusters_[p];
        if (c.members.empty())
            throw InternalError("microcluster with no members");
        if (p > 0 && clusters_[p - 1].cid == c.cid)
            throw DataError("duplicate microcluster cid");
        if (c.type >= type_count)
            throw DataError("microcluster references unknown event type");
        by_type_[c.type].push_back(p);
    }
}

std::optional<ClusterPos> MicroclusterIndex::position_of_cid(std::uint32_t cid) const {
    auto it = std::lower_bound(
        clusters_.begin(), clusters_.end(), cid,
        [](const Microcluster& c, std::uint32_t v) { return c.cid < v; });
    if (it == clusters_.end() || it->cid != cid) return std::nullopt;
    return static_cast<ClusterPos>(it - clusters_.begin());
}

double cluster_diameter(std::span<const STPoint> points, const NormalizationParams& norm) {
    if (points.empty()) throw std::invalid_argument("diameter of an empty set");
    const std::size_t m = points.size();
    if (m == 1) return 0.0;
    double acc = 0.0;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            acc += st_distance2(points[i], points[j], norm);
    const double denom = static_cast<double>(m) * static_cast<double>(m - 1);
    return std::sqrt((2.0 * acc) / denom);
}

double cluster_diameter(const EventDataset& ds, std::span<const Row> member_rows,
                        const NormalizationParams& norm) {
    std::vector<STPoint> pts;
    pts.reserve(member_rows.size());
    for (Row r : member_rows) pts.push_back(point_of(ds.instances()[r]));
    return cluster_diameter(pts, norm);
}

double compression_ratio(std::size_t dataset_size, std::size_t index_size) {
    if (index_size == 0) throw std::invalid_argument("compression ratio of an empty index");
    return static_cast<double>(dataset_size) / static_cast<double>(index_size);
}

} // namespace stpm
