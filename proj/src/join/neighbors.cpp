#include "stpm/join/neighbors.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <unordered_map>

#include "stpm/errors.hpp"
#include "stpm/kernels/kernels.hpp"

namespace stpm {
namespace {

struct SweepPoint {
    double x, y, t;
    std::uint32_t payload; // row or cluster position
};

std::int64_t cell_key(double x, double y, double cell) {
    const auto cx = static_cast<std::int64_t>(std::floor(x / cell));
    const auto cy = static_cast<std::int64_t>(std::floor(y / cell));
    return (cx << 32) ^ (cy & 0xffffffff);
}

// Active-window grid over the target points currently inside (a.t, a.t + T].
class ActiveGrid {
public:
    ActiveGrid(const std::vector<SweepPoint>& targets, double cell)
        : targets_(targets), cell_(cell) {}

    void add(std::uint32_t pos) {
        cells_[cell_key(targets_[pos].x, targets_[pos].y, cell_)].push_back(pos);
    }

    void remove(std::uint32_t pos) {
        auto it = cells_.find(cell_key(targets_[pos].x, targets_[pos].y, cell_));
        auto& v = it->second;
        v.erase(std::find(v.begin(), v.end(), pos));
        if (v.empty()) cells_.erase(it);
    }

    void gather(double x, double y, int spatial_dim, std::vector<std::uint32_t>& out) const {
        const auto cx = static_cast<std::int64_t>(std::floor(x / cell_));
        const auto cy = static_cast<std::int64_t>(std::floor(y / cell_));
        const std::int64_t dy_lo = spatial_dim == 2 ? -1 : 0;
        const std::int64_t dy_hi = spatial_dim == 2 ? 1 : 0;
        for (std::int64_t dx = -1; dx <= 1; ++dx)
            for (std::int64_t dy = dy_lo; dy <= dy_hi; ++dy) {
                auto it = cells_.find(((cx + dx) << 32) ^ ((cy + dy) & 0xffffffff));
                if (it != cells_.end())
                    out.insert(out.end(), it->second.begin(), it->second.end());
            }
    }

private:
    const std::vector<SweepPoint>& targets_;
    double cell_;
    std::unordered_map<std::int64_t, std::vector<std::uint32_t>> cells_;
};

// Conservative upper bound for the window advance: anything that could satisfy
// round(p.t - a.t) <= T lies below it. The kernel re-evaluates the exact
// predicate, so a slightly wide window only costs a candidate check.
double window_bound(double at, double T) {
    return (at + T) + 4.0 * DBL_EPSILON * (std::fabs(at) + T);
}

std::vector<std::vector<std::uint32_t>> sweep(std::vector<SweepPoint> anchors,
                                              std::vector<SweepPoint> targets,
                                              int spatial_dim,
                                              const NeighborhoodParams& params,
                                              std::size_t anchor_count,
                                              JoinStats* stats) {
    std::vector<std::vector<std::uint32_t>> result(anchor_count);
    if (anchors.empty() || targets.empty()) return result;

    auto by_time = [](const SweepPoint& a, const SweepPoint& b) {
        if (a.t != b.t) return a.t < b.t;
        return a.payload < b.payload;
    };
    // Anchor payloads here are output slots, so this ordering is deterministic.
    std::sort(anchors.begin(), anchors.end(), by_time);
    std::sort(targets.begin(), targets.end(), by_time);

    ActiveGrid grid(targets, params.radius);
    const double r2 = params.radius * params.radius;
    std::size_t lo = 0, hi = 0;

    std::vector<std::uint32_t> candidates;
    std::vector<double> cx, cy, ct;
    std::vector<std::uint32_t> hits;

    for (const SweepPoint& a : anchors) {
        const double bound = window_bound(a.t, params.interval);
        while (hi < targets.size() && targets[hi].t <= bound)
            grid.add(static_cast<std::uint32_t>(hi++));
        while (lo < hi && targets[lo].t <= a.t)
            grid.remove(static_cast<std::uint32_t>(lo++));

        candidates.clear();
        grid.gather(a.x, a.y, spatial_dim, candidates);
        if (candidates.empty()) continue;
        if (stats) stats->candidates_examined += candidates.size();

        cx.resize(candidates.size());
        cy.resize(candidates.size());
        ct.resize(candidates.size());
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            const SweepPoint& p = targets[candidates[i]];
            cx[i] = p.x;
            cy[i] = p.y;
            ct[i] = p.t;
        }
        hits.resize(candidates.size());
        const std::size_t n = kernels::range_filter(
            a.x, a.y, a.t, cx.data(), cy.data(), ct.data(), candidates.size(), r2,
            params.interval, hits.data());

        auto& out = result[a.payload];
        for (std::size_t i = 0; i < n; ++i)
            out.push_back(targets[candidates[hits[i]]].payload);
    }

    for (auto& v : result) std::sort(v.begin(), v.end());
    return result;
}

void check_params(const NeighborhoodParams& params) {
    if (!(params.radius > 0.0) || !(params.interval > 0.0))
        throw std::invalid_argument("neighborhood radius and interval must be positive");
}

} // namespace

std::vector<std::vector<Row>> instance_neighbors(const EventDataset& ds,
                                                 std::span<const Row> anchor_rows,
                                                 TypeId target_type,
                                                 const NeighborhoodParams& params,
                                                 JoinStats* stats) {
    check_params(params);
    if (target_type >= ds.event_types().size())
        throw std::invalid_argument("unknown target type");

    std::vector<SweepPoint> anchors;
    anchors.reserve(anchor_rows.size());
    for (std::size_t i = 0; i < anchor_rows.size(); ++i) {
        const EventInstance& e = ds.instances().at(anchor_rows[i]);
        anchors.push_back({e.x, e.y, e.t, static_cast<std::uint32_t>(i)});
    }

    std::vector<SweepPoint> targets;
    const auto& rows = ds.rows_of_type(target_type);
    targets.reserve(rows.size());
    for (Row r : rows) {
        const EventInstance& e = ds.instances()[r];
        targets.push_back({e.x, e.y, e.t, r});
    }

    return sweep(std::move(anchors), std::move(targets), ds.spatial_dim(), params,
                 anchor_rows.size(), stats);
}

std::vector<std::vector<ClusterPos>> microcluster_neighbors(
    const MicroclusterIndex& index, std::span<const ClusterPos> anchor_positions,
    TypeId target_type, const NeighborhoodParams& params, JoinStats* stats) {
    check_params(params);

    std::vector<SweepPoint> anchors;
    anchors.reserve(anchor_positions.size());
    for (std::size_t i = 0; i < anchor_positions.size(); ++i) {
        const Microcluster& c = index.cluster(anchor_positions[i]);
        anchors.push_back({c.rep_x, c.rep_y, c.rep_t, static_cast<std::uint32_t>(i)});
    }

    std::vector<SweepPoint> targets;
    const auto& positions = index.positions_of_type(target_type);
    targets.reserve(positions.size());
    for (ClusterPos p : positions) {
        const Microcluster& c = index.cluster(p);
        targets.push_back({c.rep_x, c.rep_y, c.rep_t, p});
    }

    // 1-D representatives all carry y = 0, so probing the y-neighbor cells is
    // a no-op; the 2-D probe pattern is correct for both dimensionalities.
    return sweep(std::move(anchors), std::move(targets), 2, params,
                 anchor_positions.size(), stats);
}

std::vector<Row> covered_instances(const MicroclusterIndex& index,
                                   std::span<const ClusterPos> neighbor_positions) {
    std::vector<Row> rows;
    for (ClusterPos p : neighbor_positions) {
        const auto& members = index.cluster(p).members;
        rows.insert(rows.end(), members.begin(), members.end());
    }
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    return rows;
}

} // namespace stpm
