#include "stpm/miner/miner.hpp"

#include <algorithm>
#include <chrono>
#include <set>

#include "density_internal.hpp"
#include "stpm/core/geometry.hpp"
#include "stpm/errors.hpp"
#include "stpm/join/neighbors.hpp"
#include "stpm/miner/density.hpp"

namespace stpm {
namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void check_config(const MinerConfig& config) {
    if (!(config.theta > 0.0)) throw std::invalid_argument("theta must be positive");
    if (config.max_len < 2) throw std::invalid_argument("max_len must be at least 2");
}

std::vector<std::uint32_t> sorted_union(const std::vector<std::vector<std::uint32_t>>& lists) {
    std::vector<std::uint32_t> out;
    for (const auto& l : lists) out.insert(out.end(), l.begin(), l.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

struct Emitter {
    MiningResult result;
    std::set<std::vector<TypeId>> seen;

    void emit(const std::vector<TypeId>& types, double index_value, std::size_t tail_size) {
        if (!seen.insert(types).second) return; // one path per chain; defensive
        result.patterns.push_back({types, index_value, tail_size});
    }
};

struct BaselineMiner {
    const EventDataset& ds;
    const MinerConfig& config;
    double vol_n;
    double vol_v;
    std::vector<std::size_t> global_count; // per type, instances inside V
    Emitter out;

    void expand(std::vector<TypeId>& chain, const std::vector<Row>& tail,
                std::optional<double> prefix_index) {
        ++out.result.stats.expansions;
        for (TypeId g : ds.types_by_symbol()) {
            ++out.result.stats.evaluations;
            const auto t0 = Clock::now();
            const auto lists = instance_neighbors(ds, tail, g, config.params);
            out.result.stats.join_ms += ms_since(t0);

            std::size_t total = 0;
            for (const auto& l : lists) total += l.size();
            const double ratio = detail::ratio_from_counts(total, tail.size(), vol_n,
                                                           global_count[g], vol_v);
            const double value = sequence_index(prefix_index, ratio);
            if (value < config.theta) continue;

            auto new_tail = sorted_union(lists);
            chain.push_back(g);
            out.emit(chain, value, new_tail.size());
            if (static_cast<int>(chain.size()) < config.max_len && !new_tail.empty())
                expand(chain, new_tail, value);
            chain.pop_back();
        }
    }
};

struct MicroMiner {
    const EventDataset& ds;
    const MicroclusterIndex& index;
    const MinerConfig& config;
    double vol_n;
    double vol_v;
    std::vector<std::size_t> global_count; // per type, covered instances inside V
    // Per target type, per cluster position: neighbor positions and the total
    // instance count they cover.
    std::vector<std::vector<std::vector<ClusterPos>>> neighbors;
    std::vector<std::vector<std::size_t>> covered;
    Emitter out;

    void precompute() {
        const std::size_t nt = ds.event_types().size();
        std::vector<ClusterPos> all(index.size());
        for (ClusterPos p = 0; p < index.size(); ++p) all[p] = p;

        neighbors.resize(nt);
        covered.resize(nt);
        for (TypeId g = 0; g < nt; ++g) {
            const auto t0 = Clock::now();
            neighbors[g] = microcluster_neighbors(index, all, g, config.params);
            out.result.stats.join_ms += ms_since(t0);
            covered[g].resize(index.size(), 0);
            for (ClusterPos p = 0; p < index.size(); ++p) {
                std::size_t total = 0;
                for (ClusterPos q : neighbors[g][p]) total += index.cluster(q).count();
                covered[g][p] = total;
            }
        }
    }

    void expand(std::vector<TypeId>& chain, const std::vector<ClusterPos>& tail,
                std::optional<double> prefix_index) {
        ++out.result.stats.expansions;
        for (TypeId g : ds.types_by_symbol()) {
            ++out.result.stats.evaluations;
            double ratio = 0.0;
            if (global_count[g] > 0) {
                double weighted = 0.0;
                double weight_sum = 0.0;
                for (ClusterPos p : tail) {
                    const double w = static_cast<double>(index.cluster(p).count());
                    weighted += w * (static_cast<double>(covered[g][p]) / vol_n);
                    weight_sum += w;
                }
                const double global_density = static_cast<double>(global_count[g]) / vol_v;
                ratio = weighted / (weight_sum * global_density);
            }
            const double value = sequence_index(prefix_index, ratio);
            if (value < config.theta) continue;

            std::vector<std::uint32_t> merged;
            for (ClusterPos p : tail)
                merged.insert(merged.end(), neighbors[g][p].begin(), neighbors[g][p].end());
            std::sort(merged.begin(), merged.end());
            merged.erase(std::unique(merged.begin(), merged.end()), merged.end());

            chain.push_back(g);
            out.emit(chain, value, merged.size());
            if (static_cast<int>(chain.size()) < config.max_len && !merged.empty())
                expand(chain, merged, value);
            chain.pop_back();
        }
    }
};

} // namespace

MiningResult mine_baseline(const EventDataset& ds, const MinerConfig& config) {
    check_config(config);
    const auto t0 = Clock::now();

    BaselineMiner miner{ds, config, neighborhood_volume(config.params, ds.spatial_dim()),
                        space_volume(ds.space()), {}, {}};
    miner.global_count.resize(ds.event_types().size());
    for (TypeId t = 0; t < ds.event_types().size(); ++t)
        miner.global_count[t] = detail::count_inside(ds, t);

    std::vector<TypeId> chain;
    for (TypeId f : ds.types_by_symbol()) {
        const auto& tail = ds.rows_of_type(f);
        if (tail.empty()) continue;
        chain.assign(1, f);
        miner.expand(chain, tail, std::nullopt);
    }

    miner.out.result.stats.total_ms = ms_since(t0);
    return std::move(miner.out.result);
}

MiningResult mine_micro(const EventDataset& ds, const MicroclusterIndex& index,
                        const MinerConfig& config) {
    check_config(config);
    const auto t0 = Clock::now();

    MicroMiner miner{ds,
                     index,
                     config,
                     neighborhood_volume(config.params, ds.spatial_dim()),
                     space_volume(ds.space()),
                     {},
                     {},
                     {},
                     {}};
    miner.global_count.resize(ds.event_types().size());
    for (TypeId t = 0; t < ds.event_types().size(); ++t)
        miner.global_count[t] = detail::cluster_instances_inside(ds, index, t);
    miner.precompute();

    std::vector<TypeId> chain;
    for (TypeId f : ds.types_by_symbol()) {
        const auto& tail = index.positions_of_type(f);
        if (tail.empty()) continue;
        chain.assign(1, f);
        miner.expand(chain, tail, std::nullopt);
    }

    miner.out.result.stats.total_ms = ms_since(t0);
    return std::move(miner.out.result);
}

} // namespace stpm
