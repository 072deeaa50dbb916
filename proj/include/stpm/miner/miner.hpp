#pragma once

#include <vector>

#include "stpm/core/types.hpp"
#include "stpm/microcluster/index.hpp"

namespace stpm {

struct MinerConfig {
    NeighborhoodParams params;
    double theta = 1.0; // significance threshold
    int max_len = 20;   // pattern length cap
};

/// A significant sequential pattern: its event-type chain, sequence index and
/// the size of its tail event set (instances for the baseline miner,
/// microclusters for the index miner).
struct PatternResult {
    std::vector<TypeId> types;
    double index_value = 0.0;
    std::size_t tail_size = 0;
};

struct MiningStats {
    std::size_t expansions = 0;  // sequence nodes expanded
    std::size_t evaluations = 0; // candidate ratios computed
    double join_ms = 0.0;        // time spent in neighborhood joins
    double total_ms = 0.0;
};

struct MiningResult {
    std::vector<PatternResult> patterns; // depth-first emission order
    MiningStats stats;
};

/// ST-Miner over raw instances: depth-first expansion of all significant
/// sequences, tails carried as instance sets, ratios and neighborhoods
/// recomputed per expansion with the plane-sweep join. Reference
/// implementation for equivalence testing.
MiningResult mine_baseline(const EventDataset& ds, const MinerConfig& config);

/// Micro-ST-Miner: the same expansion over the reduced dataset. All
/// cluster-to-cluster neighborhoods are precomputed once from the index
/// (the index is small by construction), so expansions reduce to weighted
/// count sums and tail unions.
MiningResult mine_micro(const EventDataset& ds, const MicroclusterIndex& index,
                        const MinerConfig& config);

} // namespace stpm
