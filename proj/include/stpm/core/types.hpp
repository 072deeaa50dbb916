#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace stpm {

using TypeId = std::uint32_t;
using Row = std::uint32_t; // position of an instance in EventDataset::instances()

struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    double length() const { return hi - lo; }
    bool contains(double v) const { return v >= lo && v <= hi; }
};

/// The embedding space V: one closed interval per spatial dimension plus the
/// temporal extent. Spatial dimensionality is 1 or 2, fixed per dataset.
struct EmbeddingSpace {
    std::vector<Interval> spatial;
    Interval temporal;

    int spatial_dim() const { return static_cast<int>(spatial.size()); }
    bool contains(double x, double y, double t) const {
        if (!temporal.contains(t) || !spatial[0].contains(x)) return false;
        return spatial.size() < 2 || spatial[1].contains(y);
    }
};

/// Cylindrical neighborhood shape: spatial radius R and temporal depth T.
struct NeighborhoodParams {
    double radius = 0.0;
    double interval = 0.0;
};

/// Per-axis divisors for the microclustering distance (d_s spatial, d_t temporal).
/// Identity (1, 1) means raw coordinates.
struct NormalizationParams {
    double spatial = 1.0;
    double temporal = 1.0;

    bool is_identity() const { return spatial == 1.0 && temporal == 1.0; }
};

/// One event occurrence. For 1-D spatial datasets y is fixed to 0, which makes
/// all distance computations dimension-agnostic.
struct EventInstance {
    std::string id;
    TypeId type = 0;
    double x = 0.0;
    double y = 0.0;
    double t = 0.0;
};

/// The event-type set F, the instance collection D and the embedding space V.
/// Instances are validated on construction (unique ids, known types, finite
/// coordinates) and immutable afterwards; datasets are safe to share across
/// threads read-only.
class EventDataset {
public:
    EventDataset(std::vector<std::string> event_types,
                 std::vector<EventInstance> instances,
                 EmbeddingSpace space);

    const std::vector<std::string>& event_types() const { return event_types_; }
    const std::vector<EventInstance>& instances() const { return instances_; }
    const EmbeddingSpace& space() const { return space_; }
    int spatial_dim() const { return space_.spatial_dim(); }
    std::size_t size() const { return instances_.size(); }

    const std::string& type_name(TypeId t) const { return event_types_[t]; }
    std::optional<TypeId> type_id(std::string_view name) const;

    /// Rows of all instances of one type, in ascending row order.
    const std::vector<Row>& rows_of_type(TypeId t) const { return rows_by_type_[t]; }

    /// Type ids ordered by type symbol (the deterministic iteration order used
    /// by the miner).
    const std::vector<TypeId>& types_by_symbol() const { return types_by_symbol_; }

    std::optional<Row> row_of_id(std::string_view id) const;

private:
    std::vector<std::string> event_types_;
    std::vector<EventInstance> instances_;
    EmbeddingSpace space_;
    std::vector<std::vector<Row>> rows_by_type_;
    std::vector<TypeId> types_by_symbol_;
    std::unordered_map<std::string_view, Row> row_by_id_;
};

} // namespace stpm
