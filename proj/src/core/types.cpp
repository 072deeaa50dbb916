#include "stpm/core/types.hpp"

#include <algorithm>
#include <cmath>

#include "stpm/errors.hpp"

namespace stpm {

EventDataset::EventDataset(std::vector<std::string> event_types,
                           std::vector<EventInstance> instances,
                           EmbeddingSpace space)
    : event_types_(std::move(event_types)),
      instances_(std::move(instances)),
      space_(std::move(space)) {
    if (space_.spatial_dim() != 1 && space_.spatial_dim() != 2)
        throw DataError("spatial dimensionality must be 1 or 2");
    for (const auto& iv : space_.spatial)
        if (!(iv.hi >= iv.lo)) throw DataError("spatial extent has hi < lo");
    if (!(space_.temporal.hi >= space_.temporal.lo))
        throw DataError("temporal extent has hi < lo");

    rows_by_type_.resize(event_types_.size());
    row_by_id_.reserve(instances_.size());
    for (Row r = 0; r < instances_.size(); ++r) {
        const EventInstance& e = instances_[r];
        if (e.type >= event_types_.size())
            throw DataError("instance '" + e.id + "' has unknown event type");
        if (!std::isfinite(e.x) || !std::isfinite(e.y) || !std::isfinite(e.t))
            throw DataError("instance '" + e.id + "' has non-finite coordinates");
        if (!row_by_id_.emplace(instances_[r].id, r).second)
            throw DataError("duplicate instance id '" + e.id + "'");
        rows_by_type_[e.type].push_back(r);
    }

    types_by_symbol_.resize(event_types_.size());
    for (TypeId t = 0; t < event_types_.size(); ++t) types_by_symbol_[t] = t;
    std::sort(types_by_symbol_.begin(), types_by_symbol_.end(),
              [&](TypeId a, TypeId b) { return event_types_[a] < event_types_[b]; });
}

std::optional<TypeId> EventDataset::type_id(std::string_view name) const {
    for (TypeId t = 0; t < event_types_.size(); ++t)
        if (event_types_[t] == name) return t;
    return std::nullopt;
}

std::optional<Row> EventDataset::row_of_id(std::string_view id) const {
    auto it = row_by_id_.find(id);
    if (it == row_by_id_.end()) return std::nullopt;
    return it->second;
}

} // namespace stpm
