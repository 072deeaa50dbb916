#pragma once

#include <iosfwd>
#include <string>

#include "stpm/microcluster/index.hpp"

namespace stpm {

/// CSV schema: cid,event_type,count,rep_x[,rep_y],rep_t,member_ids with member
/// ids ';'-separated. rep_y is present only for 2-D spatial datasets.
void write_index_csv(const MicroclusterIndex& index, const EventDataset& ds,
                     std::ostream& out);
void write_index_csv(const MicroclusterIndex& index, const EventDataset& ds,
                     const std::string& path);

/// Parses an index CSV against its dataset, resolving member ids to rows and
/// validating that member sets partition the dataset within each event type.
MicroclusterIndex read_index_csv(std::istream& in, const EventDataset& ds);
MicroclusterIndex read_index_csv(const std::string& path, const EventDataset& ds);

} // namespace stpm
