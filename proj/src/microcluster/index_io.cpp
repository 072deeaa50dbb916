#include "stpm/microcluster/index_io.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "../common/csv.hpp"
#include "stpm/errors.hpp"

namespace stpm {

void write_index_csv(const MicroclusterIndex& index, const EventDataset& ds,
                     std::ostream& out) {
    const bool two_d = ds.spatial_dim() == 2;
    out << (two_d ? "cid,event_type,count,rep_x,rep_y,rep_t,member_ids\n"
                  : "cid,event_type,count,rep_x,rep_t,member_ids\n");
    for (const Microcluster& c : index.clusters()) {
        out << c.cid << ',' << ds.type_name(c.type) << ',' << c.count() << ','
            << csv::format_double(c.rep_x) << ',';
        if (two_d) out << csv::format_double(c.rep_y) << ',';
        out << csv::format_double(c.rep_t) << ',';
        for (std::size_t i = 0; i < c.members.size(); ++i) {
            if (i > 0) out << ';';
            out << ds.instances()[c.members[i]].id;
        }
        out << '\n';
    }
}

void write_index_csv(const MicroclusterIndex& index, const EventDataset& ds,
                     const std::string& path) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot open '" + path + "' for writing");
    write_index_csv(index, ds, out);
}

MicroclusterIndex read_index_csv(std::istream& in, const EventDataset& ds) {
    std::string line;
    if (!std::getline(in, line)) throw DataError("empty index file");
    csv::chomp(line);
    const bool two_d = line == "cid,event_type,count,rep_x,rep_y,rep_t,member_ids";
    if (!two_d && line != "cid,event_type,count,rep_x,rep_t,member_ids")
        throw DataError("unknown index header '" + line + "'");
    if (two_d != (ds.spatial_dim() == 2))
        throw DataError("index spatial dimensionality does not match the dataset");

    std::vector<Microcluster> clusters;
    std::vector<bool> used(ds.size(), false);
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        csv::chomp(line);
        if (line.empty()) continue;
        const auto fields = csv::split(line);
        const std::size_t expect = two_d ? 7u : 6u;
        if (fields.size() != expect)
            throw DataError("line " + std::to_string(line_no) + ": expected " +
                            std::to_string(expect) + " fields");

        Microcluster c;
        c.cid = static_cast<std::uint32_t>(csv::parse_size(fields[0], line_no, "cid"));
        const auto type = ds.type_id(fields[1]);
        if (!type)
            throw DataError("line " + std::to_string(line_no) + ": unknown event type '" +
                            std::string(fields[1]) + "'");
        c.type = *type;
        const std::size_t count = csv::parse_size(fields[2], line_no, "count");
        std::size_t f = 3;
        c.rep_x = csv::parse_double(fields[f++], line_no, "rep_x");
        if (two_d) c.rep_y = csv::parse_double(fields[f++], line_no, "rep_y");
        c.rep_t = csv::parse_double(fields[f++], line_no, "rep_t");

        for (std::string_view id : csv::split(fields[f], ';')) {
            const auto row = ds.row_of_id(id);
            if (!row)
                throw DataError("line " + std::to_string(line_no) + ": unknown member id '" +
                                std::string(id) + "'");
            if (ds.instances()[*row].type != c.type)
                throw DataError("line " + std::to_string(line_no) + ": member '" +
                                std::string(id) + "' has a different event type");
            if (used[*row])
                throw DataError("line " + std::to_string(line_no) + ": member '" +
                                std::string(id) + "' appears in two microclusters");
            used[*row] = true;
            c.members.push_back(*row);
        }
        if (c.members.size() != count)
            throw DataError("line " + std::to_string(line_no) +
                            ": count does not match the member list");
        clusters.push_back(std::move(c));
    }

    for (std::size_t r = 0; r < used.size(); ++r)
        if (!used[r])
            throw DataError("instance '" + ds.instances()[r].id +
                            "' is missing from the index");

    return MicroclusterIndex(std::move(clusters), ds.event_types().size(), BuildParams{});
}

MicroclusterIndex read_index_csv(const std::string& path, const EventDataset& ds) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open '" + path + "'");
    return read_index_csv(in, ds);
}

} // namespace stpm
