#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "stpm/errors.hpp"
#include "stpm/kernels/kernels.hpp"
#include "stpm/microcluster/index.hpp"

namespace stpm {
namespace {

// Mutable per-cluster state during a build. Coordinates are kept pre-scaled
// (divided by the normalization diameters) so every distance below is a plain
// Euclidean one and matches st_distance under the same normalization.
struct Slot {
    std::uint32_t cid = 0;
    std::vector<Row> members;
    std::vector<double> sx, sy, st; // scaled member coordinates
    double sum_x = 0, sum_y = 0, sum_t = 0; // raw coordinate sums
};

struct TypeEngine {
    std::vector<Slot> slots; // ascending cid
    std::vector<double> rx, ry, rt; // scaled representatives, aligned with slots
};

void refresh_representative(const Slot& s, const NormalizationParams& norm,
                            TypeEngine& eng, std::size_t pos) {
    const double m = static_cast<double>(s.members.size());
    eng.rx[pos] = (s.sum_x / m) / norm.spatial;
    eng.ry[pos] = (s.sum_y / m) / norm.spatial;
    eng.rt[pos] = (s.sum_t / m) / norm.temporal;
}

// Squared diameter via the canonical i<j pairwise sum. The accumulation order
// matches cluster_diameter exactly, so engine decisions and the public value
// agree bit for bit.
double diameter2(const Slot& s, std::vector<double>& scratch) {
    const std::size_t m = s.members.size();
    if (m < 2) return 0.0;
    double acc = 0.0;
    scratch.resize(m);
    for (std::size_t i = 0; i + 1 < m; ++i) {
        const std::size_t rest = m - i - 1;
        kernels::dist2_batch(s.sx[i], s.sy[i], s.st[i], s.sx.data() + i + 1,
                             s.sy.data() + i + 1, s.st.data() + i + 1, rest,
                             scratch.data());
        for (std::size_t j = 0; j < rest; ++j) acc += scratch[j];
    }
    const double denom = static_cast<double>(m) * static_cast<double>(m - 1);
    return (2.0 * acc) / denom;
}

// Local member indices of the two split halves; element 0 of each is the seed.
struct SplitParts {
    std::vector<std::uint32_t> a, b;
};

SplitParts farthest_pair_split(const EventDataset& ds, const std::vector<Row>& members,
                               const std::vector<double>& sx, const std::vector<double>& sy,
                               const std::vector<double>& st,
                               std::vector<double>& scratch) {
    const std::size_t m = members.size();
    scratch.resize(m);

    // Farthest pair; equal distances resolve to the lexicographically smallest
    // ordered id pair.
    std::size_t pi = 0, pj = 1;
    double best = -1.0;
    auto pair_key = [&](std::size_t i, std::size_t j) {
        const std::string& a = ds.instances()[members[i]].id;
        const std::string& b = ds.instances()[members[j]].id;
        return a <= b ? std::pair<const std::string*, const std::string*>{&a, &b}
                      : std::pair<const std::string*, const std::string*>{&b, &a};
    };
    for (std::size_t i = 0; i + 1 < m; ++i) {
        const std::size_t rest = m - i - 1;
        kernels::dist2_batch(sx[i], sy[i], st[i], sx.data() + i + 1, sy.data() + i + 1,
                             st.data() + i + 1, rest, scratch.data());
        for (std::size_t j = 0; j < rest; ++j) {
            const double d2 = scratch[j];
            const std::size_t cj = i + 1 + j;
            if (d2 > best) {
                best = d2;
                pi = i;
                pj = cj;
            } else if (d2 == best) {
                auto cand = pair_key(i, cj);
                auto cur = pair_key(pi, pj);
                if (*cand.first < *cur.first ||
                    (*cand.first == *cur.first && *cand.second < *cur.second)) {
                    pi = i;
                    pj = cj;
                }
            }
        }
    }

    // First seed is the smaller id of the pair; ties on assignment go to it.
    std::size_t sa = pi, sb = pj;
    if (ds.instances()[members[sb]].id < ds.instances()[members[sa]].id) std::swap(sa, sb);

    SplitParts parts;
    parts.a.push_back(static_cast<std::uint32_t>(sa));
    parts.b.push_back(static_cast<std::uint32_t>(sb));
    for (std::size_t i = 0; i < m; ++i) {
        if (i == sa || i == sb) continue;
        const double dxa = sx[i] - sx[sa], dya = sy[i] - sy[sa], dta = st[i] - st[sa];
        const double dxb = sx[i] - sx[sb], dyb = sy[i] - sy[sb], dtb = st[i] - st[sb];
        const double da = (dxa * dxa + dya * dya) + dta * dta;
        const double db = (dxb * dxb + dyb * dyb) + dtb * dtb;
        (da <= db ? parts.a : parts.b).push_back(static_cast<std::uint32_t>(i));
    }
    return parts;
}

Slot make_slot(std::uint32_t cid, const EventDataset& ds, const NormalizationParams& norm,
               const std::vector<Row>& parent_members, const std::vector<double>& psx,
               const std::vector<double>& psy, const std::vector<double>& pst,
               const std::vector<std::uint32_t>& local) {
    Slot s;
    s.cid = cid;
    s.members.reserve(local.size());
    s.sx.reserve(local.size());
    s.sy.reserve(local.size());
    s.st.reserve(local.size());
    for (std::uint32_t li : local) {
        const Row r = parent_members[li];
        const EventInstance& e = ds.instances()[r];
        s.members.push_back(r);
        s.sx.push_back(psx[li]);
        s.sy.push_back(psy[li]);
        s.st.push_back(pst[li]);
        s.sum_x += e.x;
        s.sum_y += e.y;
        s.sum_t += e.t;
    }
    return s;
}

std::size_t slot_of_cid(const TypeEngine& eng, std::uint32_t cid) {
    auto it = std::lower_bound(eng.slots.begin(), eng.slots.end(), cid,
                               [](const Slot& s, std::uint32_t v) { return s.cid < v; });
    return static_cast<std::size_t>(it - eng.slots.begin());
}

void enforce_bounds(const EventDataset& ds, const BuildParams& params, TypeEngine& eng,
                    std::uint32_t start_cid, std::uint32_t& next_cid,
                    std::vector<double>& scratch) {
    const double d2_limit = params.diameter * params.diameter;
    std::vector<std::uint32_t> work{start_cid};
    while (!work.empty()) {
        const std::uint32_t cid = work.back();
        work.pop_back();
        const std::size_t pos = slot_of_cid(eng, cid);
        Slot& s = eng.slots[pos];
        const bool over_cap = params.cap && s.members.size() > *params.cap;
        if (!over_cap && (s.members.size() < 2 || diameter2(s, scratch) <= d2_limit))
            continue;

        SplitParts parts = farthest_pair_split(ds, s.members, s.sx, s.sy, s.st, scratch);
        Slot left = make_slot(next_cid++, ds, params.norm, s.members, s.sx, s.sy, s.st, parts.a);
        Slot right = make_slot(next_cid++, ds, params.norm, s.members, s.sx, s.sy, s.st, parts.b);

        eng.slots.erase(eng.slots.begin() + static_cast<std::ptrdiff_t>(pos));
        eng.rx.erase(eng.rx.begin() + static_cast<std::ptrdiff_t>(pos));
        eng.ry.erase(eng.ry.begin() + static_cast<std::ptrdiff_t>(pos));
        eng.rt.erase(eng.rt.begin() + static_cast<std::ptrdiff_t>(pos));

        for (Slot* child : {&left, &right}) {
            eng.slots.push_back(std::move(*child));
            eng.rx.push_back(0);
            eng.ry.push_back(0);
            eng.rt.push_back(0);
            refresh_representative(eng.slots.back(), params.norm, eng, eng.slots.size() - 1);
            work.push_back(eng.slots.back().cid);
        }
    }
}

MicroclusterIndex build_with_params(const EventDataset& ds, const BuildParams& params) {
    if (!(params.diameter > 0.0))
        throw std::invalid_argument("diameter threshold must be positive");
    if (params.cap && *params.cap < 1)
        throw std::invalid_argument("instance cap must be at least 1");
    if (!(params.norm.spatial > 0.0) || !(params.norm.temporal > 0.0))
        throw std::invalid_argument("normalization diameters must be positive");

    std::vector<Microcluster> result;
    std::uint32_t next_cid = 1;
    std::vector<double> scratch;

    for (TypeId type : ds.types_by_symbol()) {
        std::vector<Row> rows = ds.rows_of_type(type);
        std::sort(rows.begin(), rows.end(), [&](Row a, Row b) {
            const EventInstance& ea = ds.instances()[a];
            const EventInstance& eb = ds.instances()[b];
            if (ea.t != eb.t) return ea.t < eb.t;
            return ea.id < eb.id;
        });
        if (rows.empty()) continue;

        TypeEngine eng;
        for (Row r : rows) {
            const EventInstance& e = ds.instances()[r];
            const double sx = e.x / params.norm.spatial;
            const double sy = e.y / params.norm.spatial;
            const double st = e.t / params.norm.temporal;

            std::size_t pos;
            if (eng.slots.empty()) {
                eng.slots.emplace_back();
                eng.slots.back().cid = next_cid++;
                eng.rx.push_back(0);
                eng.ry.push_back(0);
                eng.rt.push_back(0);
                pos = 0;
            } else {
                // Slots are kept in ascending cid order, so the lowest-index
                // argmin tie is also the lowest-cid tie.
                pos = kernels::argmin_dist2(sx, sy, st, eng.rx.data(), eng.ry.data(),
                                            eng.rt.data(), eng.slots.size())
                          .index;
            }

            Slot& s = eng.slots[pos];
            s.members.push_back(r);
            s.sx.push_back(sx);
            s.sy.push_back(sy);
            s.st.push_back(st);
            s.sum_x += e.x;
            s.sum_y += e.y;
            s.sum_t += e.t;
            refresh_representative(s, params.norm, eng, pos);

            enforce_bounds(ds, params, eng, s.cid, next_cid, scratch);
        }

        for (const Slot& s : eng.slots) {
            Microcluster c;
            c.cid = s.cid;
            c.type = type;
            c.members = s.members;
            const double m = static_cast<double>(s.members.size());
            c.rep_x = s.sum_x / m;
            c.rep_y = s.sum_y / m;
            c.rep_t = s.sum_t / m;
            result.push_back(std::move(c));
        }
    }

    return MicroclusterIndex(std::move(result), ds.event_types().size(), params);
}

} // namespace

MicroclusterIndex build_index(const EventDataset& ds, double d,
                              const NormalizationParams& norm) {
    return build_with_params(ds, BuildParams{d, std::nullopt, norm});
}

MicroclusterIndex build_index_capped(const EventDataset& ds, double d, std::size_t cap,
                                     const NormalizationParams& norm) {
    return build_with_params(ds, BuildParams{d, cap, norm});
}

std::pair<Microcluster, Microcluster> split_cluster(const EventDataset& ds,
                                                    const Microcluster& cluster,
                                                    const NormalizationParams& norm) {
    if (cluster.count() < 2) throw std::invalid_argument("cannot split singleton");

    std::vector<double> sx, sy, st;
    for (Row r : cluster.members) {
        const EventInstance& e = ds.instances()[r];
        sx.push_back(e.x / norm.spatial);
        sy.push_back(e.y / norm.spatial);
        st.push_back(e.t / norm.temporal);
    }
    std::vector<double> scratch;
    SplitParts parts = farthest_pair_split(ds, cluster.members, sx, sy, st, scratch);

    auto build = [&](const std::vector<std::uint32_t>& local, std::uint32_t cid) {
        Microcluster c;
        c.cid = cid;
        c.type = cluster.type;
        double sum_x = 0, sum_y = 0, sum_t = 0;
        for (std::uint32_t li : local) {
            const Row r = cluster.members[li];
            const EventInstance& e = ds.instances()[r];
            c.members.push_back(r);
            sum_x += e.x;
            sum_y += e.y;
            sum_t += e.t;
        }
        const double m = static_cast<double>(local.size());
        c.rep_x = sum_x / m;
        c.rep_y = sum_y / m;
        c.rep_t = sum_t / m;
        return c;
    };
    return {build(parts.a, cluster.cid), build(parts.b, cluster.cid + 1)};
}

} // namespace stpm
