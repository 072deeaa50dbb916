// Scalar reference kernels. The SIMD variants must match these bit for bit;
// keep the operation order in sync with kernels_avx2.cpp (no FMA, left-to-right
// sums). The whole project builds with -ffp-contract=off for the same reason.

#include "kernels_internal.hpp"

namespace stpm::kernels::detail {
namespace {

inline double dist2_one(double qx, double qy, double qt, double x, double y, double t) {
    const double dx = qx - x;
    const double dy = qy - y;
    const double dt = qt - t;
    return (dx * dx + dy * dy) + dt * dt;
}

void dist2_batch_scalar(double qx, double qy, double qt,
                        const double* xs, const double* ys, const double* ts,
                        std::size_t n, double* out) {
    for (std::size_t i = 0; i < n; ++i)
        out[i] = dist2_one(qx, qy, qt, xs[i], ys[i], ts[i]);
}

ArgminResult argmin_dist2_scalar(double qx, double qy, double qt,
                                 const double* xs, const double* ys, const double* ts,
                                 std::size_t n) {
    ArgminResult best{0, dist2_one(qx, qy, qt, xs[0], ys[0], ts[0])};
    for (std::size_t i = 1; i < n; ++i) {
        const double d2 = dist2_one(qx, qy, qt, xs[i], ys[i], ts[i]);
        if (d2 < best.dist2) {
            best.dist2 = d2;
            best.index = i;
        }
    }
    return best;
}

std::size_t range_filter_scalar(double ax, double ay, double at,
                                const double* xs, const double* ys, const double* ts,
                                std::size_t n, double r2, double tmax,
                                std::uint32_t* out) {
    std::size_t m = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = ax - xs[i];
        const double dy = ay - ys[i];
        const double s2 = dx * dx + dy * dy;
        const double dt = ts[i] - at;
        if (s2 <= r2 && dt > 0.0 && dt <= tmax)
            out[m++] = static_cast<std::uint32_t>(i);
    }
    return m;
}

} // namespace

const KernelTable& scalar_table() {
    static const KernelTable table{dist2_batch_scalar, argmin_dist2_scalar,
                                   range_filter_scalar};
    return table;
}

} // namespace stpm::kernels::detail
