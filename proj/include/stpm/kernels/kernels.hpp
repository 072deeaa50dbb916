#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

namespace stpm::kernels {

// Inner loops over coordinate arrays (structure-of-arrays layout). A scalar
// reference implementation always exists; an AVX2 variant is selected at
// runtime when the CPU supports it. Both variants are required to produce
// bit-identical outputs: the squared distance is always evaluated as
// (dx*dx + dy*dy) + dt*dt, no FMA contraction, and index ties resolve to the
// lowest index. The equivalence is enforced by tests.

enum class Backend { scalar, avx2 };

/// Backend currently in use.
Backend active_backend();

/// True if the backend can run on this machine/build.
bool backend_supported(Backend b);

/// Force a backend (throws std::invalid_argument if unsupported). The
/// STPM_KERNELS environment variable ("scalar" or "avx2") overrides the
/// default selection at startup.
void set_backend(Backend b);

const char* backend_name(Backend b);

struct ArgminResult {
    std::size_t index = 0;
    double dist2 = 0.0;
};

/// out[i] = squared Euclidean distance from (qx,qy,qt) to point i.
void dist2_batch(double qx, double qy, double qt,
                 const double* xs, const double* ys, const double* ts,
                 std::size_t n, double* out);

/// Index and squared distance of the point nearest to (qx,qy,qt).
/// Ties resolve to the lowest index. Requires n >= 1.
ArgminResult argmin_dist2(double qx, double qy, double qt,
                          const double* xs, const double* ys, const double* ts,
                          std::size_t n);

/// Writes (ascending) the indices i satisfying the neighborhood predicate
/// anchored at (ax,ay,at): squared spatial distance <= r2 and
/// 0 < ts[i] - at <= tmax. Returns the number of indices written; `out` must
/// have room for n entries.
std::size_t range_filter(double ax, double ay, double at,
                         const double* xs, const double* ys, const double* ts,
                         std::size_t n, double r2, double tmax,
                         std::uint32_t* out);

} // namespace stpm::kernels
