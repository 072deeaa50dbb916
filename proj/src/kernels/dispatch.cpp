#include "stpm/kernels/kernels.hpp"

#include <cstdlib>
#include <cstring>
#include <stdexcept>

#include "kernels_internal.hpp"

namespace stpm::kernels {
namespace {

struct Dispatch {
    const detail::KernelTable* table;
    Backend backend;

    Dispatch() {
        const detail::KernelTable* avx2 = detail::avx2_table();
        backend = avx2 ? Backend::avx2 : Backend::scalar;
        if (const char* env = std::getenv("STPM_KERNELS")) {
            if (std::strcmp(env, "scalar") == 0) backend = Backend::scalar;
            else if (std::strcmp(env, "avx2") == 0 && avx2) backend = Backend::avx2;
        }
        table = backend == Backend::avx2 ? avx2 : &detail::scalar_table();
    }
};

Dispatch& dispatch() {
    static Dispatch d;
    return d;
}

} // namespace

Backend active_backend() { return dispatch().backend; }

bool backend_supported(Backend b) {
    return b == Backend::scalar || detail::avx2_table() != nullptr;
}

void set_backend(Backend b) {
    if (!backend_supported(b))
        throw std::invalid_argument(std::string("kernel backend unavailable: ") +
                                    backend_name(b));
    Dispatch& d = dispatch();
    d.backend = b;
    d.table = b == Backend::avx2 ? detail::avx2_table() : &detail::scalar_table();
}

const char* backend_name(Backend b) {
    return b == Backend::avx2 ? "avx2" : "scalar";
}

void dist2_batch(double qx, double qy, double qt,
                 const double* xs, const double* ys, const double* ts,
                 std::size_t n, double* out) {
    dispatch().table->dist2_batch(qx, qy, qt, xs, ys, ts, n, out);
}

ArgminResult argmin_dist2(double qx, double qy, double qt,
                          const double* xs, const double* ys, const double* ts,
                          std::size_t n) {
    return dispatch().table->argmin_dist2(qx, qy, qt, xs, ys, ts, n);
}

std::size_t range_filter(double ax, double ay, double at,
                         const double* xs, const double* ys, const double* ts,
                         std::size_t n, double r2, double tmax,
                         std::uint32_t* out) {
    return dispatch().table->range_filter(ax, ay, at, xs, ys, ts, n, r2, tmax, out);
}

} // namespace stpm::kernels
