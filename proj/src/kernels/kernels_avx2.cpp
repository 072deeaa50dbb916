// AVX2 kernel variants. Compiled with -mavx2 (no -mfma: the scalar reference
// uses separate multiply and add, and the vector lanes must round identically).
// Lane layout mirrors the scalar loops exactly, so every per-element value is
// bit-identical to the reference; only the iteration is widened.

#include "kernels_internal.hpp"

#if defined(STPM_HAVE_AVX2) && defined(__AVX2__)

#include <immintrin.h>

namespace stpm::kernels::detail {
namespace {

inline double dist2_one(double qx, double qy, double qt, double x, double y, double t) {
    const double dx = qx - x;
    const double dy = qy - y;
    const double dt = qt - t;
    return (dx * dx + dy * dy) + dt * dt;
}

inline __m256d dist2_vec(__m256d qx, __m256d qy, __m256d qt,
                         const double* xs, const double* ys, const double* ts,
                         std::size_t i) {
    const __m256d dx = _mm256_sub_pd(qx, _mm256_loadu_pd(xs + i));
    const __m256d dy = _mm256_sub_pd(qy, _mm256_loadu_pd(ys + i));
    const __m256d dt = _mm256_sub_pd(qt, _mm256_loadu_pd(ts + i));
    const __m256d s = _mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy));
    return _mm256_add_pd(s, _mm256_mul_pd(dt, dt));
}

void dist2_batch_avx2(double qx, double qy, double qt,
                      const double* xs, const double* ys, const double* ts,
                      std::size_t n, double* out) {
    const __m256d vqx = _mm256_set1_pd(qx);
    const __m256d vqy = _mm256_set1_pd(qy);
    const __m256d vqt = _mm256_set1_pd(qt);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(out + i, dist2_vec(vqx, vqy, vqt, xs, ys, ts, i));
    for (; i < n; ++i)
        out[i] = dist2_one(qx, qy, qt, xs[i], ys[i], ts[i]);
}

ArgminResult argmin_dist2_avx2(double qx, double qy, double qt,
                               const double* xs, const double* ys, const double* ts,
                               std::size_t n) {
    ArgminResult best{0, dist2_one(qx, qy, qt, xs[0], ys[0], ts[0])};
    std::size_t i = 1;

    if (n >= 1 + 8) {
        const __m256d vqx = _mm256_set1_pd(qx);
        const __m256d vqy = _mm256_set1_pd(qy);
        const __m256d vqt = _mm256_set1_pd(qt);
        // Lane-local minima with strict-less updates keep the lowest index per
        // stripe; the final reduction then picks the global lowest index among
        // equal values.
        __m256d bval = dist2_vec(vqx, vqy, vqt, xs, ys, ts, i);
        __m256i bidx = _mm256_set_epi64x(static_cast<long long>(i + 3),
                                         static_cast<long long>(i + 2),
                                         static_cast<long long>(i + 1),
                                         static_cast<long long>(i));
        __m256i idx = _mm256_add_epi64(bidx, _mm256_set1_epi64x(4));
        i += 4;
        for (; i + 4 <= n; i += 4) {
            const __m256d d2 = dist2_vec(vqx, vqy, vqt, xs, ys, ts, i);
            const __m256d lt = _mm256_cmp_pd(d2, bval, _CMP_LT_OQ);
            bval = _mm256_blendv_pd(bval, d2, lt);
            bidx = _mm256_castpd_si256(_mm256_blendv_pd(
                _mm256_castsi256_pd(bidx), _mm256_castsi256_pd(idx), lt));
            idx = _mm256_add_epi64(idx, _mm256_set1_epi64x(4));
        }
        alignas(32) double vals[4];
        alignas(32) long long idxs[4];
        _mm256_store_pd(vals, bval);
        _mm256_store_si256(reinterpret_cast<__m256i*>(idxs), bidx);
        for (int lane = 0; lane < 4; ++lane) {
            const auto li = static_cast<std::size_t>(idxs[lane]);
            if (vals[lane] < best.dist2 ||
                (vals[lane] == best.dist2 && li < best.index)) {
                best.dist2 = vals[lane];
                best.index = li;
            }
        }
    }
    for (; i < n; ++i) {
        const double d2 = dist2_one(qx, qy, qt, xs[i], ys[i], ts[i]);
        if (d2 < best.dist2) {
            best.dist2 = d2;
            best.index = i;
        }
    }
    return best;
}

std::size_t range_filter_avx2(double ax, double ay, double at,
                              const double* xs, const double* ys, const double* ts,
                              std::size_t n, double r2, double tmax,
                              std::uint32_t* out) {
    const __m256d vax = _mm256_set1_pd(ax);
    const __m256d vay = _mm256_set1_pd(ay);
    const __m256d vat = _mm256_set1_pd(at);
    const __m256d vr2 = _mm256_set1_pd(r2);
    const __m256d vtmax = _mm256_set1_pd(tmax);
    const __m256d vzero = _mm256_setzero_pd();

    std::size_t m = 0;
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d dx = _mm256_sub_pd(vax, _mm256_loadu_pd(xs + i));
        const __m256d dy = _mm256_sub_pd(vay, _mm256_loadu_pd(ys + i));
        const __m256d s2 = _mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy));
        const __m256d dt = _mm256_sub_pd(_mm256_loadu_pd(ts + i), vat);
        __m256d ok = _mm256_cmp_pd(s2, vr2, _CMP_LE_OQ);
        ok = _mm256_and_pd(ok, _mm256_cmp_pd(dt, vzero, _CMP_GT_OQ));
        ok = _mm256_and_pd(ok, _mm256_cmp_pd(dt, vtmax, _CMP_LE_OQ));
        int mask = _mm256_movemask_pd(ok);
        while (mask) {
            const int lane = __builtin_ctz(static_cast<unsigned>(mask));
            out[m++] = static_cast<std::uint32_t>(i + static_cast<std::size_t>(lane));
            mask &= mask - 1;
        }
    }
    for (; i < n; ++i) {
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

const KernelTable* avx2_table() {
    if (!__builtin_cpu_supports("avx2")) return nullptr;
    static const KernelTable table{dist2_batch_avx2, argmin_dist2_avx2,
                                   range_filter_avx2};
    return &table;
}

} // namespace stpm::kernels::detail

#else

namespace stpm::kernels::detail {

const KernelTable* avx2_table() { return nullptr; }

} // namespace stpm::kernels::detail

#endif
