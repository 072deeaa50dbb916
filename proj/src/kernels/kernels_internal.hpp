#pragma once

#include "stpm/kernels/kernels.hpp"

namespace stpm::kernels::detail {

struct KernelTable {
    void (*dist2_batch)(double, double, double, const double*, const double*,
                        const double*, std::size_t, double*);
    ArgminResult (*argmin_dist2)(double, double, double, const double*,
                                 const double*, const double*, std::size_t);
    std::size_t (*range_filter)(double, double, double, const double*,
                                const double*, const double*, std::size_t,
                                double, double, std::uint32_t*);
};

const KernelTable& scalar_table();

// Null when the build or the CPU lacks AVX2.
const KernelTable* avx2_table();

} // namespace stpm::kernels::detail
