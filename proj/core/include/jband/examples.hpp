#pragma once

#include "jband/periodic_operator.hpp"

#include <cstdint>

namespace jband {

/// a_n = I_m, b_n = diag(4, 8, ..., 4m) for every n. Spectrum [2, 2 + 4m],
/// measure 4m, which equals 4 min_n Tr(a_n a_n^*)^{1/2}.
PeriodicJacobiOperator make_sharpness_example(std::size_t m, std::size_t p);

/// Scalar free operator a_n = 1, b_n = 0 written with period p. Spectrum [-2, 2].
PeriodicJacobiOperator make_discrete_schrodinger(std::size_t p);

/// Seeded random operator: a-entries uniform in the disk of radius `scale`,
/// b = (G + G^*)/2 with G drawn the same way. Bit-reproducible across platforms.
PeriodicJacobiOperator random_operator(std::uint64_t seed, std::size_t p, std::size_t m,
                                       double scale);

} // namespace jband
