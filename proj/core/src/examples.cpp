#include "jband/examples.hpp"

#include "jband/errors.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

namespace jband {

namespace {

void require_positive(std::size_t m, std::size_t p, const char* what) {
    if (m == 0 || p == 0) {
        throw PreconditionError(std::string(what) + ": m and p must be positive");
    }
}

// std::uniform_real_distribution is implementation-defined; take 53 raw bits instead.
double unit_uniform(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Complex disk_point(std::mt19937_64& rng, double radius) {
    const double r = radius * std::sqrt(unit_uniform(rng));
    const double angle = 2.0 * std::numbers::pi * unit_uniform(rng);
    return {r * std::cos(angle), r * std::sin(angle)};
}

} // namespace

PeriodicJacobiOperator make_sharpness_example(std::size_t m, std::size_t p) {
    require_positive(m, p, "make_sharpness_example");
    std::vector<double> diag(m);
    for (std::size_t k = 0; k < m; ++k) {
        diag[k] = 4.0 * static_cast<double>(k + 1);
    }
    return {m, std::vector<ComplexMatrix>(p, ComplexMatrix::identity(m)),
            std::vector<ComplexMatrix>(p, ComplexMatrix::diagonal(diag))};
}

PeriodicJacobiOperator make_discrete_schrodinger(std::size_t p) {
    require_positive(1, p, "make_discrete_schrodinger");
    return {1, std::vector<ComplexMatrix>(p, ComplexMatrix{{1.0}}),
            std::vector<ComplexMatrix>(p, ComplexMatrix{{0.0}})};
}

PeriodicJacobiOperator random_operator(std::uint64_t seed, std::size_t p, std::size_t m,
                                       double scale) {
    require_positive(m, p, "random_operator");
    if (!(scale > 0.0) || !std::isfinite(scale)) {
        throw PreconditionError("random_operator: scale must be positive and finite");
    }
    std::mt19937_64 rng(seed);
    std::vector<ComplexMatrix> a;
    std::vector<ComplexMatrix> b;
    a.reserve(p);
    b.reserve(p);
    for (std::size_t n = 0; n < p; ++n) {
        ComplexMatrix coupling(m, m);
        for (auto& z : coupling.entries()) {
            z = disk_point(rng, scale);
        }
        ComplexMatrix g(m, m);
        for (auto& z : g.entries()) {
            z = disk_point(rng, scale);
        }
        ComplexMatrix potential(m, m);
        for (std::size_t r = 0; r < m; ++r) {
            for (std::size_t c = 0; c < m; ++c) {
                potential(r, c) = 0.5 * (g(r, c) + std::conj(g(c, r)));
            }
        }
        a.push_back(std::move(coupling));
        b.push_back(std::move(potential));
    }
    return {m, std::move(a), std::move(b)};
}

} // namespace jband
