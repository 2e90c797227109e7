#pragma once

#include "jband/periodic_operator.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace jband {

inline constexpr std::size_t kDefaultSamples = 1024;
inline constexpr std::size_t kMinSamples = 8;

/// Eigenvalue curves lambda_n(x_j) of the Floquet fibers on a uniform grid of [0, 2pi).
struct BandSamples {
    std::vector<double> grid;                 // x_j = 2 pi j / num_samples
    std::vector<std::vector<double>> curves;  // curves[n][j], ascending in n for each j
    double lipschitz = 0.0;                   // sigma_max of the corner block

    std::size_t band_count() const noexcept { return curves.size(); }
    std::size_t sample_count() const noexcept { return grid.size(); }
    /// Worst-case drift of any eigenvalue to a point halfway between grid nodes.
    double pad() const;
};

struct SpectralBand {
    std::size_t index = 0;
    double lo = 0.0;
    double hi = 0.0;
    double certified_lo = 0.0;
    double certified_hi = 0.0;

    double width() const noexcept { return hi - lo; }
};

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};

struct IntervalUnion {
    std::vector<Interval> intervals;  // sorted, pairwise disjoint
    double measure = 0.0;
};

/// Eigenvalues of K0 - |K1| and K0 + |K1|, both ascending.
struct EnclosureBounds {
    std::vector<double> minus;
    std::vector<double> plus;
};

struct EnclosureWidth {
    double sum = 0.0;             // sum_n (plus[n] - minus[n])
    double identity_value = 0.0;  // 2 Tr|K1| = 4 * nuclear_norm(corner)
};

/// pad = lipschitz * |e^{i h/2} - 1| for grid spacing h = 2 pi / num_samples.
double certification_pad(double lipschitz, std::size_t num_samples);

/// Samples every fiber eigenvalue on the grid. The operator is normalized first
/// (minimal corner, period >= 3). Grid points are solved on up to `threads`
/// workers (0 = hardware concurrency); the result does not depend on the count.
BandSamples sample_bands(const PeriodicJacobiOperator& op, std::size_t num_samples,
                         unsigned threads = 0);

/// Dispersion curves of the operator in its own period: column j holds the
/// eigenvalues of bloch_fiber(rotate_to_minimal_corner(op), theta_j), so there
/// are p*m curves even when p < 3. The Lipschitz constant doubles for p = 1,
/// where the corner block enters the fiber twice.
BandSamples sample_dispersion(const PeriodicJacobiOperator& op, std::size_t num_samples,
                              unsigned threads = 0);

/// Interval hull of every sampled curve, outer-padded by BandSamples::pad().
std::vector<SpectralBand> band_intervals(const BandSamples& samples);

/// Intersects each certified interval with its enclosure window [minus[n], plus[n]].
/// Both are rigorous outer bounds of band n, so the intersection is too. The
/// sampled hull is never cut.
std::vector<SpectralBand> tighten_with_enclosures(std::span<const SpectralBand> bands,
                                                  const EnclosureBounds& enclosures);

/// Sorts, merges intervals that overlap or are separated by at most gap_tol.
IntervalUnion merge_intervals(std::vector<Interval> intervals, double gap_tol);

IntervalUnion interval_union_measure(std::span<const SpectralBand> bands, double gap_tol,
                                     bool use_certified);

/// Hausdorff distance between two non-empty interval unions.
double hausdorff_distance(const IntervalUnion& lhs, const IntervalUnion& rhs);

EnclosureBounds enclosure_bounds(const PeriodicJacobiOperator& op);

/// 4 * min_n nuclear_norm(a[n]) over the coefficients as given.
double theorem_bound(const PeriodicJacobiOperator& op);

/// 4 |a_1 ... a_p|^{1/p}; empty unless the blocks are scalar (m = 1).
std::optional<double> scalar_geometric_bound(const PeriodicJacobiOperator& op);

EnclosureWidth enclosure_width_sum(const PeriodicJacobiOperator& op);

struct VerifyConfig {
    std::size_t num_samples = kDefaultSamples;
    /// Merge tolerance for spectral gaps; unset means 2 * pad.
    std::optional<double> gap_tol;
    bool use_certified = true;
    /// Slack added to the theorem bound in the measure check.
    double bound_slack = 1e-9;
    /// Allowed excursion of a sampled eigenvalue outside its enclosure window.
    double containment_tol = 1e-9;
    unsigned threads = 0;
};

struct Check {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct BoundsReport {
    double theorem_bound = 0.0;
    std::optional<double> scalar_bound;
    double enclosure_width_sum = 0.0;
    double trace_identity_value = 0.0;
    IntervalUnion measured_spectrum;
    bool per_band_containment = false;
    bool bound_satisfied = false;

    // Pipeline intermediates kept for reporting.
    PeriodicJacobiOperator normalized_operator;
    BandSamples samples;
    std::vector<SpectralBand> bands;
    EnclosureBounds enclosures;
    double pad = 0.0;
    double gap_tol = 0.0;
    std::vector<Check> checks;

    bool all_passed() const;
};

/// Full pipeline: normalize, sample, band hulls, enclosure windows, union,
/// bounds. Every check that fails is named in `checks`.
BoundsReport verify_operator(const PeriodicJacobiOperator& op, const VerifyConfig& cfg = {});

} // namespace jband
