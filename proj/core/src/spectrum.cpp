#include "jband/spectrum.hpp"

#include "jband/errors.hpp"
#include "jband/hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <numbers>
#include <sstream>
#include <thread>

namespace jband {

namespace {

std::string fmt(double v) {
    std::ostringstream out;
    out.precision(17);
    out << v;
    return out.str();
}

using FiberFn = ComplexMatrix (*)(const PeriodicJacobiOperator&, double);

// Fills columns [begin, end) of `curves`. Returns the first failure, if any.
std::exception_ptr solve_columns(const PeriodicJacobiOperator& op, FiberFn fiber,
                                 std::span<const double> grid, std::size_t begin, std::size_t end,
                                 std::vector<std::vector<double>>& curves) {
    for (std::size_t j = begin; j < end; ++j) {
        try {
            const auto values = hermitian_eigenvalues(fiber(op, grid[j]));
            for (std::size_t n = 0; n < values.size(); ++n) {
                curves[n][j] = values[n];
            }
        } catch (const Error& e) {
            return std::make_exception_ptr(SamplingError(j, e.what()));
        }
    }
    return nullptr;
}

double distance_to(const IntervalUnion& set, double x) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& iv : set.intervals) {
        if (x >= iv.lo && x <= iv.hi) {
            return 0.0;
        }
        best = std::min(best, x < iv.lo ? iv.lo - x : x - iv.hi);
    }
    return best;
}

// sup_{x in from} dist(x, to). dist(., to) is piecewise linear, so the supremum
// over an interval sits at its endpoints or at a gap midpoint of `to` inside it.
double directed_hausdorff(const IntervalUnion& from, const IntervalUnion& to) {
    double out = 0.0;
    for (const auto& iv : from.intervals) {
        out = std::max({out, distance_to(to, iv.lo), distance_to(to, iv.hi)});
        for (std::size_t g = 0; g + 1 < to.intervals.size(); ++g) {
            const double mid = 0.5 * (to.intervals[g].hi + to.intervals[g + 1].lo);
            if (mid > iv.lo && mid < iv.hi) {
                out = std::max(out, distance_to(to, mid));
            }
        }
    }
    return out;
}

} // namespace

double certification_pad(double lipschitz, std::size_t num_samples) {
    if (num_samples == 0) {
        throw PreconditionError("certification_pad: num_samples must be positive");
    }
    const double h = 2.0 * std::numbers::pi / static_cast<double>(num_samples);
    // |e^{ih/2} - 1| = 2 sin(h/4)
    return lipschitz * 2.0 * std::sin(0.25 * h);
}

double BandSamples::pad() const {
    return grid.empty() ? 0.0 : certification_pad(lipschitz, grid.size());
}

namespace {

BandSamples sample_fibers(const PeriodicJacobiOperator& fiber_op, FiberFn fiber,
                          std::size_t num_samples, unsigned threads, double lipschitz) {
    if (num_samples < kMinSamples) {
        throw PreconditionError("sampling needs at least " + std::to_string(kMinSamples) +
                                " grid points, got " + std::to_string(num_samples));
    }
    const std::size_t dim = fiber_op.fiber_dim();

    BandSamples out;
    out.grid.resize(num_samples);
    for (std::size_t j = 0; j < num_samples; ++j) {
        out.grid[j] = 2.0 * std::numbers::pi * static_cast<double>(j) /
                      static_cast<double>(num_samples);
    }
    out.curves.assign(dim, std::vector<double>(num_samples));
    out.lipschitz = lipschitz;

    unsigned workers = threads == 0 ? std::thread::hardware_concurrency() : threads;
    workers = std::clamp<unsigned>(workers, 1, static_cast<unsigned>(num_samples));

    std::vector<std::exception_ptr> failures(workers);
    if (workers == 1) {
        failures[0] = solve_columns(fiber_op, fiber, out.grid, 0, num_samples, out.curves);
    } else {
        // Contiguous chunks; chunk w only writes columns it owns.
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            const std::size_t begin = num_samples * w / workers;
            const std::size_t end = num_samples * (w + 1) / workers;
            pool.emplace_back([&, w, begin, end] {
                failures[w] = solve_columns(fiber_op, fiber, out.grid, begin, end, out.curves);
            });
        }
    }
    // Chunks are in grid order, so the first failure is the smallest j.
    for (const auto& failure : failures) {
        if (failure) {
            std::rethrow_exception(failure);
        }
    }
    return out;
}

} // namespace

BandSamples sample_bands(const PeriodicJacobiOperator& op, std::size_t num_samples,
                         unsigned threads) {
    const PeriodicJacobiOperator fiber_op = normalized(op);
    return sample_fibers(fiber_op, floquet_symbol, num_samples, threads,
                         spectral_norm(fiber_op.corner()));
}

BandSamples sample_dispersion(const PeriodicJacobiOperator& op, std::size_t num_samples,
                              unsigned threads) {
    require_valid(op);
    const PeriodicJacobiOperator rotated = rotate_to_minimal_corner(op);
    const double sigma = spectral_norm(rotated.corner());
    return sample_fibers(rotated, bloch_fiber, num_samples, threads,
                         rotated.period() == 1 ? 2.0 * sigma : sigma);
}

std::vector<SpectralBand> band_intervals(const BandSamples& samples) {
    const double pad = samples.pad();
    std::vector<SpectralBand> bands;
    bands.reserve(samples.band_count());
    for (std::size_t n = 0; n < samples.band_count(); ++n) {
        const auto [lo, hi] = std::minmax_element(samples.curves[n].begin(), samples.curves[n].end());
        bands.push_back({n, *lo, *hi, *lo - pad, *hi + pad});
    }
    std::stable_sort(bands.begin(), bands.end(),
                     [](const SpectralBand& l, const SpectralBand& r) { return l.lo < r.lo; });
    return bands;
}

std::vector<SpectralBand> tighten_with_enclosures(std::span<const SpectralBand> bands,
                                                  const EnclosureBounds& enclosures) {
    std::vector<SpectralBand> out(bands.begin(), bands.end());
    for (auto& band : out) {
        if (band.index >= enclosures.minus.size() || band.index >= enclosures.plus.size()) {
            throw DimensionError("tighten_with_enclosures: band " + std::to_string(band.index) +
                                 " has no enclosure window");
        }
        band.certified_lo = std::min(band.lo, std::max(band.certified_lo, enclosures.minus[band.index]));
        band.certified_hi = std::max(band.hi, std::min(band.certified_hi, enclosures.plus[band.index]));
    }
    return out;
}

IntervalUnion merge_intervals(std::vector<Interval> intervals, double gap_tol) {
    if (!(gap_tol >= 0.0)) {
        throw PreconditionError("merge_intervals: gap_tol must be >= 0");
    }
    std::sort(intervals.begin(), intervals.end(), [](const Interval& l, const Interval& r) {
        return l.lo < r.lo || (l.lo == r.lo && l.hi < r.hi);
    });
    IntervalUnion out;
    for (const auto& iv : intervals) {
        if (!out.intervals.empty() && iv.lo - out.intervals.back().hi <= gap_tol) {
            out.intervals.back().hi = std::max(out.intervals.back().hi, iv.hi);
        } else {
            out.intervals.push_back(iv);
        }
    }
    for (const auto& iv : out.intervals) {
        out.measure += iv.hi - iv.lo;
    }
    return out;
}

IntervalUnion interval_union_measure(std::span<const SpectralBand> bands, double gap_tol,
                                     bool use_certified) {
    std::vector<Interval> intervals;
    intervals.reserve(bands.size());
    for (const auto& band : bands) {
        intervals.push_back(use_certified ? Interval{band.certified_lo, band.certified_hi}
                                          : Interval{band.lo, band.hi});
    }
    return merge_intervals(std::move(intervals), gap_tol);
}

double hausdorff_distance(const IntervalUnion& lhs, const IntervalUnion& rhs) {
    if (lhs.intervals.empty() || rhs.intervals.empty()) {
        throw PreconditionError("hausdorff_distance: empty interval union");
    }
    return std::max(directed_hausdorff(lhs, rhs), directed_hausdorff(rhs, lhs));
}

EnclosureBounds enclosure_bounds(const PeriodicJacobiOperator& op) {
    const SymbolSplit split = split_symbol(normalized(op));
    return {hermitian_eigenvalues(split.k0 - split.abs_k1),
            hermitian_eigenvalues(split.k0 + split.abs_k1)};
}

double theorem_bound(const PeriodicJacobiOperator& op) {
    require_valid(op);
    double smallest = std::numeric_limits<double>::infinity();
    for (const auto& blk : op.a) {
        smallest = std::min(smallest, nuclear_norm(blk));
    }
    return 4.0 * smallest;
}

std::optional<double> scalar_geometric_bound(const PeriodicJacobiOperator& op) {
    require_valid(op);
    if (op.block_size != 1) {
        return std::nullopt;
    }
    double product = 1.0;
    for (const auto& blk : op.a) {
        const double modulus = std::abs(blk(0, 0));
        if (modulus == 0.0) {
            return 0.0;
        }
        product *= modulus;
    }
    const double p = static_cast<double>(op.period());
    if (std::isnormal(product)) {
        return 4.0 * std::pow(product, 1.0 / p);
    }
    // Over/underflowed product: geometric mean through logarithms.
    double log_sum = 0.0;
    for (const auto& blk : op.a) {
        log_sum += std::log(std::abs(blk(0, 0)));
    }
    return 4.0 * std::exp(log_sum / p);
}

EnclosureWidth enclosure_width_sum(const PeriodicJacobiOperator& op) {
    const PeriodicJacobiOperator fiber_op = normalized(op);
    const EnclosureBounds enc = enclosure_bounds(fiber_op);
    EnclosureWidth out;
    for (std::size_t n = 0; n < enc.plus.size(); ++n) {
        out.sum += enc.plus[n] - enc.minus[n];
    }
    out.identity_value = 4.0 * nuclear_norm(fiber_op.corner());
    return out;
}

bool BoundsReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

BoundsReport verify_operator(const PeriodicJacobiOperator& op, const VerifyConfig& cfg) {
    require_valid(op);
    BoundsReport report;
    report.normalized_operator = normalized(op);
    const auto& fiber_op = report.normalized_operator;

    report.samples = sample_bands(fiber_op, cfg.num_samples, cfg.threads);
    report.pad = report.samples.pad();
    report.enclosures = enclosure_bounds(fiber_op);
    report.bands = tighten_with_enclosures(band_intervals(report.samples), report.enclosures);
    report.gap_tol = cfg.gap_tol.value_or(2.0 * report.pad);
    report.measured_spectrum = interval_union_measure(report.bands, report.gap_tol, cfg.use_certified);

    report.theorem_bound = theorem_bound(op);
    report.scalar_bound = scalar_geometric_bound(op);
    const EnclosureWidth width = enclosure_width_sum(fiber_op);
    report.enclosure_width_sum = width.sum;
    report.trace_identity_value = width.identity_value;

    // Sampled eigenvalues inside their enclosure windows.
    {
        double worst = 0.0;
        std::size_t worst_n = 0;
        const auto& enc = report.enclosures;
        for (std::size_t n = 0; n < report.samples.band_count(); ++n) {
            for (double v : report.samples.curves[n]) {
                const double excess = std::max(enc.minus[n] - v, v - enc.plus[n]);
                if (excess > worst) {
                    worst = excess;
                    worst_n = n;
                }
            }
        }
        report.per_band_containment = worst <= cfg.containment_tol;
        report.checks.push_back({"enclosure containment", report.per_band_containment,
                                 worst > 0.0 ? "worst excursion " + fmt(worst) + " in band " +
                                                   std::to_string(worst_n + 1)
                                             : "all samples inside"});
    }

    // Neighbouring fibers differ by at most lipschitz * |e^{ix_j} - e^{ix_{j+1}}|.
    {
        const auto& s = report.samples;
        const std::size_t count = s.sample_count();
        double worst = -std::numeric_limits<double>::infinity();
        for (std::size_t n = 0; n < s.band_count(); ++n) {
            for (std::size_t j = 0; j < count; ++j) {
                const std::size_t k = (j + 1) % count;
                const double next_x = k == 0 ? 2.0 * std::numbers::pi : s.grid[k];
                const double allowed =
                    s.lipschitz * std::abs(std::polar(1.0, s.grid[j]) - std::polar(1.0, next_x));
                worst = std::max(worst, std::abs(s.curves[n][j] - s.curves[n][k]) - allowed);
            }
        }
        report.checks.push_back({"neighbour Lipschitz bound", worst <= 1e-8,
                                 "max excess " + fmt(std::max(worst, 0.0))});
    }

    {
        const double gap = std::abs(width.sum - width.identity_value);
        report.checks.push_back({"trace identity", gap <= 1e-9 * (1.0 + width.identity_value),
                                 "sum " + fmt(width.sum) + " vs 4*||a_corner||_* " +
                                     fmt(width.identity_value)});
    }

    if (report.scalar_bound) {
        report.checks.push_back({"min <= geometric mean",
                                 report.theorem_bound <= *report.scalar_bound + 1e-12,
                                 fmt(report.theorem_bound) + " vs " + fmt(*report.scalar_bound)});
    }

    report.bound_satisfied =
        report.measured_spectrum.measure <= report.theorem_bound + cfg.bound_slack;
    report.checks.push_back({"measure <= theorem bound", report.bound_satisfied,
                             fmt(report.measured_spectrum.measure) + " vs " +
                                 fmt(report.theorem_bound)});
    return report;
}

} // namespace jband
