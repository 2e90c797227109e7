#include "jband/errors.hpp"
#include "jband/examples.hpp"
#include "jband/hermitian.hpp"
#include "jband/spectrum.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace jband;

namespace {

PeriodicJacobiOperator scalar_operator(std::vector<Complex> a, std::vector<double> b) {
    std::vector<ComplexMatrix> ab;
    std::vector<ComplexMatrix> bb;
    for (auto z : a) {
        ab.push_back(ComplexMatrix{{z}});
    }
    for (auto v : b) {
        bb.push_back(ComplexMatrix{{v}});
    }
    return {1, std::move(ab), std::move(bb)};
}

SpectralBand band(double lo, double hi) { return {0, lo, hi, lo, hi}; }

// Brute-force Hausdorff distance on a fine grid covering both sets.
double hausdorff_oracle(const IntervalUnion& a, const IntervalUnion& b) {
    auto dist = [](const IntervalUnion& s, double x) {
        double best = 1e300;
        for (const auto& iv : s.intervals) {
            best = std::min(best, x < iv.lo ? iv.lo - x : (x > iv.hi ? x - iv.hi : 0.0));
        }
        return best;
    };
    auto directed = [&](const IntervalUnion& from, const IntervalUnion& to) {
        double out = 0.0;
        for (const auto& iv : from.intervals) {
            const int steps = 20000;
            for (int i = 0; i <= steps; ++i) {
                out = std::max(out, dist(to, iv.lo + (iv.hi - iv.lo) * i / steps));
            }
        }
        return out;
    };
    return std::max(directed(a, b), directed(b, a));
}

// Certified union of an operator sampled as given, without the minimal-corner rotation.
IntervalUnion unrotated_union(const PeriodicJacobiOperator& op, std::size_t samples) {
    const std::size_t k = (3 + op.period() - 1) / op.period();
    const auto fiber_op = unroll(op, k);
    const double pad = certification_pad(spectral_norm(fiber_op.corner()), samples);
    std::vector<Interval> hull(fiber_op.fiber_dim(), Interval{1e300, -1e300});
    for (std::size_t j = 0; j < samples; ++j) {
        const double x = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(samples);
        const auto values = hermitian_eigenvalues(floquet_symbol(fiber_op, x));
        for (std::size_t n = 0; n < values.size(); ++n) {
            hull[n].lo = std::min(hull[n].lo, values[n]);
            hull[n].hi = std::max(hull[n].hi, values[n]);
        }
    }
    for (auto& iv : hull) {
        iv.lo -= pad;
        iv.hi += pad;
    }
    return merge_intervals(hull, 2.0 * pad);
}

} // namespace

TEST(SampleBands, SchrodingerDispersion) {
    const auto samples = sample_bands(make_discrete_schrodinger(1), 1024);
    ASSERT_EQ(samples.band_count(), 3u);
    ASSERT_EQ(samples.sample_count(), 1024u);
    EXPECT_DOUBLE_EQ(samples.lipschitz, 1.0);
    EXPECT_NEAR(*std::min_element(samples.curves[0].begin(), samples.curves[0].end()), -2.0, 1e-12);
    EXPECT_NEAR(*std::max_element(samples.curves[2].begin(), samples.curves[2].end()), 2.0, 1e-12);
    for (std::size_t j = 0; j < 1024; ++j) {
        EXPECT_DOUBLE_EQ(samples.grid[j], 2.0 * std::numbers::pi * j / 1024.0);
        EXPECT_LE(samples.curves[0][j], samples.curves[1][j]);
        EXPECT_LE(samples.curves[1][j], samples.curves[2][j]);
    }
}

TEST(SampleBands, ZeroCornerGivesConstantCurves) {
    auto op = random_operator(3, 3, 2, 1.0);
    op.a[1] = ComplexMatrix(2, 2);
    const auto samples = sample_bands(op, 64);
    EXPECT_EQ(samples.lipschitz, 0.0);
    for (const auto& curve : samples.curves) {
        for (double v : curve) {
            EXPECT_EQ(v, curve.front());
        }
    }
}

TEST(SampleBands, PeriodTwoClosedForm) {
    // K(x) = [[0, 1 + 2e^{-ix}], [1 + 2e^{ix}, 0]] so lambda = +-|1 + 2e^{ix}|.
    const auto op = scalar_operator({1.0, 2.0}, {0.0, 0.0});
    const auto samples = sample_bands(op, 512);
    double lo = 1e300;
    double hi = -1e300;
    for (const auto& curve : samples.curves) {
        for (double v : curve) {
            EXPECT_GE(std::abs(v), 1.0 - 1e-12);
            EXPECT_LE(std::abs(v), 3.0 + 1e-12);
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
    EXPECT_NEAR(lo, -3.0, 1e-12);
    EXPECT_NEAR(hi, 3.0, 1e-12);

    const auto report = verify_operator(op, {.num_samples = 512});
    ASSERT_EQ(report.measured_spectrum.intervals.size(), 2u);
    EXPECT_NEAR(report.measured_spectrum.intervals[0].lo, -3.0, 1e-9);
    EXPECT_NEAR(report.measured_spectrum.intervals[0].hi, -1.0, 1e-9);
    EXPECT_NEAR(report.measured_spectrum.intervals[1].lo, 1.0, 1e-9);
    EXPECT_NEAR(report.measured_spectrum.intervals[1].hi, 3.0, 1e-9);
    EXPECT_NEAR(report.measured_spectrum.measure, 4.0, 1e-9);
}

TEST(SampleBands, RejectsCoarseGrid) {
    EXPECT_THROW(sample_bands(make_discrete_schrodinger(1), 7), PreconditionError);
}

TEST(SampleBands, ThreadCountDoesNotChangeResult) {
    const auto op = random_operator(99, 4, 3, 2.0);
    const auto serial = sample_bands(op, 256, 1);
    const auto parallel = sample_bands(op, 256, 5);
    EXPECT_EQ(serial.curves, parallel.curves);
    EXPECT_EQ(serial.lipschitz, parallel.lipschitz);
}

TEST(SampleBands, NeighbourWeylBound) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto samples = sample_bands(random_operator(seed, 1 + seed % 6, 1 + seed % 3, 2.0), 128);
        const std::size_t count = samples.sample_count();
        for (const auto& curve : samples.curves) {
            for (std::size_t j = 0; j < count; ++j) {
                const std::size_t k = (j + 1) % count;
                const double step = std::abs(std::polar(1.0, samples.grid[j]) -
                                             std::polar(1.0, samples.grid[k]));
                EXPECT_LE(std::abs(curve[j] - curve[k]), samples.lipschitz * step + 1e-8);
            }
        }
    }
}

TEST(BandIntervals, FlatBand) {
    BandSamples samples{{0.0, 1.0}, {{2.5, 2.5}}, 3.0};
    const auto bands = band_intervals(samples);
    ASSERT_EQ(bands.size(), 1u);
    EXPECT_EQ(bands[0].lo, 2.5);
    EXPECT_EQ(bands[0].hi, 2.5);
    EXPECT_NEAR(bands[0].certified_lo, 2.5 - samples.pad(), 1e-15);
    EXPECT_GT(samples.pad(), 0.0);
}

TEST(BandIntervals, SchrodingerCertifiedContainsExactBand) {
    const auto samples = sample_bands(make_discrete_schrodinger(1), 4096);
    const auto bands = band_intervals(samples);
    const double pad = samples.pad();
    EXPECT_NEAR(pad, 2.0 * std::sin(2.0 * std::numbers::pi / 4096 / 4.0), 1e-18);
    const auto u = interval_union_measure(bands, 2.0 * pad, true);
    ASSERT_EQ(u.intervals.size(), 1u);
    EXPECT_LE(u.intervals[0].lo, -2.0);
    EXPECT_GE(u.intervals[0].hi, 2.0);
    EXPECT_LE(-2.0 - u.intervals[0].lo, 2.0 * pad);
    EXPECT_LE(u.intervals[0].hi - 2.0, 2.0 * pad);
}

TEST(BandIntervals, ZeroLipschitzIsExact) {
    BandSamples samples{{0.0, 1.0, 2.0}, {{1.0, 2.0, 1.5}}, 0.0};
    const auto bands = band_intervals(samples);
    EXPECT_EQ(bands[0].certified_lo, 1.0);
    EXPECT_EQ(bands[0].certified_hi, 2.0);
}

TEST(TightenWithEnclosures, NeverCutsSampledHull) {
    const std::vector<SpectralBand> bands{{0, 1.0, 2.0, 0.5, 2.5}};
    const auto inner = tighten_with_enclosures(bands, {{0.9}, {2.2}});
    EXPECT_EQ(inner[0].certified_lo, 0.9);
    EXPECT_EQ(inner[0].certified_hi, 2.2);
    // A window that round-off places inside the hull leaves the hull intact.
    const auto edge = tighten_with_enclosures(bands, {{1.0 + 1e-15}, {2.0 - 1e-15}});
    EXPECT_EQ(edge[0].certified_lo, 1.0);
    EXPECT_EQ(edge[0].certified_hi, 2.0);
}

TEST(IntervalUnion, Disjoint) {
    const std::vector<SpectralBand> bands{band(3, 4), band(1, 2)};
    const auto u = interval_union_measure(bands, 0.0, true);
    ASSERT_EQ(u.intervals.size(), 2u);
    EXPECT_EQ(u.intervals[0].lo, 1.0);
    EXPECT_EQ(u.measure, 2.0);
}

TEST(IntervalUnion, Overlap) {
    const std::vector<SpectralBand> bands{band(1, 2), band(1.5, 4)};
    const auto u = interval_union_measure(bands, 0.0, true);
    ASSERT_EQ(u.intervals.size(), 1u);
    EXPECT_EQ(u.intervals[0].lo, 1.0);
    EXPECT_EQ(u.intervals[0].hi, 4.0);
    EXPECT_EQ(u.measure, 3.0);
}

TEST(IntervalUnion, GapToleranceAndSampledEndpoints) {
    const std::vector<SpectralBand> bands{{0, 1.0, 2.0, 0.0, 3.0}, {1, 2.5, 3.0, 2.4, 3.1}};
    EXPECT_EQ(interval_union_measure(bands, 0.5, false).intervals.size(), 1u);
    EXPECT_EQ(interval_union_measure(bands, 0.4, false).intervals.size(), 2u);
    EXPECT_DOUBLE_EQ(interval_union_measure(bands, 0.0, true).measure, 3.1);
    EXPECT_THROW(interval_union_measure(bands, -1.0, true), PreconditionError);
}

TEST(IntervalUnion, SharpnessExampleMergesToOneInterval) {
    const auto report = verify_operator(make_sharpness_example(2, 1), {.num_samples = 1024});
    ASSERT_EQ(report.measured_spectrum.intervals.size(), 1u);
    EXPECT_NEAR(report.measured_spectrum.intervals[0].lo, 2.0, 1e-9);
    EXPECT_NEAR(report.measured_spectrum.intervals[0].hi, 10.0, 1e-9);
    EXPECT_NEAR(report.measured_spectrum.measure, 8.0, 1e-9);
}

TEST(Hausdorff, MatchesBruteForce) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        auto make = [&] {
            std::vector<Interval> ivs;
            const int count = 1 + trial % 4;
            for (int i = 0; i < count; ++i) {
                const double lo = jband::testing::uniform(rng, -5.0, 5.0);
                ivs.push_back({lo, lo + jband::testing::uniform(rng, 0.0, 2.0)});
            }
            return merge_intervals(ivs, 0.0);
        };
        const auto a = make();
        const auto b = make();
        EXPECT_NEAR(hausdorff_distance(a, b), hausdorff_oracle(a, b), 1e-3);
        EXPECT_EQ(hausdorff_distance(a, a), 0.0);
    }
    EXPECT_THROW(hausdorff_distance(IntervalUnion{}, merge_intervals({{0, 1}}, 0.0)),
                 PreconditionError);
}

TEST(EnclosureBounds, ZeroCornerCollapses) {
    auto op = make_sharpness_example(2, 3);
    op.a[2] = ComplexMatrix(2, 2);
    const auto enc = enclosure_bounds(op);
    const auto k0 = hermitian_eigenvalues(split_symbol(normalized(op)).k0);
    EXPECT_EQ(enc.minus, k0);
    EXPECT_EQ(enc.plus, k0);
}

TEST(EnclosureBounds, SchrodingerContainsSamples) {
    const auto op = make_discrete_schrodinger(3);
    const auto enc = enclosure_bounds(op);
    const auto samples = sample_bands(op, 512);
    for (std::size_t n = 0; n < samples.band_count(); ++n) {
        EXPECT_LE(enc.minus[n], enc.plus[n]);
        for (double v : samples.curves[n]) {
            EXPECT_GE(v, enc.minus[n] - 1e-9);
            EXPECT_LE(v, enc.plus[n] + 1e-9);
        }
    }
}

TEST(EnclosureBounds, SharpnessWindowsCoverSpectrum) {
    for (std::size_t m = 1; m <= 3; ++m) {
        const auto enc = enclosure_bounds(make_sharpness_example(m, 3));
        std::vector<Interval> windows;
        for (std::size_t n = 0; n < enc.plus.size(); ++n) {
            windows.push_back({enc.minus[n], enc.plus[n]});
        }
        const auto u = merge_intervals(windows, 1e-12);
        ASSERT_EQ(u.intervals.size(), 1u);
        EXPECT_NEAR(u.intervals[0].lo, 2.0, 1e-9);
        EXPECT_NEAR(u.intervals[0].hi, 2.0 + 4.0 * m, 1e-9);
    }
}

TEST(TheoremBound, Examples) {
    EXPECT_NEAR(theorem_bound(make_sharpness_example(3, 2)), 12.0, 1e-12);
    EXPECT_EQ(theorem_bound(make_discrete_schrodinger(5)), 4.0);
    EXPECT_EQ(theorem_bound(scalar_operator({1.0, 2.0}, {0.0, 0.0})), 4.0);
    EXPECT_EQ(theorem_bound(scalar_operator({1.0, 0.0, 3.0}, {0.0, 0.0, 0.0})), 0.0);
    // Complex scalar coupling: nuclear norm is the modulus.
    EXPECT_NEAR(theorem_bound(scalar_operator({Complex(3.0, 4.0)}, {0.0})), 20.0, 1e-12);
}

TEST(TheoremBound, MinimumUnchangedByUnrolling) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto op = random_operator(seed, 1 + seed % 6, 1 + seed % 3, 2.0);
        EXPECT_EQ(theorem_bound(op), theorem_bound(unroll(op, 3)));
        EXPECT_EQ(theorem_bound(op), theorem_bound(normalized(op)));
    }
}

TEST(ScalarBound, Examples) {
    EXPECT_EQ(scalar_geometric_bound(make_discrete_schrodinger(1)), 4.0);
    EXPECT_NEAR(*scalar_geometric_bound(scalar_operator({1.0, 2.0}, {0.0, 0.0})),
                4.0 * std::sqrt(2.0), 1e-14);
    EXPECT_EQ(scalar_geometric_bound(scalar_operator({1.0, 1.0, 0.0}, {0.0, 0.0, 0.0})), 0.0);
    EXPECT_FALSE(scalar_geometric_bound(make_sharpness_example(2, 1)).has_value());
    // Products that underflow fall back to logarithms.
    const auto tiny = scalar_operator(std::vector<Complex>(4, 1e-100), std::vector<double>(4, 0.0));
    EXPECT_NEAR(*scalar_geometric_bound(tiny), 4e-100, 1e-112);
}

TEST(ScalarBound, DominatesTheoremBound) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto op = random_operator(seed, 1 + seed % 6, 1, 2.0);
        EXPECT_LE(theorem_bound(op), *scalar_geometric_bound(op) + 1e-12);
    }
}

TEST(EnclosureWidthSum, Examples) {
    auto flat = make_discrete_schrodinger(3);
    flat.a[1] = ComplexMatrix{{0.0}};
    const auto zero = enclosure_width_sum(flat);
    EXPECT_EQ(zero.sum, 0.0);
    EXPECT_EQ(zero.identity_value, 0.0);

    const auto free = enclosure_width_sum(make_discrete_schrodinger(1));
    EXPECT_EQ(free.identity_value, 4.0);
    EXPECT_NEAR(free.sum, 4.0, 1e-12);

    const auto sharp = enclosure_width_sum(make_sharpness_example(2, 3));
    EXPECT_NEAR(sharp.identity_value, 8.0, 1e-12);
    EXPECT_NEAR(sharp.sum, 8.0, 1e-9);
}

TEST(EnclosureWidthSum, TraceIdentityOnRandomOperators) {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const auto w = enclosure_width_sum(random_operator(seed, 1 + seed % 6, 1 + seed % 3, 2.0));
        EXPECT_LE(std::abs(w.sum - w.identity_value), 1e-9 * (1.0 + w.identity_value));
    }
}

TEST(VerifyOperator, SchrodingerEquality) {
    const auto report = verify_operator(make_discrete_schrodinger(1));
    EXPECT_NEAR(report.measured_spectrum.measure, 4.0, 1e-9);
    EXPECT_EQ(report.theorem_bound, 4.0);
    EXPECT_TRUE(report.bound_satisfied);
    EXPECT_TRUE(report.all_passed());
}

TEST(VerifyOperator, SharpnessThree) {
    const auto report = verify_operator(make_sharpness_example(3, 4));
    EXPECT_NEAR(report.measured_spectrum.measure, 12.0, 1e-9);
    EXPECT_NEAR(report.theorem_bound, 12.0, 1e-12);
    EXPECT_TRUE(report.all_passed());
}

TEST(VerifyOperator, RandomOperatorsSatisfyBound) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const auto report =
            verify_operator(random_operator(seed, 1 + seed % 6, 1 + seed % 3, 2.0), {.num_samples = 256});
        EXPECT_TRUE(report.all_passed()) << "seed " << seed;
        for (const auto& b : report.bands) {
            EXPECT_LE(b.certified_lo, b.lo);
            EXPECT_LE(b.lo, b.hi);
            EXPECT_LE(b.hi, b.certified_hi);
        }
    }
}

TEST(VerifyOperator, ReportsFailingCheckByName) {
    // An absurd negative slack forces the measure check to fail.
    const auto report = verify_operator(make_discrete_schrodinger(1), {.bound_slack = -1.0});
    EXPECT_FALSE(report.bound_satisfied);
    const auto failed = std::find_if(report.checks.begin(), report.checks.end(),
                                     [](const Check& c) { return !c.passed; });
    ASSERT_NE(failed, report.checks.end());
    EXPECT_EQ(failed->name, "measure <= theorem bound");
}

TEST(VerifyOperator, RejectsInvalidOperator) {
    auto op = make_discrete_schrodinger(2);
    op.b[1] = ComplexMatrix{{Complex(0.0, 1.0)}};
    EXPECT_THROW(verify_operator(op), PreconditionError);
}

TEST(Invariance, UnrollKeepsUnion) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto op = random_operator(seed, 1 + seed % 4, 1 + seed % 2, 1.0);
        const auto r1 = verify_operator(op, {.num_samples = 256});
        const auto r2 = verify_operator(unroll(op, 2), {.num_samples = 256});
        EXPECT_LE(hausdorff_distance(r1.measured_spectrum, r2.measured_spectrum), r1.pad + r2.pad);
    }
}

TEST(Invariance, RotationKeepsUnion) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto op = random_operator(seed + 100, 2 + seed % 4, 1 + seed % 2, 1.0);
        const auto rotated = unrotated_union(rotate_to_minimal_corner(op), 512);
        const auto plain = unrotated_union(op, 512);
        const double pad_rot = certification_pad(spectral_norm(rotate_to_minimal_corner(op).corner()), 512);
        const double pad_plain = certification_pad(spectral_norm(op.corner()), 512);
        EXPECT_LE(hausdorff_distance(rotated, plain), 2.0 * (pad_rot + pad_plain)) << "seed " << seed;
    }
}

TEST(Invariance, FlatBandsWhenACouplingVanishes) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto op = random_operator(seed, 1 + seed % 5, 1 + seed % 3, 2.0);
        op.a[seed % op.period()] = ComplexMatrix(op.block_size, op.block_size);
        EXPECT_EQ(theorem_bound(op), 0.0);
        const auto report = verify_operator(op, {.num_samples = 128});
        for (const auto& b : report.bands) {
            EXPECT_LE(b.width(), 1e-9);
        }
        EXPECT_EQ(report.pad, 0.0);
        EXPECT_TRUE(report.bound_satisfied);
    }
}

TEST(Invariance, SchrodingerPeriodIrrelevant) {
    const auto one = verify_operator(make_discrete_schrodinger(1), {.num_samples = 512});
    const auto five = verify_operator(make_discrete_schrodinger(5), {.num_samples = 512});
    EXPECT_LE(hausdorff_distance(one.measured_spectrum, five.measured_spectrum), 1e-9);
    EXPECT_EQ(theorem_bound(make_discrete_schrodinger(5)), 4.0);
}

TEST(Invariance, TruncationEigenvaluesLieInUnion) {
    const auto op = random_operator(5, 2, 2, 1.0);
    const auto report = verify_operator(op, {.num_samples = 512});
    const auto values = hermitian_eigenvalues(truncated_matrix(op, 30));
    const double dilation = 0.05 * (1.0 + 1.0);
    std::size_t inside = 0;
    for (double v : values) {
        for (const auto& iv : report.measured_spectrum.intervals) {
            if (v >= iv.lo - dilation && v <= iv.hi + dilation) {
                ++inside;
                break;
            }
        }
    }
    EXPECT_GE(static_cast<double>(inside), 0.95 * static_cast<double>(values.size()));
}

TEST(Generators, SharpnessStructure) {
    const auto op = make_sharpness_example(1, 1);
    EXPECT_EQ(op.a[0], ComplexMatrix{{1.0}});
    EXPECT_EQ(op.b[0], ComplexMatrix{{4.0}});
    const auto m3 = make_sharpness_example(3, 2);
    EXPECT_EQ(m3.b[1], (ComplexMatrix{{4.0, 0.0, 0.0}, {0.0, 8.0, 0.0}, {0.0, 0.0, 12.0}}));
    EXPECT_TRUE(validate(m3).ok());
    const auto report = verify_operator(op);
    ASSERT_EQ(report.measured_spectrum.intervals.size(), 1u);
    EXPECT_NEAR(report.measured_spectrum.intervals[0].lo, 2.0, 1e-9);
    EXPECT_NEAR(report.measured_spectrum.intervals[0].hi, 6.0, 1e-9);
    EXPECT_THROW(make_sharpness_example(0, 1), PreconditionError);
}

TEST(Generators, RandomIsDeterministicAndValid) {
    const auto a = random_operator(7, 3, 2, 1.5);
    const auto b = random_operator(7, 3, 2, 1.5);
    EXPECT_TRUE(a.same_coefficients(b));
    EXPECT_FALSE(a.same_coefficients(random_operator(8, 3, 2, 1.5)));
    for (const auto& blk : a.a) {
        for (const auto& z : blk.entries()) {
            EXPECT_LE(std::abs(z), 1.5);
        }
    }
    for (const auto& blk : a.b) {
        EXPECT_EQ(blk.hermitian_defect(), 0.0);
    }
    EXPECT_THROW(random_operator(1, 1, 1, 0.0), PreconditionError);
}

TEST(SampleDispersion, OneCurvePerBandOfTheGivenPeriod) {
    const auto samples = sample_dispersion(make_discrete_schrodinger(1), 64);
    ASSERT_EQ(samples.band_count(), 1u);
    for (std::size_t j = 0; j < 64; ++j) {
        EXPECT_NEAR(samples.curves[0][j], 2.0 * std::cos(samples.grid[j]), 1e-15);
    }
    EXPECT_EQ(samples.lipschitz, 2.0);
    const auto sharp = sample_dispersion(make_sharpness_example(1, 1), 8);
    const auto [lo, hi] = std::minmax_element(sharp.curves[0].begin(), sharp.curves[0].end());
    EXPECT_NEAR(*lo, 2.0, 1e-15);
    EXPECT_NEAR(*hi, 6.0, 1e-15);
}

TEST(SampleDispersion, SameBandsAsUnrolledSampling) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto op = random_operator(seed, 1 + seed % 4, 1 + seed % 2, 1.0);
        const auto fs = sample_dispersion(op, 768);
        const auto us = sample_bands(op, 256);
        const auto a = interval_union_measure(band_intervals(fs), 0.0, true);
        const auto b = interval_union_measure(band_intervals(us), 0.0, true);
        EXPECT_LE(hausdorff_distance(a, b), fs.pad() + us.pad() + 1e-12)
            << "seed " << seed;
    }
}
