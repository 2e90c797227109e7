#include "commands.hpp"

#include "jband/errors.hpp"
#include "jband/examples.hpp"
#include "jband/hermitian.hpp"
#include "operator_file.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <memory>
#include <numbers>
#include <ostream>

namespace jband::cli {

namespace {

using nlohmann::json;

// Human reports use six decimals.
std::string fixed(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

// Machine output: shortest representation that round-trips.
std::string exact(double v) {
    char buf[64];
    const auto result = std::to_chars(buf, buf + sizeof buf, v);
    return {buf, result.ptr};
}

std::string format_name(Format f) {
    switch (f) {
    case Format::Text:
        return "text";
    case Format::Json:
        return "json";
    case Format::Csv:
        return "csv";
    }
    return "?";
}

std::string describe_gap_tol(const RunConfig& cfg, double resolved) {
    return cfg.gap_tol ? fixed(resolved) : "2*pad=" + fixed(resolved);
}

void print_header(std::ostream& out, const char* command, const RunConfig& cfg,
                  const PeriodicJacobiOperator& op, const BoundsReport& r) {
    out << "# jband " << command << "\n"
        << "# samples=" << cfg.num_samples << " gap_tol=" << describe_gap_tol(cfg, r.gap_tol)
        << " certified=" << (cfg.use_certified ? "true" : "false")
        << " format=" << format_name(cfg.format) << "\n"
        << "# operator: p=" << op.period() << " m=" << op.block_size
        << "; fiber period " << r.normalized_operator.period() << ", corner a["
        << r.normalized_operator.corner_label() << "], pad " << fixed(r.pad) << "\n";
}

std::string union_text(const IntervalUnion& u) {
    std::string s;
    for (std::size_t i = 0; i < u.intervals.size(); ++i) {
        if (i != 0) {
            s += " U ";
        }
        s += "[" + fixed(u.intervals[i].lo) + ", " + fixed(u.intervals[i].hi) + "]";
    }
    return s;
}

json config_json(const RunConfig& cfg, const BoundsReport& r) {
    return {{"samples", cfg.num_samples},
            {"gap_tol", r.gap_tol},
            {"gap_tol_default", !cfg.gap_tol.has_value()},
            {"use_certified", cfg.use_certified},
            {"pad", r.pad}};
}

json union_json(const IntervalUnion& u) {
    json intervals = json::array();
    for (const auto& iv : u.intervals) {
        intervals.push_back({iv.lo, iv.hi});
    }
    return {{"intervals", intervals}, {"measure", u.measure}};
}

json bands_json(const BoundsReport& r) {
    json bands = json::array();
    for (const auto& b : r.bands) {
        bands.push_back({{"index", b.index + 1},
                         {"lo", b.lo},
                         {"hi", b.hi},
                         {"certified_lo", b.certified_lo},
                         {"certified_hi", b.certified_hi}});
    }
    return bands;
}

json checks_json(const std::vector<Check>& checks) {
    json out = json::array();
    for (const auto& c : checks) {
        out.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    }
    return out;
}

json report_json(const RunConfig& cfg, const BoundsReport& r) {
    return {{"config", config_json(cfg, r)},
            {"theorem_bound", r.theorem_bound},
            {"scalar_bound", r.scalar_bound ? json(*r.scalar_bound) : json(nullptr)},
            {"enclosure_width_sum", r.enclosure_width_sum},
            {"trace_identity_value", r.trace_identity_value},
            {"measured_spectrum", union_json(r.measured_spectrum)},
            {"per_band_containment", r.per_band_containment},
            {"bound_satisfied", r.bound_satisfied},
            {"bands", bands_json(r)},
            {"enclosures", {{"minus", r.enclosures.minus}, {"plus", r.enclosures.plus}}},
            {"checks", checks_json(r.checks)}};
}

// Loads, validates and runs `body`, translating failures into exit codes.
int guarded(const std::string& input, std::ostream& err,
            const std::function<int(const PeriodicJacobiOperator&)>& body) {
    PeriodicJacobiOperator op;
    try {
        op = read_operator_file(input);
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return kIoError;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kParseError;
    }
    const auto report = validate(op);
    if (!report.ok()) {
        err << "validation failed for " << input << ":\n";
        for (const auto& v : report.violations) {
            err << "  " << v.message << "\n";
        }
        return kValidationError;
    }
    try {
        return body(op);
    } catch (const NumericalError& e) {
        err << "numerical failure: " << e.what() << "\n";
        return kNumericalError;
    } catch (const std::exception& e) {
        // bad_alloc, thread start failure and the like
        err << "error: " << e.what() << "\n";
        return kNumericalError;
    }
}

void print_check(std::ostream& out, const Check& c) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
}

// Operator-level invariants beyond those checked by verify_operator.
std::vector<Check> model_checks(const PeriodicJacobiOperator& op, const BoundsReport& r,
                                const RunConfig& cfg) {
    std::vector<Check> checks;
    const auto& fiber_op = r.normalized_operator;
    const double scale = op.coefficient_scale();

    {
        double defect = 0.0;
        double periodicity = 0.0;
        for (double x : {0.0, 0.7, 2.0, 4.4}) {
            const auto k = floquet_symbol(fiber_op, x);
            defect = std::max(defect, k.hermitian_defect());
            periodicity = std::max(
                periodicity, max_abs_diff(k, floquet_symbol(fiber_op, x + 2.0 * std::numbers::pi)));
        }
        checks.push_back({"fiber Hermitian", defect == 0.0, "max|K - K*| = " + exact(defect)});
        checks.push_back({"fiber 2pi-periodic", periodicity <= 1e-12 * (1.0 + scale),
                          "max|K(x) - K(x+2pi)| = " + exact(periodicity)});
    }

    {
        const auto k = floquet_symbol(fiber_op, 1.0);
        const auto es = hermitian_eigensystem(k);
        ComplexMatrix scaled = es.vectors;
        for (std::size_t row = 0; row < scaled.rows(); ++row) {
            for (std::size_t col = 0; col < scaled.cols(); ++col) {
                scaled(row, col) *= es.values[col];
            }
        }
        const double unitary =
            max_abs_diff(es.vectors.adjoint() * es.vectors, ComplexMatrix::identity(k.rows()));
        const double rebuild = max_abs_diff(scaled * es.vectors.adjoint(), k);
        checks.push_back({"eigensystem of K(1)",
                          unitary <= 1e-10 && rebuild <= 1e-9 * (1.0 + k.max_abs()),
                          "unitarity " + exact(unitary) + ", reconstruction " + exact(rebuild)});
    }

    {
        const auto split = split_symbol(fiber_op);
        const auto k1 = floquet_symbol(fiber_op, 0.4) - split.k0;
        const double generic = max_abs_diff(split.abs_k1, psd_sqrt(k1 * k1.adjoint()));
        const double trace_gap =
            std::abs(split.abs_k1.trace().real() - 2.0 * nuclear_norm(fiber_op.corner()));
        checks.push_back({"|K1| closed form", generic <= 1e-10,
                          "vs generic square root " + exact(generic)});
        checks.push_back({"Tr|K1| = 2 Tr|a_corner|", trace_gap <= 1e-10, "gap " + exact(trace_gap)});
    }

    {
        const double original = r.theorem_bound;
        const double unrolled = theorem_bound(fiber_op);
        checks.push_back({"bound unchanged by normalization", original == unrolled,
                          exact(original) + " vs " + exact(unrolled)});
    }

    {
        VerifyConfig vc = cfg.verify_config();
        const auto doubled = verify_operator(unroll(op, 2), vc);
        const double d = hausdorff_distance(r.measured_spectrum, doubled.measured_spectrum);
        const double allowed = r.pad + doubled.pad;
        checks.push_back({"unroll invariance", d <= allowed,
                          "Hausdorff " + exact(d) + " <= padding " + exact(allowed)});
    }

    const bool flat = std::any_of(op.a.begin(), op.a.end(),
                                  [](const ComplexMatrix& blk) { return blk.is_zero(); });
    if (flat) {
        double widest = 0.0;
        for (const auto& b : r.bands) {
            widest = std::max(widest, b.width());
        }
        checks.push_back({"flat bands (some a_n = 0)", r.theorem_bound == 0.0 && widest <= 1e-9,
                          "widest band " + exact(widest)});
    }

    {
        // Dirichlet section; capped so the dense eigenproblem stays small.
        const std::size_t per_period = op.period() * op.block_size;
        const std::size_t periods = std::max<std::size_t>(2, std::min<std::size_t>(100, 400 / per_period));
        const auto values = hermitian_eigenvalues(truncated_matrix(op, periods));
        const double dilation = 0.05 * (1.0 + scale);
        std::size_t inside = 0;
        for (double v : values) {
            for (const auto& iv : r.measured_spectrum.intervals) {
                if (v >= iv.lo - dilation && v <= iv.hi + dilation) {
                    ++inside;
                    break;
                }
            }
        }
        const double fraction = static_cast<double>(inside) / static_cast<double>(values.size());
        checks.push_back({"truncation oracle (" + std::to_string(periods) + " periods)",
                          fraction >= 0.95, fixed(100.0 * fraction) + "% of eigenvalues in union"});
    }
    return checks;
}

} // namespace

VerifyConfig RunConfig::verify_config() const {
    VerifyConfig vc;
    vc.num_samples = num_samples;
    vc.gap_tol = gap_tol;
    vc.use_certified = use_certified;
    vc.threads = threads;
    return vc;
}

int cmd_spectrum(const std::string& input, const RunConfig& cfg, std::ostream& out,
                 std::ostream& err) {
    return guarded(input, err, [&](const PeriodicJacobiOperator& op) {
        const auto r = verify_operator(op, cfg.verify_config());
        switch (cfg.format) {
        case Format::Json:
            out << json{{"config", config_json(cfg, r)},
                        {"bands", bands_json(r)},
                        {"spectrum", union_json(r.measured_spectrum)}}
                       .dump(2)
                << "\n";
            break;
        case Format::Csv:
            out << "band,lo,hi,certified_lo,certified_hi\n";
            for (const auto& b : r.bands) {
                out << b.index + 1 << "," << exact(b.lo) << "," << exact(b.hi) << ","
                    << exact(b.certified_lo) << "," << exact(b.certified_hi) << "\n";
            }
            break;
        case Format::Text:
            print_header(out, "spectrum", cfg, op, r);
            out << "band  sampled_lo  sampled_hi  certified_lo  certified_hi\n";
            for (const auto& b : r.bands) {
                char line[160];
                std::snprintf(line, sizeof line, "%4zu  %10s  %10s  %12s  %12s\n", b.index + 1,
                              fixed(b.lo).c_str(), fixed(b.hi).c_str(), fixed(b.certified_lo).c_str(),
                              fixed(b.certified_hi).c_str());
                out << line;
            }
            out << "spectrum: " << union_text(r.measured_spectrum) << ", measure "
                << fixed(r.measured_spectrum.measure) << "\n";
            break;
        }
        return int{kOk};
    });
}

int cmd_bounds(const std::string& input, const RunConfig& cfg, std::ostream& out,
               std::ostream& err) {
    return guarded(input, err, [&](const PeriodicJacobiOperator& op) {
        const auto r = verify_operator(op, cfg.verify_config());
        switch (cfg.format) {
        case Format::Json:
            out << report_json(cfg, r).dump(2) << "\n";
            break;
        case Format::Csv:
            out << "n,lambda_minus,lambda_plus\n";
            for (std::size_t n = 0; n < r.enclosures.plus.size(); ++n) {
                out << n + 1 << "," << exact(r.enclosures.minus[n]) << ","
                    << exact(r.enclosures.plus[n]) << "\n";
            }
            break;
        case Format::Text: {
            print_header(out, "bounds", cfg, op, r);
            out << "theorem bound 4 min_n Tr(a_n a_n*)^(1/2): " << fixed(r.theorem_bound) << "\n";
            if (r.scalar_bound) {
                out << "scalar bound 4 |a_1...a_p|^(1/p): " << fixed(*r.scalar_bound) << "\n"
                    << "  min_n |a_n| = " << fixed(r.theorem_bound / 4.0)
                    << " <= geometric mean " << fixed(*r.scalar_bound / 4.0) << "\n";
            } else {
                out << "scalar bound: n/a (m>1)\n";
            }
            out << "enclosure windows (eigenvalues of K0 -/+ |K1|):\n"
                << "   n  lambda_minus   lambda_plus\n";
            for (std::size_t n = 0; n < r.enclosures.plus.size(); ++n) {
                char line[128];
                std::snprintf(line, sizeof line, "%4zu  %12s  %12s\n", n + 1,
                              fixed(r.enclosures.minus[n]).c_str(), fixed(r.enclosures.plus[n]).c_str());
                out << line;
            }
            const double gap = std::abs(r.enclosure_width_sum - r.trace_identity_value);
            out << "trace identity: sum(lambda+ - lambda-) = " << fixed(r.enclosure_width_sum)
                << ", 4 Tr|a_corner| = " << fixed(r.trace_identity_value) << " (diff "
                << exact(gap) << ")\n";
            out << "containment: " << (r.per_band_containment ? "every sample inside its window"
                                                               : "VIOLATED")
                << "\n";
            out << "measure: " << fixed(r.measured_spectrum.measure) << "\n";
            out << "bound check: " << (r.bound_satisfied ? "PASS" : "FAIL") << " (measure "
                << fixed(r.measured_spectrum.measure) << (r.bound_satisfied ? " <= " : " > ")
                << fixed(r.theorem_bound) << ")\n";
            break;
        }
        }
        return int{r.bound_satisfied ? kOk : kCheckFailed};
    });
}

int cmd_bands(const std::string& input, const RunConfig& cfg, std::ostream& out,
              std::ostream& err) {
    return guarded(input, err, [&](const PeriodicJacobiOperator& op) {
        const auto samples = sample_dispersion(op, cfg.num_samples, cfg.threads);
        out << "x";
        for (std::size_t n = 0; n < samples.band_count(); ++n) {
            out << ",band_" << n + 1;
        }
        out << "\n";
        for (std::size_t j = 0; j < samples.sample_count(); ++j) {
            out << exact(samples.grid[j]);
            for (const auto& curve : samples.curves) {
                out << "," << exact(curve[j]);
            }
            out << "\n";
        }
        return int{kOk};
    });
}

int cmd_verify(const std::string& input, const RunConfig& cfg, std::ostream& out,
               std::ostream& err) {
    return guarded(input, err, [&](const PeriodicJacobiOperator& op) {
        const auto r = verify_operator(op, cfg.verify_config());
        std::vector<Check> checks{{"validation", true, "operator well formed"}};
        checks.insert(checks.end(), r.checks.begin(), r.checks.end());
        const auto extra = model_checks(op, r, cfg);
        checks.insert(checks.end(), extra.begin(), extra.end());
        const bool all = std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });

        if (cfg.format == Format::Json) {
            json doc = report_json(cfg, r);
            doc["checks"] = checks_json(checks);
            doc["all_passed"] = all;
            out << doc.dump(2) << "\n";
        } else if (cfg.format == Format::Csv) {
            out << "check,passed,detail\n";
            for (const auto& c : checks) {
                out << '"' << c.name << "\"," << (c.passed ? "true" : "false") << ",\"" << c.detail
                    << "\"\n";
            }
        } else {
            print_header(out, "verify", cfg, op, r);
            for (const auto& c : checks) {
                print_check(out, c);
            }
            out << (all ? "ALL PASS" : "SOME CHECKS FAILED") << "\n";
        }
        return int{all ? kOk : kCheckFailed};
    });
}

int cmd_example(const ExampleParams& params, std::ostream& out, std::ostream& err) {
    try {
        PeriodicJacobiOperator op;
        if (params.kind == "sharpness") {
            op = make_sharpness_example(params.m, params.p);
        } else if (params.kind == "schrodinger") {
            op = make_discrete_schrodinger(params.p);
        } else if (params.kind == "random") {
            op = random_operator(params.seed, params.p, params.m, params.scale);
        } else {
            err << "error: unknown example kind '" << params.kind
                << "' (expected sharpness, schrodinger or random)\n";
            return kParseError;
        }
        out << format_operator(op);
        return kOk;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << "\n";
        return kParseError;
    }
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Spectral bands, measure of the spectrum and its bounds for periodic "
                 "matrix-valued Jacobi operators",
                 "jband"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string input;
    std::string out_path;
    std::string format = "text";
    double gap_tol = -1.0;
    bool no_certify = false;
    ExampleParams example;

    auto add_run_flags = [&](CLI::App* sub) {
        sub->add_option("file", input, "Operator file (JSON)")->required();
        sub->add_option("--samples", cfg.num_samples, "Grid points on [0, 2pi)")
            ->check(CLI::Range(std::size_t{kMinSamples}, std::size_t{1} << 24));
        sub->add_option("--gap-tol", gap_tol, "Merge gaps up to this width (default 2*pad)")
            ->check(CLI::NonNegativeNumber);
        sub->add_flag("--no-certify", no_certify, "Use sampled instead of certified band endpoints");
        sub->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"text", "json", "csv"}));
        sub->add_option("--out", out_path, "Write output to this file instead of stdout");
        sub->add_option("--threads", cfg.threads, "Worker threads for sampling (0 = all cores)");
    };

    auto* spectrum = app.add_subcommand("spectrum", "Band intervals, merged spectrum and its measure");
    auto* bounds = app.add_subcommand("bounds", "Theorem bound, scalar bound, enclosure windows");
    auto* bands = app.add_subcommand("bands", "CSV of eigenvalue curves over the grid");
    auto* verify = app.add_subcommand("verify", "Run every invariant check on one operator");
    for (auto* sub : {spectrum, bounds, bands, verify}) {
        add_run_flags(sub);
    }

    auto* ex = app.add_subcommand("example", "Write a built-in example operator file");
    ex->add_option("kind", example.kind, "sharpness | schrodinger | random")->required();
    ex->add_option("--m", example.m, "Block size");
    ex->add_option("--p", example.p, "Period");
    ex->add_option("--seed", example.seed, "Seed for random operators");
    ex->add_option("--scale", example.scale, "Coefficient scale for random operators");
    ex->add_option("--out", out_path, "Write the file here instead of stdout");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kParseError;
    }

    if (gap_tol >= 0.0) {
        cfg.gap_tol = gap_tol;
    }
    cfg.use_certified = !no_certify;
    cfg.format = format == "json" ? Format::Json : format == "csv" ? Format::Csv : Format::Text;

    std::unique_ptr<std::ofstream> file;
    std::ostream* sink = &out;
    if (!out_path.empty()) {
        file = std::make_unique<std::ofstream>(out_path, std::ios::binary);
        if (!*file) {
            err << "error: cannot open '" << out_path << "' for writing\n";
            return kIoError;
        }
        sink = file.get();
    }

    int code = kOk;
    if (*spectrum) {
        code = cmd_spectrum(input, cfg, *sink, err);
    } else if (*bounds) {
        code = cmd_bounds(input, cfg, *sink, err);
    } else if (*bands) {
        code = cmd_bands(input, cfg, *sink, err);
    } else if (*verify) {
        code = cmd_verify(input, cfg, *sink, err);
    } else if (*ex) {
        code = cmd_example(example, *sink, err);
    }

    if (file) {
        file->flush();
        if (!*file) {
            err << "error: write to '" << out_path << "' failed\n";
            return kIoError;
        }
    }
    return code;
}

} // namespace jband::cli
