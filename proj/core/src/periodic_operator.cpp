#include "jband/periodic_operator.hpp"

#include "jband/errors.hpp"
#include "jband/hermitian.hpp"

#include <algorithm>
#include <sstream>

namespace jband {

PeriodicJacobiOperator::PeriodicJacobiOperator(std::size_t m, std::vector<ComplexMatrix> a_blocks,
                                               std::vector<ComplexMatrix> b_blocks)
    : block_size(m), a(std::move(a_blocks)), b(std::move(b_blocks)), base_period(a.size()) {}

std::size_t PeriodicJacobiOperator::corner_label() const {
    const std::size_t base = base_period == 0 ? period() : base_period;
    if (base == 0) {
        return 0;
    }
    return (shift + period() - 1) % base;
}

double PeriodicJacobiOperator::coefficient_scale() const {
    double out = 0.0;
    for (const auto& blk : a) {
        out = std::max(out, blk.max_abs());
    }
    for (const auto& blk : b) {
        out = std::max(out, blk.max_abs());
    }
    return out;
}

bool PeriodicJacobiOperator::same_coefficients(const PeriodicJacobiOperator& other) const {
    return block_size == other.block_size && a == other.a && b == other.b;
}

std::string ValidationReport::summary() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < violations.size(); ++i) {
        if (i != 0) {
            out << "; ";
        }
        out << violations[i].message;
    }
    return out.str();
}

ValidationReport validate(const PeriodicJacobiOperator& op) {
    ValidationReport report;
    auto add = [&](Violation::Kind kind, char list, std::size_t index, std::string msg) {
        report.violations.push_back({kind, list, index, std::move(msg)});
    };

    const std::size_t m = op.block_size;
    if (m == 0) {
        add(Violation::Kind::Shape, '-', 0, "block size m must be positive");
    }
    if (op.a.empty()) {
        add(Violation::Kind::Shape, '-', 0, "period p must be positive (a is empty)");
    }
    if (op.a.size() != op.b.size()) {
        add(Violation::Kind::Shape, '-', 0,
            "a has " + std::to_string(op.a.size()) + " blocks but b has " +
                std::to_string(op.b.size()));
    }

    auto check_list = [&](const std::vector<ComplexMatrix>& blocks, char list) {
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            const auto& blk = blocks[i];
            const std::string name = std::string(1, list) + "[" + std::to_string(i) + "]";
            if (blk.rows() != m || blk.cols() != m) {
                add(Violation::Kind::Dimension, list, i,
                    name + " is " + std::to_string(blk.rows()) + "x" + std::to_string(blk.cols()) +
                        ", expected " + std::to_string(m) + "x" + std::to_string(m));
                continue;
            }
            if (!blk.all_finite()) {
                add(Violation::Kind::NonFinite, list, i, name + " has non-finite entries");
                continue;
            }
            if (list == 'b') {
                const double defect = blk.hermitian_defect();
                if (defect > kHermitianTolerance * (1.0 + blk.max_abs())) {
                    add(Violation::Kind::NotHermitian, list, i,
                        name + " is not Hermitian (max|b - b*| = " + std::to_string(defect) + ")");
                }
            }
        }
    };
    check_list(op.a, 'a');
    check_list(op.b, 'b');
    return report;
}

void require_valid(const PeriodicJacobiOperator& op) {
    const auto report = validate(op);
    if (!report.ok()) {
        throw PreconditionError("invalid operator: " + report.summary());
    }
}

PeriodicJacobiOperator rotate_to_minimal_corner(const PeriodicJacobiOperator& op) {
    const std::size_t p = op.period();
    if (p <= 1) {
        return op;
    }
    std::vector<double> norms(p);
    std::transform(op.a.begin(), op.a.end(), norms.begin(),
                   [](const ComplexMatrix& blk) { return nuclear_norm(blk); });
    const double smallest = *std::min_element(norms.begin(), norms.end());
    if (norms[p - 1] == smallest) {
        return op;
    }
    const std::size_t target =
        static_cast<std::size_t>(std::find(norms.begin(), norms.end(), smallest) - norms.begin());

    // New site i is old site (target + 1 + i) mod p, so old a[target] ends up last.
    const std::size_t offset = target + 1;
    PeriodicJacobiOperator out = op;
    for (std::size_t i = 0; i < p; ++i) {
        out.a[i] = op.a[(offset + i) % p];
        out.b[i] = op.b[(offset + i) % p];
    }
    const std::size_t base = op.base_period == 0 ? p : op.base_period;
    out.base_period = base;
    out.shift = (op.shift + offset) % base;
    return out;
}

PeriodicJacobiOperator unroll(const PeriodicJacobiOperator& op, std::size_t k) {
    if (k == 0) {
        throw PreconditionError("unroll: repetition count must be positive");
    }
    PeriodicJacobiOperator out = op;
    out.base_period = op.base_period == 0 ? op.period() : op.base_period;
    out.a.clear();
    out.b.clear();
    out.a.reserve(k * op.period());
    out.b.reserve(k * op.period());
    for (std::size_t rep = 0; rep < k; ++rep) {
        out.a.insert(out.a.end(), op.a.begin(), op.a.end());
        out.b.insert(out.b.end(), op.b.begin(), op.b.end());
    }
    return out;
}

PeriodicJacobiOperator normalized(const PeriodicJacobiOperator& op) {
    require_valid(op);
    PeriodicJacobiOperator rotated = rotate_to_minimal_corner(op);
    const std::size_t p = rotated.period();
    const std::size_t k = (3 + p - 1) / p;
    return k > 1 ? unroll(rotated, k) : rotated;
}

namespace {

void require_unrolled(const PeriodicJacobiOperator& op, const char* what) {
    if (op.period() < 3) {
        throw PreconditionError(std::string(what) + ": period " + std::to_string(op.period()) +
                                " < 3; unroll the operator first");
    }
}

// Fiber without corner blocks.
ComplexMatrix assemble_k0(const PeriodicJacobiOperator& op) {
    const std::size_t p = op.period();
    const std::size_t m = op.block_size;
    ComplexMatrix k(p * m, p * m);
    for (std::size_t i = 0; i < p; ++i) {
        k.set_block(i * m, i * m, op.b[i]);
        if (i + 1 < p) {
            k.set_block(i * m, (i + 1) * m, op.a[i]);
            k.set_block((i + 1) * m, i * m, op.a[i].adjoint());
        }
    }
    return k;
}

} // namespace

ComplexMatrix floquet_symbol(const PeriodicJacobiOperator& op, double x) {
    require_unrolled(op, "floquet_symbol");
    const std::size_t p = op.period();
    const std::size_t m = op.block_size;
    ComplexMatrix k = assemble_k0(op);
    const ComplexMatrix lower = std::polar(1.0, x) * op.corner();
    k.set_block((p - 1) * m, 0, lower);
    k.set_block(0, (p - 1) * m, lower.adjoint());
    return k;
}

ComplexMatrix bloch_fiber(const PeriodicJacobiOperator& op, double theta) {
    const std::size_t p = op.period();
    const std::size_t m = op.block_size;
    if (p >= 3) {
        return floquet_symbol(op, theta);
    }
    if (p == 0) {
        throw PreconditionError("bloch_fiber: empty operator");
    }
    ComplexMatrix k(p * m, p * m);
    auto accumulate = [&](std::size_t bi, std::size_t bj, const ComplexMatrix& blk) {
        for (std::size_t r = 0; r < m; ++r) {
            for (std::size_t c = 0; c < m; ++c) {
                k(bi * m + r, bj * m + c) += blk(r, c);
            }
        }
    };
    const Complex phase = std::polar(1.0, theta);
    for (std::size_t i = 0; i < p; ++i) {
        accumulate(i, i, op.b[i]);
        if (i + 1 < p) {
            accumulate(i, i + 1, op.a[i]);
            accumulate(i + 1, i, op.a[i].adjoint());
        }
    }
    const ComplexMatrix wrap = phase * op.corner();
    accumulate(p - 1, 0, wrap);
    accumulate(0, p - 1, wrap.adjoint());
    return k;
}

SymbolSplit split_symbol(const PeriodicJacobiOperator& op) {
    require_unrolled(op, "split_symbol");
    const std::size_t p = op.period();
    const std::size_t m = op.block_size;
    const ComplexMatrix& corner = op.corner();

    SymbolSplit out{assemble_k0(op), ComplexMatrix(p * m, p * m), op.corner_label()};
    if (!corner.is_zero()) {
        out.abs_k1.set_block(0, 0, psd_sqrt(corner.adjoint() * corner));
        out.abs_k1.set_block((p - 1) * m, (p - 1) * m, psd_sqrt(corner * corner.adjoint()));
    }
    return out;
}

ComplexMatrix truncated_matrix(const PeriodicJacobiOperator& op, std::size_t periods) {
    if (periods == 0) {
        throw PreconditionError("truncated_matrix: need at least one period");
    }
    const std::size_t p = op.period();
    const std::size_t m = op.block_size;
    const std::size_t sites = periods * p;
    ComplexMatrix out(sites * m, sites * m);
    for (std::size_t s = 0; s < sites; ++s) {
        out.set_block(s * m, s * m, op.b[s % p]);
        if (s + 1 < sites) {
            out.set_block(s * m, (s + 1) * m, op.a[s % p]);
            out.set_block((s + 1) * m, s * m, op.a[s % p].adjoint());
        }
    }
    return out;
}

} // namespace jband
