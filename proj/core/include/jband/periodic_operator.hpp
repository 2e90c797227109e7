#pragma once

#include "jband/complex_matrix.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace jband {

/// p-periodic block Jacobi operator
///
///   (J y)_n = a_n y_{n+1} + b_n y_n + a_{n-1}^* y_{n-1},  y_n in C^m.
///
/// Storage is 0-based over one period: b[i] is the diagonal block of site i and
/// a[i] couples site i to site i+1. The last coupling a[p-1] wraps across the
/// period boundary and is the block that lands in the corner of the Floquet symbol.
///
/// `base_period` and `shift` record provenance: site i of this operator is site
/// (i + shift) mod base_period of the operator it was derived from.
struct PeriodicJacobiOperator {
    std::size_t block_size = 1;
    std::vector<ComplexMatrix> a;
    std::vector<ComplexMatrix> b;
    std::size_t base_period = 0;
    std::size_t shift = 0;

    PeriodicJacobiOperator() = default;
    PeriodicJacobiOperator(std::size_t m, std::vector<ComplexMatrix> a_blocks,
                           std::vector<ComplexMatrix> b_blocks);

    std::size_t period() const noexcept { return a.size(); }
    /// Dimension p*m of the Floquet fibers.
    std::size_t fiber_dim() const noexcept { return period() * block_size; }
    const ComplexMatrix& corner() const { return a.back(); }
    /// Index, in the labelling of the source operator, of the corner coupling.
    std::size_t corner_label() const;
    /// Largest entry modulus over all blocks.
    double coefficient_scale() const;

    /// Coefficient equality; provenance is ignored.
    bool same_coefficients(const PeriodicJacobiOperator& other) const;
};

struct Violation {
    enum class Kind { Shape, Dimension, NonFinite, NotHermitian };
    Kind kind;
    char list;          // 'a', 'b', or '-' for operator-level problems
    std::size_t index;  // block index within the list
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const noexcept { return violations.empty(); }
    std::string summary() const;
};

ValidationReport validate(const PeriodicJacobiOperator& op);

/// Throws PreconditionError carrying the validation summary when op is invalid.
void require_valid(const PeriodicJacobiOperator& op);

/// Cyclic relabelling of sites that puts the coupling of smallest nuclear norm in
/// the corner (smallest index on ties). Returns the input unchanged when the
/// current corner already attains the minimum.
PeriodicJacobiOperator rotate_to_minimal_corner(const PeriodicJacobiOperator& op);

/// The same lattice operator described with period k*p.
PeriodicJacobiOperator unroll(const PeriodicJacobiOperator& op, std::size_t k);

/// rotate_to_minimal_corner followed by unrolling to period >= 3. Idempotent.
PeriodicJacobiOperator normalized(const PeriodicJacobiOperator& op);

/// Floquet fiber K(x): block tridiagonal with b on the diagonal, a on the
/// superdiagonal, e^{-ix} a_corner^* top-right and e^{ix} a_corner bottom-left.
/// Exactly Hermitian. Requires period >= 3 (use unroll or normalized).
ComplexMatrix floquet_symbol(const PeriodicJacobiOperator& op, double x);

/// Bloch fiber at quasi-momentum theta for any period p >= 1: the restriction of
/// J to sequences with y_{n+p} = e^{i theta} y_n. Couplings that wrap onto the
/// same block (p = 1) or the same off-diagonal position (p = 2) are summed.
/// Equal to floquet_symbol when p >= 3.
ComplexMatrix bloch_fiber(const PeriodicJacobiOperator& op, double theta);

struct SymbolSplit {
    ComplexMatrix k0;      // K(x) with the corner blocks removed
    ComplexMatrix abs_k1;  // |K_1| = (K_1 K_1^*)^{1/2}, independent of x
    std::size_t corner_index = 0;
};

/// K(x) = K0 + K1(x) and the closed form of |K1|: psd_sqrt(a_c^* a_c) in the
/// first diagonal block, psd_sqrt(a_c a_c^*) in the last, zero elsewhere.
SymbolSplit split_symbol(const PeriodicJacobiOperator& op);

/// Dirichlet section of the operator on `periods` consecutive periods.
ComplexMatrix truncated_matrix(const PeriodicJacobiOperator& op, std::size_t periods);

} // namespace jband
