#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace jband {

using Complex = std::complex<double>;

/// Dense row-major complex matrix. Carries coefficient blocks and Floquet fibers.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
    /// Nested-list construction, e.g. {{0, 1}, {1, 0}}. Rows must have equal length.
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix zeros(std::size_t rows, std::size_t cols) { return {rows, cols}; }
    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix diagonal(std::span<const double> values);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }
    bool empty() const noexcept { return entries_.empty(); }

    Complex& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Complex& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    std::span<const Complex> entries() const noexcept { return entries_; }
    std::span<Complex> entries() noexcept { return entries_; }

    /// Conjugate transpose.
    ComplexMatrix adjoint() const;

    ComplexMatrix& operator+=(const ComplexMatrix& rhs);
    ComplexMatrix& operator-=(const ComplexMatrix& rhs);
    ComplexMatrix& operator*=(Complex s);

    /// Largest entry modulus.
    double max_abs() const noexcept;
    double frobenius_norm() const noexcept;
    Complex trace() const;
    bool all_finite() const noexcept;
    bool is_zero() const noexcept;

    /// max |H - H*| entrywise; the matrix must be square.
    double hermitian_defect() const;

    /// Copy rhs into the block whose top-left corner is (r0, c0).
    void set_block(std::size_t r0, std::size_t c0, const ComplexMatrix& rhs);
    ComplexMatrix block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const;

    friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> entries_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(Complex s, ComplexMatrix m);

/// max |A - B| entrywise. Shapes must agree.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

} // namespace jband
