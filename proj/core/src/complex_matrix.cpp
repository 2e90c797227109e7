#include "jband/complex_matrix.hpp"

#include "jband/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace jband {

namespace {

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError(std::string(what) + ": shape " + std::to_string(a.rows()) + "x" +
                             std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                             std::to_string(b.cols()));
    }
}

} // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows * cols) {
        throw DimensionError("ComplexMatrix: " + std::to_string(entries_.size()) +
                             " entries for a " + std::to_string(rows) + "x" +
                             std::to_string(cols) + " matrix");
    }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
    entries_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) {
            throw DimensionError("ComplexMatrix: ragged initializer list");
        }
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        out(i, i) = 1.0;
    }
    return out;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
    ComplexMatrix out(values.size(), values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        out(i, i) = values[i];
    }
    return out;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
    require_same_shape(*this, rhs, "operator+=");
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        entries_[i] += rhs.entries_[i];
    }
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
    require_same_shape(*this, rhs, "operator-=");
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        entries_[i] -= rhs.entries_[i];
    }
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
    for (auto& z : entries_) {
        z *= s;
    }
    return *this;
}

double ComplexMatrix::max_abs() const noexcept {
    double out = 0.0;
    for (const auto& z : entries_) {
        out = std::max(out, std::abs(z));
    }
    return out;
}

double ComplexMatrix::frobenius_norm() const noexcept {
    double sum = 0.0;
    for (const auto& z : entries_) {
        sum += std::norm(z);
    }
    return std::sqrt(sum);
}

Complex ComplexMatrix::trace() const {
    if (!square()) {
        throw DimensionError("trace of a non-square matrix");
    }
    Complex out = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) {
        out += (*this)(i, i);
    }
    return out;
}

bool ComplexMatrix::all_finite() const noexcept {
    return std::all_of(entries_.begin(), entries_.end(), [](const Complex& z) {
        return std::isfinite(z.real()) && std::isfinite(z.imag());
    });
}

bool ComplexMatrix::is_zero() const noexcept {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const Complex& z) { return z == Complex(0.0); });
}

double ComplexMatrix::hermitian_defect() const {
    if (!square()) {
        throw DimensionError("hermitian_defect of a non-square matrix");
    }
    double out = 0.0;
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = r; c < cols_; ++c) {
            out = std::max(out, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
        }
    }
    return out;
}

void ComplexMatrix::set_block(std::size_t r0, std::size_t c0, const ComplexMatrix& rhs) {
    if (r0 + rhs.rows() > rows_ || c0 + rhs.cols() > cols_) {
        throw DimensionError("set_block: block exceeds matrix bounds");
    }
    for (std::size_t r = 0; r < rhs.rows(); ++r) {
        std::copy_n(&rhs.entries_[r * rhs.cols_], rhs.cols_, &entries_[(r0 + r) * cols_ + c0]);
    }
}

ComplexMatrix ComplexMatrix::block(std::size_t r0, std::size_t c0, std::size_t rows,
                                   std::size_t cols) const {
    if (r0 + rows > rows_ || c0 + cols > cols_) {
        throw DimensionError("block: range exceeds matrix bounds");
    }
    ComplexMatrix out(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        std::copy_n(&entries_[(r0 + r) * cols_ + c0], cols, &out.entries_[r * cols]);
    }
    return out;
}

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) {
    lhs += rhs;
    return lhs;
}

ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) {
    lhs -= rhs;
    return lhs;
}

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
    if (lhs.cols() != rhs.rows()) {
        throw DimensionError("operator*: inner dimensions " + std::to_string(lhs.cols()) +
                             " and " + std::to_string(rhs.rows()) + " differ");
    }
    ComplexMatrix out(lhs.rows(), rhs.cols());
    for (std::size_t i = 0; i < lhs.rows(); ++i) {
        for (std::size_t k = 0; k < lhs.cols(); ++k) {
            const Complex lik = lhs(i, k);
            if (lik == Complex(0.0)) {
                continue;
            }
            for (std::size_t j = 0; j < rhs.cols(); ++j) {
                out(i, j) += lik * rhs(k, j);
            }
        }
    }
    return out;
}

ComplexMatrix operator*(Complex s, ComplexMatrix m) {
    m *= s;
    return m;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_shape(a, b, "max_abs_diff");
    double out = 0.0;
    const auto ea = a.entries();
    const auto eb = b.entries();
    for (std::size_t i = 0; i < ea.size(); ++i) {
        out = std::max(out, std::abs(ea[i] - eb[i]));
    }
    return out;
}

} // namespace jband
